#![allow(dead_code)]

use ybalg::solution::QuadraticSet;
use ybalg::word::default_labels;

// x3x2 <-> x1x3, x3x1 <-> x2x3, x2x1 <-> x1x2, diagonal fixed
pub fn example_x() -> QuadraticSet {
    QuadraticSet::from_fn(3, |i, j| match (i, j) {
        (2, 1) => (0, 2),
        (0, 2) => (2, 1),
        (2, 0) => (1, 2),
        (1, 2) => (2, 0),
        (1, 0) => (0, 1),
        (0, 1) => (1, 0),
        _ => (i, j),
    })
    .unwrap()
}

// y2y2 <-> y1y1, y1y2 and y2y1 fixed
pub fn example_y() -> QuadraticSet {
    QuadraticSet::from_fn(2, |i, j| match (i, j) {
        (1, 1) => (0, 0),
        (0, 0) => (1, 1),
        _ => (i, j),
    })
    .unwrap()
    .with_labels(default_labels("y", 2))
    .unwrap()
}

/// Every labelled solution of order `1..=max`.
pub fn corpus(max: usize) -> Vec<QuadraticSet> {
    (1..=max)
        .flat_map(|n| ybalg::enumerate_solutions(n).unwrap())
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as usize
}

pub fn sorted<S: AsRef<str>>(v: &[S]) -> Vec<String> {
    let mut out: Vec<String> = v.iter().map(|s| s.as_ref().to_string()).collect();
    out.sort();
    out
}
