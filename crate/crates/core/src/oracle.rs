//! Exact linear algebra on spans of homogeneous polynomials.
//!
//! This is the independent check on the rewriting engine: graded
//! components of a quotient are computed as `n^m − rank` of the span of
//! all `a·f·b` inside the word space, with no normal forms involved.
//! Elimination is fraction-free over the integers.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, NcPolynomial};
use crate::presentation::QuadraticPresentation;
use crate::word::Word;

/// Largest word space the oracle will build (`6^5`).
pub const MAX_WORD_SPACE: usize = 7776;

/// Sparse integer row, keyed by column, largest column is the pivot.
type Row = BTreeMap<usize, BigInt>;

/// Incremental row-echelon form with fraction-free updates.
#[derive(Default)]
pub struct RankAccumulator {
    pivots: HashMap<usize, Row>,
}

impl RankAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Row) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&col, lead)) = row.iter().next_back() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&col) else {
                break;
            };
            // row <- p·row − l·pivot, then strip the content
            let p = pivot[&col].clone();
            let l = lead.clone();
            let g = p.gcd(&l);
            let (p, l) = (&p / &g, &l / &g);
            for v in row.values_mut() {
                *v *= &p;
            }
            for (c, v) in pivot {
                let e = row.entry(*c).or_insert_with(BigInt::zero);
                *e -= &l * v;
            }
            row.retain(|_, v| !v.is_zero());
            normalize_content(&mut row);
        }
        let col = *row.keys().next_back().expect("nonempty");
        self.pivots.insert(col, row);
        true
    }
}

fn normalize_content(row: &mut Row) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}

/// Column index of a word of length `m`: its base-`n` value, which
/// agrees with the deg-lex order among words of equal length.
fn column(word: &Word, ngens: usize) -> usize {
    word.letters().iter().fold(0usize, |acc, &l| acc * ngens + l as usize)
}

/// Converts a polynomial with rational coefficients to an integer row by
/// clearing denominators.
fn integer_row(f: &NcPolynomial, ngens: usize) -> Row {
    let mut lcm = BigInt::one();
    for (_, c) in f.terms() {
        lcm = lcm.lcm(c.denom());
    }
    f.terms()
        .map(|(w, c)| {
            let scaled: Coeff = c * Coeff::from_integer(lcm.clone());
            (column(w, ngens), scaled.to_integer())
        })
        .collect()
}

/// Rank of a set of polynomials, all homogeneous of one degree, inside
/// the word space of that degree.
pub fn rank(polys: &[NcPolynomial]) -> Result<usize> {
    let mut acc = RankAccumulator::new();
    let mut degree = None;
    for f in polys {
        if f.is_zero() {
            continue;
        }
        if !f.is_homogeneous() {
            return Err(Error::Inhomogeneous("rank needs homogeneous rows".into()));
        }
        match degree {
            None => degree = f.degree(),
            Some(d) if Some(d) != f.degree() => {
                return Err(Error::Inhomogeneous("rank needs rows of one degree".into()));
            }
            _ => {}
        }
        acc.insert(integer_row(f, f.ngens()));
    }
    Ok(acc.rank())
}

/// `dim (k⟨X⟩/(Re))_m` by exact elimination on `{a·f·b}`.
pub fn quotient_dim_oracle(p: &QuadraticPresentation, m: usize) -> Result<usize> {
    let n = p.generator_count();
    let space = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if space > MAX_WORD_SPACE as u128 {
        return Err(Error::SizeBound(format!(
            "{n}^{m} words exceeds the oracle limit of {MAX_WORD_SPACE}"
        )));
    }
    let space = space as usize;
    if m < 2 {
        return Ok(space);
    }
    let mut acc = RankAccumulator::new();
    for f in p.relations() {
        let base = integer_row(f, n);
        for left_len in 0..=m - 2 {
            let right_len = m - 2 - left_len;
            let left_count = n.pow(left_len as u32);
            let right_count = n.pow(right_len as u32);
            let shift = n.pow(2 + right_len as u32);
            let stride = n.pow(right_len as u32);
            for a in 0..left_count {
                for b in 0..right_count {
                    let row: Row = base
                        .iter()
                        .map(|(&c, v)| (a * shift + c * stride + b, v.clone()))
                        .collect();
                    acc.insert(row);
                }
            }
        }
    }
    Ok(space - acc.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff;
    use crate::presentation::yb_presentation;
    use crate::solution::tests::{example_x, example_y};
    use crate::word::default_labels;

    #[test]
    fn oracle_examples() {
        let a = yb_presentation(&example_x()).unwrap();
        assert_eq!(quotient_dim_oracle(&a, 3).unwrap(), 10);
        let b = yb_presentation(&example_y()).unwrap();
        assert_eq!(quotient_dim_oracle(&b, 3).unwrap(), 4);
        let free = QuadraticPresentation::free(default_labels("x", 2)).unwrap();
        assert_eq!(quotient_dim_oracle(&free, 3).unwrap(), 8);
        assert_eq!(quotient_dim_oracle(&a, 0).unwrap(), 1);
        assert_eq!(quotient_dim_oracle(&a, 1).unwrap(), 3);
    }

    #[test]
    fn oracle_size_bound() {
        let big = QuadraticPresentation::free(default_labels("x", 7)).unwrap();
        assert!(matches!(quotient_dim_oracle(&big, 5), Err(Error::SizeBound(_))));
    }

    #[test]
    fn rank_with_fractions() {
        let w = |v: &[usize]| Word::from_indices(v);
        let f = NcPolynomial::from_terms(2, [(coeff(1), w(&[0, 1])), (Coeff::new(1.into(), 2.into()), w(&[1, 0]))]).unwrap();
        let g = f.scale(&coeff(-4));
        let h = NcPolynomial::binomial(2, w(&[1, 1]), w(&[0, 0]));
        assert_eq!(rank(&[f.clone(), g]).unwrap(), 1);
        assert_eq!(rank(&[f, h]).unwrap(), 2);
    }
}
