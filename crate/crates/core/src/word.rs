//! Words in the free monoid on a finite, enumerated alphabet.
//!
//! Generators are referred to by their zero-based index in the fixed
//! enumeration `x_1 < x_2 < ... < x_n`. The ordering on [`Word`] is the
//! degree-lexicographic order: shorter words are smaller, and words of equal
//! length compare letter by letter.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator in the ambient enumeration.
pub type Letter = u16;

/// A word in the free monoid. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Word(indices.iter().map(|&i| i as Letter).collect())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x as Letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `left · self · right`.
    pub fn wrap(&self, left: &[Letter], right: &[Letter]) -> Word {
        let mut letters = Vec::with_capacity(left.len() + self.len() + right.len());
        letters.extend_from_slice(left);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(right);
        Word(letters)
    }

    /// Largest letter plus one, or zero for the empty word.
    pub fn min_alphabet(&self) -> usize {
        self.0.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    pub fn check_alphabet(&self, ngens: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l as usize >= ngens) {
            Some(&l) => Err(Error::IndexOutOfRange {
                index: l as usize,
                size: ngens,
            }),
            None => Ok(()),
        }
    }

    /// Position of the first occurrence of `sub` as a factor.
    pub fn find(&self, sub: &[Letter]) -> Option<usize> {
        if sub.len() > self.len() {
            return None;
        }
        if sub.is_empty() {
            return Some(0);
        }
        self.0.windows(sub.len()).position(|w| w == sub)
    }

    pub fn contains(&self, sub: &[Letter]) -> bool {
        self.find(sub).is_some()
    }

    /// All words of length `len` over `ngens` letters, ascending.
    pub fn all_of_length(ngens: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * ngens);
            for w in &out {
                for x in 0..ngens {
                    let mut l = w.0.clone();
                    l.push(x as Letter);
                    next.push(Word(l));
                }
            }
            out = next;
        }
        out
    }

    /// Render with generator labels, e.g. `x3x2`; the empty word is `1`.
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&l| {
                labels
                    .get(l as usize)
                    .cloned()
                    .unwrap_or_else(|| format!("g{}", l as usize + 1))
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word::from_indices(&v)
    }
}

/// Degree-lexicographic comparison of two words over an alphabet of
/// `ngens` generators.
pub fn compare_deglex(u: &Word, v: &Word, ngens: usize) -> Result<Ordering> {
    u.check_alphabet(ngens)?;
    v.check_alphabet(ngens)?;
    Ok(u.cmp(v))
}

/// Default labels `prefix1 .. prefixN`.
pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
