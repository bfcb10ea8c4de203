//! Noncommutative polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

/// Ground field element.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite linear combination of words over a fixed alphabet of
/// `ngens` generators. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPolynomial {
    ngens: usize,
    terms: BTreeMap<Word, Coeff>,
}

impl NcPolynomial {
    pub fn zero(ngens: usize) -> Self {
        NcPolynomial {
            ngens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ngens: usize) -> Self {
        Self::monomial(ngens, Word::empty(), Coeff::one())
    }

    pub fn monomial(ngens: usize, word: Word, c: Coeff) -> Self {
        let mut p = Self::zero(ngens);
        p.add_term(word, c);
        p
    }

    pub fn generator(ngens: usize, x: usize) -> Self {
        Self::monomial(ngens, Word::letter(x), Coeff::one())
    }

    /// `u - v` for two words.
    pub fn binomial(ngens: usize, u: Word, v: Word) -> Self {
        let mut p = Self::zero(ngens);
        p.add_term(u, Coeff::one());
        p.add_term(v, -Coeff::one());
        p
    }

    /// Builds a polynomial from `(coefficient, word)` pairs, validating
    /// letters against the alphabet.
    pub fn from_terms<I>(ngens: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coeff, Word)>,
    {
        let mut p = Self::zero(ngens);
        for (c, w) in terms {
            w.check_alphabet(ngens)?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending deg-lex order of their words.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Removes and returns the deg-lex largest term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Coeff)> {
        self.terms.pop_last()
    }

    /// Deg-lex maximal word together with its coefficient.
    pub fn leading_term(&self) -> Option<(&Word, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Result<&Word> {
        self.leading_term().map(|(w, _)| w).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self) -> Option<&Coeff> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Largest word length occurring, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(d) => lens.all(|l| l == d),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.ngens);
        }
        NcPolynomial {
            ngens: self.ngens,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ngens != other.ngens {
            return Err(Error::AlphabetMismatch {
                left: self.ngens,
                right: other.ngens,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Bilinear concatenation product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.ngens);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn wrap(&self, left: &Word, right: &Word) -> Self {
        NcPolynomial {
            ngens: self.ngens,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.wrap(left.letters(), right.letters()), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the polynomial over another alphabet of the same or
    /// larger size. Used for the identity substitution `z_ia -> w_ia`.
    pub fn with_alphabet(&self, ngens: usize) -> Result<Self> {
        for w in self.terms.keys() {
            w.check_alphabet(ngens)?;
        }
        Ok(NcPolynomial {
            ngens,
            terms: self.terms.clone(),
        })
    }

    /// Applies a letter substitution `x -> map[x]` into an alphabet of
    /// `ngens` letters.
    pub fn relabel(&self, map: &[usize], ngens: usize) -> Result<Self> {
        let mut out = Self::zero(ngens);
        for (w, c) in &self.terms {
            let letters = w
                .letters()
                .iter()
                .map(|&l| map.get(l as usize).copied().ok_or(Error::IndexOutOfRange {
                    index: l as usize,
                    size: map.len(),
                }))
                .collect::<Result<Vec<_>>>()?;
            let nw = Word::from_indices(&letters);
            nw.check_alphabet(ngens)?;
            out.add_term(nw, c.clone());
        }
        Ok(out)
    }

    /// Human-readable rendering, leading term first: `x3x2 - x1x3`.
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let word = w.display_with(labels);
            if abs.is_one() {
                s.push_str(&word);
            } else if w.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                s.push_str(&format!("{abs}*{word}"));
            }
        }
        s
    }
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = crate::word::default_labels("x", self.ngens);
        write!(f, "{}", self.display_with(&labels))
    }
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.try_add(rhs).expect("alphabet mismatch in +")
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.try_sub(rhs).expect("alphabet mismatch in -")
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        self.scale(&-Coeff::one())
    }
}

/// Free-function form of [`NcPolynomial::multiply`].
pub fn multiply(f: &NcPolynomial, g: &NcPolynomial) -> Result<NcPolynomial> {
    f.multiply(g)
}

/// Free-function form of [`NcPolynomial::leading_monomial`].
pub fn leading_monomial(f: &NcPolynomial) -> Result<Word> {
    f.leading_monomial().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> NcPolynomial {
        NcPolynomial::generator(3, i)
    }

    fn w(v: &[usize]) -> Word {
        Word::from_indices(v)
    }

    #[test]
    fn multiply_examples() {
        let p = multiply(&x(0), &x(1)).unwrap();
        assert_eq!(p, NcPolynomial::monomial(3, w(&[0, 1]), coeff(1)));

        let f = &x(0) - &x(1);
        let g = &x(0) + &x(1);
        let prod = multiply(&f, &g).unwrap();
        let expected = NcPolynomial::from_terms(
            3,
            [
                (coeff(1), w(&[0, 0])),
                (coeff(1), w(&[0, 1])),
                (coeff(-1), w(&[1, 0])),
                (coeff(-1), w(&[1, 1])),
            ],
        )
        .unwrap();
        assert_eq!(prod, expected);

        assert!(multiply(&f, &NcPolynomial::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn multiply_checks_alphabet() {
        let a = NcPolynomial::generator(2, 0);
        let b = NcPolynomial::generator(3, 0);
        assert_eq!(
            multiply(&a, &b),
            Err(Error::AlphabetMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn leading_monomial_examples() {
        let f = NcPolynomial::binomial(3, w(&[2, 1]), w(&[0, 2]));
        assert_eq!(leading_monomial(&f).unwrap(), w(&[2, 1]));
        let single = NcPolynomial::monomial(3, w(&[1, 1]), coeff(5));
        assert_eq!(leading_monomial(&single).unwrap(), w(&[1, 1]));
        let sum = NcPolynomial::from_terms(3, [(coeff(1), w(&[0, 1])), (coeff(1), w(&[1, 0]))]).unwrap();
        assert_eq!(leading_monomial(&sum).unwrap(), w(&[1, 0]));
        assert_eq!(leading_monomial(&NcPolynomial::zero(3)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = NcPolynomial::binomial(2, w(&[1]), w(&[0]));
        assert!((&f - &f).is_zero());
        assert_eq!((&f - &f).len(), 0);
    }

    #[test]
    fn display() {
        let labels = crate::word::default_labels("x", 3);
        let f = NcPolynomial::binomial(3, w(&[2, 1]), w(&[0, 2]));
        assert_eq!(f.display_with(&labels), "x3x2 - x1x3");
    }

    fn poly_strategy() -> impl Strategy<Value = NcPolynomial> {
        prop::collection::vec((-3i64..4, prop::collection::vec(0usize..2, 0..3)), 0..4).prop_map(
            |ts| {
                NcPolynomial::from_terms(2, ts.into_iter().map(|(c, l)| (coeff(c), Word::from_indices(&l))))
                    .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn ring_laws(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
            let fg_h = f.multiply(&g).unwrap().multiply(&h).unwrap();
            let f_gh = f.multiply(&g.multiply(&h).unwrap()).unwrap();
            prop_assert_eq!(fg_h, f_gh);
            let left = f.multiply(&(&g + &h)).unwrap();
            let right = &f.multiply(&g).unwrap() + &f.multiply(&h).unwrap();
            prop_assert_eq!(left, right);
            let left = (&g + &h).multiply(&f).unwrap();
            let right = &g.multiply(&f).unwrap() + &h.multiply(&f).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
