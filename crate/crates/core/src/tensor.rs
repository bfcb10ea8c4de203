//! The tensor product `A ⊗ B` in matched degrees, where the Segre product
//! `A ∘ B` lives, and the transport `σ²³` of relations into it.
//!
//! A word over `W = X ∘ Y` is a sequence of pairs `w_ia = (x_i, y_a)`,
//! flattened to the letter `i·n + a`. Splitting it gives a pair of words of
//! equal length, one over `X` and one over `Y`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{normal_form, TruncatedGB};
use crate::poly::{Coeff, NcPolynomial};
use crate::word::{Letter, Word};

/// Splits a word over `W` into its `X` and `Y` components.
pub fn split_word(w: &Word, n: usize) -> (Word, Word) {
    let xs = w.letters().iter().map(|&l| l / n as Letter).collect();
    let ys = w.letters().iter().map(|&l| l % n as Letter).collect();
    (Word::new(xs), Word::new(ys))
}

/// Inverse of [`split_word`]: zips two words of equal length.
pub fn pair_word(x: &Word, y: &Word, n: usize) -> Result<Word> {
    if x.len() != y.len() {
        return Err(Error::Malformed(format!(
            "cannot pair words of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(Word::new(
        x.letters()
            .iter()
            .zip(y.letters())
            .map(|(&i, &a)| i * n as Letter + a)
            .collect(),
    ))
}

/// Element of `⊕_d A_d ⊗ B_d`, stored on pairs of normal words.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    m: usize,
    n: usize,
    terms: BTreeMap<(Word, Word), Coeff>,
}

impl TensorElement {
    pub fn zero(m: usize, n: usize) -> Self {
        TensorElement {
            m,
            n,
            terms: BTreeMap::new(),
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Coeff)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: (Word, Word), c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The same element read back as a polynomial over `W`. Linear
    /// independence of tensor elements is then a rank question over `W`.
    pub fn to_w_polynomial(&self) -> Result<NcPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|((x, y), c)| Ok((c.clone(), pair_word(x, y, self.n)?)))
            .collect::<Result<Vec<_>>>()?;
        NcPolynomial::from_terms(self.m * self.n, terms)
    }

    /// `c·(x1x3 ⊗ y1y1) + ...` with the given factor labels.
    pub fn display_with(&self, x_labels: &[String], y_labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((x, y), c)| {
                let body = format!("{} ⊗ {}", x.display_with(x_labels), y.display_with(y_labels));
                if c.is_one() {
                    body
                } else {
                    format!("{c}*({body})")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = crate::word::default_labels("x", self.m);
        let y = crate::word::default_labels("y", self.n);
        write!(f, "{}", self.display_with(&x, &y))
    }
}

/// Image of `p` in `A ⊗ B`: every `W`-word is split into its `X` and `Y`
/// components, each is reduced by its own basis, and the results are
/// expanded bilinearly.
pub fn tensor_normal_form(p: &NcPolynomial, gb_a: &TruncatedGB, gb_b: &TruncatedGB) -> Result<TensorElement> {
    let (m, n) = (gb_a.ngens(), gb_b.ngens());
    if p.ngens() != m * n {
        return Err(Error::AlphabetMismatch {
            left: m * n,
            right: p.ngens(),
        });
    }
    let mut out = TensorElement::zero(m, n);
    for (w, c) in p.terms() {
        let (x, y) = split_word(w, n);
        let fx = normal_form(&NcPolynomial::monomial(m, x, Coeff::one()), gb_a)?;
        let fy = normal_form(&NcPolynomial::monomial(n, y, Coeff::one()), gb_b)?;
        for (u, cu) in fx.terms() {
            for (v, cv) in fy.terms() {
                out.add_term((u.clone(), v.clone()), c * cu * cv);
            }
        }
    }
    Ok(out)
}

/// The Segre map `s_{m,n}`: `z_ia ↦ w_ia` is the identity on flat
/// indices, so this is [`tensor_normal_form`] of the same polynomial.
pub fn segre_map(p: &NcPolynomial, gb_a: &TruncatedGB, gb_b: &TruncatedGB) -> Result<TensorElement> {
    tensor_normal_form(p, gb_a, gb_b)
}

/// `σ²³(f ⊗ u)` for `f` over `X` and a word `u` over an alphabet of size
/// `n`: every word `x_p x_q` of `f` becomes `w_pc w_qd` for `u = y_c y_d`.
pub fn sigma23_transport(f: &NcPolynomial, u: &Word, n: usize) -> Result<NcPolynomial> {
    u.check_alphabet(n)?;
    let m = f.ngens();
    let mut out = NcPolynomial::zero(m * n);
    for (w, c) in f.terms() {
        if w.len() != u.len() {
            return Err(Error::Malformed(format!(
                "degree mismatch: word of length {} against {}",
                w.len(),
                u.len()
            )));
        }
        out.add_term(pair_word(w, u, n)?, c.clone());
    }
    Ok(out)
}

/// `σ²³(u ⊗ g)` for a word `u` over an alphabet of size `m` and `g` over `Y`.
pub fn sigma23_transport_left(u: &Word, m: usize, g: &NcPolynomial) -> Result<NcPolynomial> {
    u.check_alphabet(m)?;
    let n = g.ngens();
    let mut out = NcPolynomial::zero(m * n);
    for (w, c) in g.terms() {
        if w.len() != u.len() {
            return Err(Error::Malformed(format!(
                "degree mismatch: word of length {} against {}",
                u.len(),
                w.len()
            )));
        }
        out.add_term(pair_word(u, w, n)?, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::truncated_groebner;
    use crate::poly::coeff;
    use crate::presentation::yb_presentation;
    use crate::solution::tests::{example_x, example_y};
    use proptest::prelude::*;

    fn w(v: &[usize]) -> Word {
        Word::from_indices(v)
    }

    #[test]
    fn transport_example() {
        // (x3x2 - x1x3) ⊗ y1y1 -> w31w21 - w11w31
        let f = NcPolynomial::binomial(3, w(&[2, 1]), w(&[0, 2]));
        let got = sigma23_transport(&f, &w(&[0, 0]), 2).unwrap();
        let expected = NcPolynomial::binomial(6, w(&[4, 2]), w(&[0, 4]));
        assert_eq!(got, expected);
        let labels: Vec<String> = (1..=3).flat_map(|i| (1..=2).map(move |a| format!("w{i}{a}"))).collect();
        assert_eq!(got.display_with(&labels), "w31w21 - w11w31");

        assert!(sigma23_transport(&NcPolynomial::zero(3), &w(&[0, 1]), 2).unwrap().is_zero());
        assert!(sigma23_transport(&f, &w(&[0]), 2).is_err());

        // symmetric variant: x1x3 ⊗ (y2y2 - y1y1) -> w12w32 - w11w31
        let g = NcPolynomial::binomial(2, w(&[1, 1]), w(&[0, 0]));
        let got = sigma23_transport_left(&w(&[0, 2]), 3, &g).unwrap();
        assert_eq!(got.display_with(&labels), "w12w32 - w11w31");
    }

    #[test]
    fn normal_pair_is_kept() {
        let ga = truncated_groebner(&yb_presentation(&example_x()).unwrap(), 2).unwrap();
        let gb = truncated_groebner(&yb_presentation(&example_y()).unwrap(), 2).unwrap();
        let t = tensor_normal_form(&NcPolynomial::monomial(6, w(&[0, 0]), coeff(1)), &ga, &gb).unwrap();
        let terms: Vec<_> = t.terms().collect();
        assert_eq!(terms, vec![(&(w(&[0, 0]), w(&[0, 0])), &coeff(1))]);

        // w22w22 -> x2x2 ⊗ y2y2 -> x2x2 ⊗ y1y1
        let t = tensor_normal_form(&NcPolynomial::monomial(6, w(&[3, 3]), coeff(1)), &ga, &gb).unwrap();
        let terms: Vec<_> = t.terms().collect();
        assert_eq!(terms, vec![(&(w(&[1, 1]), w(&[0, 0])), &coeff(1))]);
    }

    #[test]
    fn truncation_is_enforced() {
        let ga = truncated_groebner(&yb_presentation(&example_x()).unwrap(), 2).unwrap();
        let gb = truncated_groebner(&yb_presentation(&example_y()).unwrap(), 2).unwrap();
        let cubic = NcPolynomial::monomial(6, w(&[1, 1, 1]), coeff(1));
        assert!(matches!(
            tensor_normal_form(&cubic, &ga, &gb),
            Err(Error::TruncationExceeded { .. })
        ));
    }

    proptest! {
        #[test]
        fn split_and_pair_are_inverse(letters in proptest::collection::vec(0usize..12, 0..6)) {
            let word = Word::from_indices(&letters);
            let (x, y) = split_word(&word, 4);
            prop_assert!(x.letters().iter().all(|&l| l < 3));
            prop_assert_eq!(pair_word(&x, &y, 4).unwrap(), word);
        }
    }
}
