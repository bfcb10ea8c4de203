//! PBW certification and the binomial skew polynomial ring conditions.

use serde::Serialize;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{is_groebner_quadratic, normal_monomials, truncated_groebner, QuadraticGbCheck};
use crate::presentation::{yb_presentation, QuadraticPresentation};
use crate::solution::{classify, permutations, QuadraticSet};
use crate::word::Word;

/// Conditions (a) to (d′) for `k⟨x_1..x_n⟩/(Re)` to be a binomial skew
/// polynomial ring: `C(n,2)` relations `x_j x_i − c_ij x_i' x_j'`, one for
/// each `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewPolynomialConditions {
    /// Exactly `C(n,2)` relations whose leading words are the descents
    /// `x_j x_i`, `j > i`, each once.
    pub shape: bool,
    /// (a) every relation is a binomial with nonzero second coefficient.
    pub nonzero_coefficients: bool,
    /// (b) `j > i'` and `i' < j'` in every relation.
    pub orientation: bool,
    /// (c) every `x_i x_j`, `i < j`, occurs as a second term.
    pub covers_ordered_pairs: bool,
    /// (d) the relations are a Gröbner basis (degree-3 overlap test).
    pub groebner: bool,
    /// (d′) the ordered monomials `x_1^a1 ⋯ x_n^an` are exactly the normal
    /// words through degree 3.
    pub terms_are_normal_basis: bool,
}

impl SkewPolynomialConditions {
    pub fn all_hold(&self) -> bool {
        self.shape
            && self.nonzero_coefficients
            && self.orientation
            && self.covers_ordered_pairs
            && self.groebner
            && self.terms_are_normal_basis
    }
}

fn is_nondecreasing(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0] <= p[1])
}

/// Evaluates (a) to (d′) under the presentation's own enumeration.
pub fn skew_polynomial_conditions(p: &QuadraticPresentation) -> Result<SkewPolynomialConditions> {
    let n = p.generator_count();
    let rels = p.relations();

    let mut descents = std::collections::BTreeSet::new();
    let mut shape = rels.len() == n * n.saturating_sub(1) / 2;
    let mut nonzero_coefficients = true;
    let mut orientation = true;
    let mut seconds = std::collections::BTreeSet::new();
    for f in rels {
        let terms: Vec<_> = f.terms().rev().collect();
        if terms.len() != 2 {
            nonzero_coefficients = false;
            shape = false;
            continue;
        }
        let (lead, _) = terms[0];
        let (second, c) = terms[1];
        let (l, s) = (lead.letters(), second.letters());
        if c.is_zero() {
            nonzero_coefficients = false;
        }
        if !(l[0] > l[1] && descents.insert((l[0], l[1]))) {
            shape = false;
        }
        if !(l[0] > s[0] && s[0] < s[1]) {
            orientation = false;
        }
        seconds.insert((s[0], s[1]));
    }
    let covers_ordered_pairs =
        (0..n).all(|i| (i + 1..n).all(|j| seconds.contains(&(i as u16, j as u16))));

    let distinct_leads = p.leading_words().iter().collect::<std::collections::BTreeSet<_>>().len() == rels.len();
    let groebner = distinct_leads && is_groebner_quadratic(p)?.is_groebner;

    let gb = truncated_groebner(p, 3)?;
    let mut terms_are_normal_basis = true;
    for d in 0..=3 {
        let normal = normal_monomials(&gb, d)?.words;
        let ordered: Vec<Word> = Word::all_of_length(n, d).into_iter().filter(is_nondecreasing).collect();
        if normal != ordered {
            terms_are_normal_basis = false;
        }
    }

    Ok(SkewPolynomialConditions {
        shape,
        nonzero_coefficients,
        orientation,
        covers_ordered_pairs,
        groebner,
        terms_are_normal_basis,
    })
}

/// PBW diagnostics for the Yang-Baxter algebra of a solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwReport {
    pub is_square_free: bool,
    /// The relations form a Gröbner basis under the given enumeration.
    pub groebner_certified: bool,
    pub unresolved_overlaps: usize,
    pub witness: Option<(Vec<usize>, String)>,
    pub skew_conditions: SkewPolynomialConditions,
    /// For a square-free solution that is not PBW under the given
    /// enumeration: a re-enumeration `perm` (old index `k` becomes
    /// `perm[k]`) under which it is.
    pub pbw_enumeration: Option<Vec<usize>>,
    /// Set when the data contradict "PBW under some enumeration iff
    /// square-free".
    pub counterexample_alert: bool,
}

/// Largest order for which [`pbw_check`] searches re-enumerations.
pub const MAX_ENUMERATION_SEARCH: usize = 7;

pub fn pbw_check(qs: &QuadraticSet) -> Result<PbwReport> {
    let class = classify(qs);
    if !class.is_solution {
        return Err(Error::Precondition("PBW check needs a solution".into()));
    }
    let p = yb_presentation(qs)?;
    let check: QuadraticGbCheck = is_groebner_quadratic(&p)?;
    let skew_conditions = skew_polynomial_conditions(&p)?;

    let mut pbw_enumeration = None;
    let mut alert = check.is_groebner && !class.is_square_free;
    if class.is_square_free && !check.is_groebner && qs.size() <= MAX_ENUMERATION_SEARCH {
        pbw_enumeration = find_pbw_enumeration(qs)?;
        alert = pbw_enumeration.is_none();
    }
    Ok(PbwReport {
        is_square_free: class.is_square_free,
        groebner_certified: check.is_groebner,
        unresolved_overlaps: check.unresolved_overlaps,
        witness: check
            .witness
            .map(|(w, r)| (w.to_indices(), r.display_with(p.labels()))),
        skew_conditions,
        pbw_enumeration,
        counterexample_alert: alert,
    })
}

/// First re-enumeration (in lexicographic order of permutations) under
/// which the Yang-Baxter relations form a Gröbner basis.
pub fn find_pbw_enumeration(qs: &QuadraticSet) -> Result<Option<Vec<usize>>> {
    if qs.size() > MAX_ENUMERATION_SEARCH {
        return Err(Error::SizeBound(format!(
            "enumeration search is limited to order {MAX_ENUMERATION_SEARCH}"
        )));
    }
    for perm in permutations(qs.size()) {
        let relabelled = qs.relabel(&perm)?;
        if is_groebner_quadratic(&yb_presentation(&relabelled)?)?.is_groebner {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::enumerate_solutions;
    use crate::solution::tests::{example_x, example_y};

    #[test]
    fn pbw_examples() {
        let rep = pbw_check(&example_x()).unwrap();
        assert!(rep.is_square_free && rep.groebner_certified);
        assert!(rep.skew_conditions.all_hold());
        assert!(!rep.counterexample_alert);

        let rep = pbw_check(&example_y()).unwrap();
        assert!(!rep.is_square_free && !rep.groebner_certified);
        assert!(!rep.skew_conditions.shape);
        assert_eq!(rep.witness.as_ref().unwrap().0, vec![1, 1, 1]);
        assert!(!rep.counterexample_alert);

        for n in 1..=4 {
            let rep = pbw_check(&QuadraticSet::flip(n)).unwrap();
            assert!(rep.is_square_free && rep.groebner_certified && rep.skew_conditions.all_hold());
        }
    }

    #[test]
    fn pbw_rejects_non_solutions() {
        assert!(pbw_check(&QuadraticSet::identity(2)).is_err());
    }

    #[test]
    fn pbw_iff_square_free_on_small_orders() {
        for n in 1..=3 {
            for qs in enumerate_solutions(n).unwrap() {
                let rep = pbw_check(&qs).unwrap();
                assert!(!rep.counterexample_alert, "{qs:?}");
                if rep.groebner_certified {
                    assert!(rep.is_square_free);
                    assert!(rep.skew_conditions.all_hold());
                }
                if let Some(perm) = &rep.pbw_enumeration {
                    let fixed = pbw_check(&qs.relabel(perm).unwrap()).unwrap();
                    assert!(fixed.groebner_certified);
                }
            }
        }
    }

    #[test]
    fn bad_enumeration_of_square_free_solution_is_not_an_alert() {
        // x3x2 <-> x1x3 relabelled so that the relations lose their PBW shape
        let qs = example_x().relabel(&[1, 2, 0]).unwrap();
        let rep = pbw_check(&qs).unwrap();
        assert!(rep.is_square_free);
        assert!(!rep.counterexample_alert);
        if !rep.groebner_certified {
            assert!(rep.pbw_enumeration.is_some());
        }
    }
}
