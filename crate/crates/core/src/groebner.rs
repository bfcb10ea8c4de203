//! Degree-truncated noncommutative Gröbner bases of homogeneous ideals in
//! the free associative algebra, under the deg-lex order.
//!
//! The ideal is processed one degree at a time. At degree `d` the
//! candidates are the input generators of degree `d` together with the
//! S-elements `g₁·c − a·g₂` of every overlap ambiguity
//! `a·LM(g₂) = LM(g₁)·c` of total length `d`. Each candidate is reduced to
//! normal form modulo the basis of degree `< d`, and the survivors are
//! brought to reduced row echelon form among themselves. Because an overlap
//! of two elements is strictly longer than either, every ambiguity of
//! length `d` only involves elements of degree `< d`, so after degree `d`
//! the basis is a reduced Gröbner basis of the ideal through degree `d`.
//!
//! Results are certified only through [`TruncatedGB::complete_through`];
//! every operation that would need higher degrees fails with
//! [`Error::TruncationExceeded`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle;
use crate::poly::NcPolynomial;
use crate::presentation::{encode_polynomial, PresentationDocument, QuadraticPresentation, TermDocument};
use crate::word::{Letter, Word};

/// Rewriting system `LM(g) → LM(g) − g` for a set of monic polynomials.
#[derive(Clone, Debug)]
pub struct Rewriter {
    ngens: usize,
    rules: Vec<NcPolynomial>,
    by_lead: HashMap<Vec<Letter>, usize>,
    lead_lengths: BTreeSet<usize>,
}

impl Rewriter {
    pub fn new(ngens: usize, rules: Vec<NcPolynomial>) -> Result<Self> {
        let mut by_lead = HashMap::new();
        let mut lead_lengths = BTreeSet::new();
        for (k, g) in rules.iter().enumerate() {
            if g.ngens() != ngens {
                return Err(Error::AlphabetMismatch {
                    left: ngens,
                    right: g.ngens(),
                });
            }
            if !g.is_monic() {
                return Err(Error::InvalidRelation(format!("rule {k} is not monic")));
            }
            let lead = g.leading_monomial()?.letters().to_vec();
            lead_lengths.insert(lead.len());
            by_lead.entry(lead).or_insert(k);
        }
        Ok(Rewriter {
            ngens,
            rules,
            by_lead,
            lead_lengths,
        })
    }

    pub fn rules(&self) -> &[NcPolynomial] {
        &self.rules
    }

    /// Leftmost occurrence of some leading word in `w`.
    pub fn find_reducer(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &len in &self.lead_lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&k) = self.by_lead.get(&w[start..start + len]) {
                    return Some((start, k));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[Letter]) -> bool {
        self.find_reducer(w).is_none()
    }

    /// Whether some leading word is a suffix of `w`.
    fn has_lead_suffix(&self, w: &[Letter]) -> bool {
        self.lead_lengths
            .iter()
            .take_while(|&&len| len <= w.len())
            .any(|&len| self.by_lead.contains_key(&w[w.len() - len..]))
    }

    /// Full reduction: rewrites the largest reducible term until every
    /// remaining word is normal.
    pub fn reduce(&self, f: &NcPolynomial) -> NcPolynomial {
        let mut work = f.clone();
        let mut done = NcPolynomial::zero(self.ngens);
        while let Some((w, c)) = work.pop_leading() {
            match self.find_reducer(w.letters()) {
                None => done.add_term(w, c),
                Some((pos, k)) => {
                    let g = &self.rules[k];
                    let lead_len = g.leading_monomial().expect("nonzero").len();
                    let (left, rest) = w.letters().split_at(pos);
                    let right = &rest[lead_len..];
                    // c·a·LM·b  ↦  −c·a·tail·b
                    for (t, tc) in g.terms().rev().skip(1) {
                        work.add_term(t.wrap(left, right), -(&c * tc));
                    }
                }
            }
        }
        done
    }
}

/// A reduced Gröbner basis certified through `complete_through`.
#[derive(Clone, Debug)]
pub struct TruncatedGB {
    labels: Vec<String>,
    truncation_degree: usize,
    complete_through: usize,
    rewriter: Rewriter,
}

/// Degree-`m` words that avoid every leading word of a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalMonomialSet {
    pub degree: usize,
    pub words: Vec<Word>,
}

impl TruncatedGB {
    pub fn ngens(&self) -> usize {
        self.rewriter.ngens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Basis elements ordered by ascending leading monomial.
    pub fn basis(&self) -> &[NcPolynomial] {
        self.rewriter.rules()
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation_degree
    }

    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.basis()
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.complete_through {
            return Err(Error::TruncationExceeded {
                degree,
                complete_through: self.complete_through,
            });
        }
        Ok(())
    }

    pub fn to_document(&self) -> GbDocument {
        GbDocument {
            generators: self.labels.clone(),
            relations: self.basis().iter().map(encode_polynomial).collect(),
            truncation_degree: self.truncation_degree,
            complete_through: self.complete_through,
        }
    }
}

/// Serialized basis: the presentation format plus truncation metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbDocument {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<TermDocument>>,
    pub truncation_degree: usize,
    pub complete_through: usize,
}

impl From<GbDocument> for PresentationDocument {
    fn from(doc: GbDocument) -> Self {
        PresentationDocument {
            generators: doc.generators,
            relations: doc.relations,
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `p`, through degree `max_degree`.
pub fn truncated_groebner(p: &QuadraticPresentation, max_degree: usize) -> Result<TruncatedGB> {
    if max_degree < 2 {
        return Err(Error::Precondition(format!("degree bound must be at least 2, got {max_degree}")));
    }
    groebner_homogeneous(p.labels().to_vec(), p.relations(), max_degree)
}

/// Same as [`truncated_groebner`] for arbitrary homogeneous generators.
pub fn groebner_homogeneous(
    labels: Vec<String>,
    generators: &[NcPolynomial],
    max_degree: usize,
) -> Result<TruncatedGB> {
    let ngens = labels.len();
    let mut by_degree: BTreeMap<usize, Vec<NcPolynomial>> = BTreeMap::new();
    for (k, g) in generators.iter().enumerate() {
        if g.ngens() != ngens {
            return Err(Error::AlphabetMismatch {
                left: ngens,
                right: g.ngens(),
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(format!("generator {k}")));
        }
        match g.degree() {
            None => {}
            Some(0) => {
                return Err(Error::InvalidRelation(format!("generator {k} is a nonzero constant")));
            }
            Some(d) => by_degree.entry(d).or_default().push(g.clone()),
        }
    }

    let mut basis: Vec<NcPolynomial> = Vec::new();
    let mut rewriter = Rewriter::new(ngens, Vec::new())?;
    for d in 1..=max_degree {
        let mut candidates: Vec<NcPolynomial> = by_degree.remove(&d).unwrap_or_default();
        candidates.extend(s_elements_of_length(&basis, d));
        let reduced: Vec<NcPolynomial> = candidates
            .iter()
            .map(|f| rewriter.reduce(f))
            .filter(|f| !f.is_zero())
            .collect();
        let fresh = echelon(reduced);
        if fresh.is_empty() {
            continue;
        }
        basis.extend(fresh);
        basis.sort_by(|f, g| f.leading_monomial().expect("nonzero").cmp(g.leading_monomial().expect("nonzero")));
        rewriter = Rewriter::new(ngens, basis.clone())?;
    }

    Ok(TruncatedGB {
        labels,
        truncation_degree: max_degree,
        complete_through: max_degree,
        rewriter,
    })
}

/// Overlap ambiguity between two leading words: `LM(g₁) = a·v`,
/// `LM(g₂) = v·c` with `a`, `v`, `c` nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub first: usize,
    pub second: usize,
    pub word: Word,
    /// `g₁·c − a·g₂`.
    pub s_element: NcPolynomial,
}

/// All proper overlaps among `basis` whose ambiguity word has length `len`,
/// sorted by ambiguity word.
pub fn overlaps_of_length(basis: &[NcPolynomial], len: usize) -> Vec<Overlap> {
    let mut out = Vec::new();
    for (i, g1) in basis.iter().enumerate() {
        let u = g1.leading_monomial().expect("nonzero").letters();
        for (j, g2) in basis.iter().enumerate() {
            let v = g2.leading_monomial().expect("nonzero").letters();
            let min = u.len().min(v.len());
            for k in 1..min {
                if u.len() + v.len() - k != len {
                    continue;
                }
                if u[u.len() - k..] != v[..k] {
                    continue;
                }
                let a = Word::new(u[..u.len() - k].to_vec());
                let c = Word::new(v[k..].to_vec());
                let word = a.concat(&Word::new(v.to_vec()));
                let s_element = &g1.wrap(&Word::empty(), &c) - &g2.wrap(&a, &Word::empty());
                out.push(Overlap {
                    first: i,
                    second: j,
                    word,
                    s_element,
                });
            }
        }
    }
    out.sort_by(|x, y| x.word.cmp(&y.word).then((x.first, x.second).cmp(&(y.first, y.second))));
    out
}

fn s_elements_of_length(basis: &[NcPolynomial], len: usize) -> Vec<NcPolynomial> {
    overlaps_of_length(basis, len).into_iter().map(|o| o.s_element).collect()
}

/// Reduced row echelon form of homogeneous polynomials of one degree:
/// monic, distinct leading words, and no leading word in any other tail.
fn echelon(polys: Vec<NcPolynomial>) -> Vec<NcPolynomial> {
    let mut pivots: BTreeMap<Word, NcPolynomial> = BTreeMap::new();
    for f in polys {
        let mut f = f;
        // eliminate existing pivot words from f
        loop {
            let hit = f
                .terms()
                .rev()
                .find(|(w, _)| pivots.contains_key(*w))
                .map(|(w, c)| (w.clone(), c.clone()));
            match hit {
                None => break,
                Some((w, c)) => f = &f - &pivots[&w].scale(&c),
            }
        }
        if f.is_zero() {
            continue;
        }
        let f = f.monic();
        let lead = f.leading_monomial().expect("nonzero").clone();
        for p in pivots.values_mut() {
            let c = p.coefficient(&lead);
            if !c.is_zero() {
                *p = &*p - &f.scale(&c);
            }
        }
        pivots.insert(lead, f);
    }
    pivots.into_values().collect()
}

/// Unique normal form of `f` modulo the truncated basis.
pub fn normal_form(f: &NcPolynomial, gb: &TruncatedGB) -> Result<NcPolynomial> {
    if f.ngens() != gb.ngens() {
        return Err(Error::AlphabetMismatch {
            left: gb.ngens(),
            right: f.ngens(),
        });
    }
    if let Some(d) = f.degree() {
        gb.check_degree(d)?;
    }
    Ok(gb.rewriter.reduce(f))
}

/// `N(I)_m` in ascending deg-lex order.
pub fn normal_monomials(gb: &TruncatedGB, m: usize) -> Result<NormalMonomialSet> {
    gb.check_degree(m)?;
    Ok(NormalMonomialSet {
        degree: m,
        words: words_avoiding(&gb.rewriter, m),
    })
}

/// Words of length `m` containing no leading word of `rw`, built by
/// extending normal words one letter at a time (a factor of a normal word
/// is normal, so only suffixes need checking).
fn words_avoiding(rw: &Rewriter, m: usize) -> Vec<Word> {
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..rw.ngens {
                let mut v = w.clone();
                v.push(x as Letter);
                if !rw.has_lead_suffix(&v) {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().map(Word::new).collect()
}

/// `h(0), ..., h(up_to)` with `h(m) = |N_m|`.
pub fn hilbert_function(gb: &TruncatedGB, up_to: usize) -> Result<Vec<usize>> {
    gb.check_degree(up_to)?;
    Ok((0..=up_to).map(|m| words_avoiding(&gb.rewriter, m).len()).collect())
}

/// Result of the degree-3 overlap test for a quadratic presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticGbCheck {
    pub is_groebner: bool,
    /// First overlap (in deg-lex order) whose S-element does not reduce to
    /// zero, with its monic residue.
    pub witness: Option<(Word, NcPolynomial)>,
    pub unresolved_overlaps: usize,
    pub overlap_count: usize,
    /// `|N(Re)_3|`, words of length 3 avoiding every leading word.
    pub normal_count_3: usize,
    /// `dim A_3` from the linear-algebra oracle, when within its size bound.
    pub oracle_dim_3: Option<usize>,
}

/// Decides whether the relations of `p` already form a Gröbner basis.
///
/// For monic quadratic relations with pairwise distinct leading words the
/// only ambiguities are overlaps `abc` of two leading words `ab`, `bc`
/// (no leading word can contain another), so by the diamond lemma it is
/// enough that every such degree-3 overlap resolves.
pub fn is_groebner_quadratic(p: &QuadraticPresentation) -> Result<QuadraticGbCheck> {
    let leads = p.leading_words();
    let distinct: BTreeSet<&Word> = leads.iter().collect();
    if distinct.len() != leads.len() {
        return Err(Error::Precondition("leading monomials are not distinct".into()));
    }
    let rw = Rewriter::new(p.generator_count(), p.relations().to_vec())?;
    let overlaps = overlaps_of_length(p.relations(), 3);
    let mut witness = None;
    let mut unresolved = 0;
    for o in &overlaps {
        let residue = rw.reduce(&o.s_element);
        if !residue.is_zero() {
            unresolved += 1;
            if witness.is_none() {
                witness = Some((o.word.clone(), residue.monic()));
            }
        }
    }
    let normal_count_3 = words_avoiding(&rw, 3).len();
    let oracle_dim_3 = match oracle::quotient_dim_oracle(p, 3) {
        Ok(d) => Some(d),
        Err(Error::SizeBound(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(QuadraticGbCheck {
        is_groebner: unresolved == 0,
        witness,
        unresolved_overlaps: unresolved,
        overlap_count: overlaps.len(),
        normal_count_3,
        oracle_dim_3,
    })
}

/// Number of length-`d` words over `ngens` letters avoiding a set of
/// forbidden two-letter words, by powers of the transfer matrix
/// `T[a][b] = [ab allowed]`.
pub fn count_avoiding_pairs(ngens: usize, forbidden: &[Word], d: usize) -> Result<u128> {
    let mut allowed = vec![vec![1u128; ngens]; ngens];
    for w in forbidden {
        if w.len() != 2 {
            return Err(Error::Precondition(format!("transfer count needs two-letter words, got {w:?}")));
        }
        w.check_alphabet(ngens)?;
        let l = w.letters();
        allowed[l[0] as usize][l[1] as usize] = 0;
    }
    if d == 0 {
        return Ok(1);
    }
    let mut v = vec![1u128; ngens];
    for _ in 1..d {
        v = (0..ngens)
            .map(|b| (0..ngens).map(|a| v[a] * allowed[a][b]).sum())
            .collect();
    }
    Ok(v.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff;
    use crate::presentation::yb_presentation;
    use crate::solution::tests::{example_x, example_y};
    use crate::solution::QuadraticSet;
    use crate::word::default_labels;

    fn w(v: &[usize]) -> Word {
        Word::from_indices(v)
    }

    fn bin(n: usize, u: &[usize], v: &[usize]) -> NcPolynomial {
        NcPolynomial::binomial(n, w(u), w(v))
    }

    fn mono(n: usize, u: &[usize]) -> NcPolynomial {
        NcPolynomial::monomial(n, w(u), coeff(1))
    }

    #[test]
    fn normal_form_examples() {
        let a = yb_presentation(&example_x()).unwrap();
        let gb = truncated_groebner(&a, 3).unwrap();
        assert_eq!(normal_form(&mono(3, &[2, 1]), &gb).unwrap(), mono(3, &[0, 2]));
        assert_eq!(normal_form(&mono(3, &[0, 1]), &gb).unwrap(), mono(3, &[0, 1]));

        let b = yb_presentation(&example_y()).unwrap();
        let gb = truncated_groebner(&b, 3).unwrap();
        assert_eq!(normal_form(&mono(2, &[1, 0, 0]), &gb).unwrap(), mono(2, &[0, 0, 1]));
    }

    #[test]
    fn normal_form_refuses_uncertified_degree() {
        let b = yb_presentation(&example_y()).unwrap();
        let gb = truncated_groebner(&b, 3).unwrap();
        assert_eq!(
            normal_form(&mono(2, &[1, 1, 1, 1]), &gb),
            Err(Error::TruncationExceeded { degree: 4, complete_through: 3 })
        );
        assert!(normal_monomials(&gb, 4).is_err());
        assert!(hilbert_function(&gb, 4).is_err());
    }

    #[test]
    fn groebner_examples() {
        let a = yb_presentation(&example_x()).unwrap();
        let gb = truncated_groebner(&a, 3).unwrap();
        assert_eq!(gb.basis(), a.relations());

        let b = yb_presentation(&example_y()).unwrap();
        let gb = truncated_groebner(&b, 4).unwrap();
        assert_eq!(gb.basis(), &[bin(2, &[1, 1], &[0, 0]), bin(2, &[1, 0, 0], &[0, 0, 1])]);

        for n in 1..=4 {
            let p = yb_presentation(&QuadraticSet::flip(n)).unwrap();
            let gb = truncated_groebner(&p, 3).unwrap();
            assert_eq!(gb.basis(), p.relations());
        }
        assert!(truncated_groebner(&a, 1).is_err());
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let f = NcPolynomial::from_terms(2, [(coeff(1), w(&[1, 1])), (coeff(1), w(&[0]))]).unwrap();
        assert!(matches!(
            groebner_homogeneous(default_labels("x", 2), &[f], 3),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn normal_monomial_examples() {
        let a = yb_presentation(&example_x()).unwrap();
        let gb = truncated_groebner(&a, 3).unwrap();
        let n2 = normal_monomials(&gb, 2).unwrap();
        let expected: Vec<Word> = [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]].iter().map(|v| w(v)).collect();
        assert_eq!(n2.words, expected);

        let b = yb_presentation(&example_y()).unwrap();
        let gb = truncated_groebner(&b, 3).unwrap();
        let n3 = normal_monomials(&gb, 3).unwrap();
        let expected: Vec<Word> = [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 1]].iter().map(|v| w(v)).collect();
        assert_eq!(n3.words, expected);

        assert_eq!(normal_monomials(&gb, 0).unwrap().words, vec![Word::empty()]);
    }

    #[test]
    fn hilbert_examples() {
        let a = yb_presentation(&example_x()).unwrap();
        let gb = truncated_groebner(&a, 4).unwrap();
        assert_eq!(hilbert_function(&gb, 4).unwrap(), vec![1, 3, 6, 10, 15]);

        let b = yb_presentation(&example_y()).unwrap();
        let gb = truncated_groebner(&b, 4).unwrap();
        assert_eq!(hilbert_function(&gb, 4).unwrap(), vec![1, 2, 3, 4, 5]);

        let free = QuadraticPresentation::free(default_labels("x", 2)).unwrap();
        let gb = truncated_groebner(&free, 3).unwrap();
        assert_eq!(hilbert_function(&gb, 3).unwrap(), vec![1, 2, 4, 8]);
    }

    #[test]
    fn quadratic_gb_examples() {
        let a = yb_presentation(&example_x()).unwrap();
        let check = is_groebner_quadratic(&a).unwrap();
        assert!(check.is_groebner && check.witness.is_none());
        assert_eq!(check.normal_count_3, 10);
        assert_eq!(check.oracle_dim_3, Some(10));

        let b = yb_presentation(&example_y()).unwrap();
        let check = is_groebner_quadratic(&b).unwrap();
        assert!(!check.is_groebner);
        let (word, residue) = check.witness.unwrap();
        assert_eq!(word, w(&[1, 1, 1]));
        assert_eq!(residue, bin(2, &[1, 0, 0], &[0, 0, 1]));
        assert_eq!((check.normal_count_3, check.oracle_dim_3), (5, Some(4)));

        let c = yb_presentation(&QuadraticSet::flip(3)).unwrap();
        assert!(is_groebner_quadratic(&c).unwrap().is_groebner);
    }

    #[test]
    fn quadratic_gb_needs_distinct_leads() {
        let p = QuadraticPresentation::new(
            default_labels("x", 2),
            vec![bin(2, &[1, 1], &[0, 0]), bin(2, &[1, 1], &[0, 1])],
        )
        .unwrap();
        assert!(matches!(is_groebner_quadratic(&p), Err(Error::Precondition(_))));
    }

    #[test]
    fn normal_form_is_idempotent_and_lands_in_normal_span() {
        let b = yb_presentation(&example_y()).unwrap();
        let gb = truncated_groebner(&b, 4).unwrap();
        for word in Word::all_of_length(2, 4) {
            let f = NcPolynomial::monomial(2, word, coeff(3));
            let nf = normal_form(&f, &gb).unwrap();
            assert_eq!(normal_form(&nf, &gb).unwrap(), nf);
            let normal = normal_monomials(&gb, 4).unwrap().words;
            assert!(nf.terms().all(|(u, _)| normal.contains(u)));
        }
    }

    #[test]
    fn transfer_count_matches_enumeration() {
        let a = yb_presentation(&example_x()).unwrap();
        let gb = truncated_groebner(&a, 5).unwrap();
        let leads = gb.leading_words();
        for d in 0..=5 {
            assert_eq!(
                count_avoiding_pairs(3, &leads, d).unwrap() as usize,
                normal_monomials(&gb, d).unwrap().words.len()
            );
        }
        assert!(count_avoiding_pairs(2, &[w(&[0, 0, 1])], 3).is_err());
    }
}
