//! Quadratic presentations `k⟨X⟩ / (Re)` and the Yang-Baxter algebra of a
//! quadratic set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Coeff, NcPolynomial};
use crate::solution::{classify, orbit_report, QuadraticSet};
use crate::word::Word;

/// Generators plus homogeneous quadratic relations, each monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    labels: Vec<String>,
    relations: Vec<NcPolynomial>,
}

impl QuadraticPresentation {
    /// Validates and wraps a relation list. Every relation must be a
    /// nonzero, monic, homogeneous quadratic polynomial over `labels`,
    /// and no relation may repeat.
    pub fn new(labels: Vec<String>, relations: Vec<NcPolynomial>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("a presentation needs at least one generator".into()));
        }
        for (k, f) in relations.iter().enumerate() {
            if f.ngens() != n {
                return Err(Error::AlphabetMismatch {
                    left: n,
                    right: f.ngens(),
                });
            }
            if f.is_zero() {
                return Err(Error::InvalidRelation(format!("relation {k} is zero")));
            }
            if !f.is_homogeneous() || f.degree() != Some(2) {
                return Err(Error::InvalidRelation(format!(
                    "relation {k} is not homogeneous of degree 2"
                )));
            }
            if !f.is_monic() {
                return Err(Error::InvalidRelation(format!("relation {k} is not monic")));
            }
            if relations[..k].contains(f) {
                return Err(Error::InvalidRelation(format!("relation {k} is repeated")));
            }
        }
        Ok(QuadraticPresentation { labels, relations })
    }

    /// Free algebra on `labels`.
    pub fn free(labels: Vec<String>) -> Result<Self> {
        Self::new(labels, Vec::new())
    }

    pub fn generator_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.relations
            .iter()
            .map(|f| f.leading_monomial().expect("relations are nonzero").clone())
            .collect()
    }

    /// Same relations ordered by ascending leading monomial.
    pub fn sorted(&self) -> Self {
        let mut relations = self.relations.clone();
        relations.sort_by(|f, g| {
            f.leading_monomial()
                .expect("nonzero")
                .cmp(g.leading_monomial().expect("nonzero"))
                .then_with(|| f.terms().rev().map(|(w, _)| w).cmp(g.terms().rev().map(|(w, _)| w)))
        });
        QuadraticPresentation {
            labels: self.labels.clone(),
            relations,
        }
    }

    pub fn display_relations(&self) -> Vec<String> {
        self.relations.iter().map(|f| f.display_with(&self.labels)).collect()
    }

    pub fn to_document(&self) -> PresentationDocument {
        PresentationDocument {
            generators: self.labels.clone(),
            relations: self.relations.iter().map(encode_polynomial).collect(),
        }
    }

    pub fn from_document(doc: &PresentationDocument) -> Result<Self> {
        let n = doc.generators.len();
        let relations = doc
            .relations
            .iter()
            .map(|terms| decode_polynomial(n, terms))
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.generators.clone(), relations)
    }
}

/// Serialized term: exact coefficient as a fraction string and the word
/// as an index list.
pub type TermDocument = (String, Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDocument {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<TermDocument>>,
}

/// Terms leading-first.
pub fn encode_polynomial(f: &NcPolynomial) -> Vec<TermDocument> {
    f.terms()
        .rev()
        .map(|(w, c)| (c.to_string(), w.to_indices()))
        .collect()
}

pub fn decode_polynomial(ngens: usize, terms: &[TermDocument]) -> Result<NcPolynomial> {
    let parsed = terms
        .iter()
        .map(|(c, w)| {
            let c: Coeff = c
                .parse()
                .map_err(|_| Error::Malformed(format!("bad coefficient {c:?}")))?;
            Ok((c, Word::from_indices(w)))
        })
        .collect::<Result<Vec<_>>>()?;
    NcPolynomial::from_terms(ngens, parsed)
}

/// Binomial `u - r(u)` for every nontrivial `r`-orbit `{u, r(u)}`, with the
/// deg-lex larger word leading. Relations are listed by ascending leading
/// monomial.
pub fn yb_presentation(qs: &QuadraticSet) -> Result<QuadraticPresentation> {
    let c = classify(qs);
    if !(c.is_involutive && c.is_nondegenerate) {
        return Err(Error::Precondition(
            "Yang-Baxter presentation needs an involutive nondegenerate quadratic set".into(),
        ));
    }
    let n = qs.size();
    let orbits = orbit_report(qs)?;
    let relations = orbits
        .nontrivial_orbits
        .iter()
        .map(|&((i, j), (p, q))| NcPolynomial::binomial(n, Word::from_indices(&[i, j]), Word::from_indices(&[p, q])))
        .collect();
    Ok(QuadraticPresentation::new(qs.labels().to_vec(), relations)?.sorted())
}

/// `C(n, 2)`: the relation count of the Yang-Baxter algebra of a
/// nondegenerate involutive set of order `n`.
pub fn expected_yb_relation_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
