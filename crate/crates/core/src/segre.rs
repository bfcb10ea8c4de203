//! Segre products of Yang-Baxter algebras.
//!
//! For solutions `(X, r1)` of order `m` and `(Y, r2)` of order `n`, the
//! Segre product `A ∘ B` is generated by `w_ia = x_i ∘ y_a`, enumerated as
//! `i·n + a` so that the flat order is the lexicographic order on `(i, a)`.
//! Its relations split into three families:
//!
//! * `a1`: `w_jb w_ia − w_i'a' w_j'b'` where `x_j x_i > r1(x_j x_i) = x_i' x_j'`
//!   and `r2(y_b y_a) = y_a' y_b'`, for all `b, a`;
//! * `a2`: `w_ib w_ja − w_ia' w_jb'` where `x_i x_j` is fixed by `r1` and
//!   `y_b y_a > r2(y_b y_a) = y_a' y_b'`;
//! * `b`: `w_ib w_ja − w_ia' w_jb'` where `x_i x_j < r1(x_i x_j)` and
//!   `y_b y_a > r2(y_b y_a)`.
//!
//! `a1 ∪ a2` is the Yang-Baxter presentation of the product solution
//! `(Z, r_Z)`, and the `b` family read over `Z` generates the kernel of the
//! Segre map `A_Z → A ∘ B`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    hilbert_function, is_groebner_quadratic, normal_form, normal_monomials, truncated_groebner, TruncatedGB,
};
use crate::oracle::{self, quotient_dim_oracle, MAX_WORD_SPACE};
use crate::pbw::{pbw_check, skew_polynomial_conditions, SkewPolynomialConditions};
use crate::poly::{coeff, NcPolynomial};
use crate::presentation::{encode_polynomial, yb_presentation, QuadraticPresentation, TermDocument};
use crate::solution::{classify, z_solution, QuadraticSet};
use crate::tensor::{segre_map, sigma23_transport, sigma23_transport_left, tensor_normal_form, TensorElement};
use crate::word::Word;

/// `C(n, k)` for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1))
}

/// The generators `w_ia` of `X ∘ Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreGenerators {
    pub m: usize,
    pub n: usize,
}

impl SegreGenerators {
    pub fn new(m: usize, n: usize) -> Self {
        SegreGenerators { m, n }
    }

    pub fn count(&self) -> usize {
        self.m * self.n
    }

    /// Flat index of `w_ia` (zero-based `i`, `a`).
    pub fn index(&self, i: usize, a: usize) -> usize {
        i * self.n + a
    }

    pub fn pair(&self, w: usize) -> (usize, usize) {
        (w / self.n, w % self.n)
    }

    /// `prefix{i}{a}` with one-based indices.
    pub fn labels(&self, prefix: &str) -> Vec<String> {
        (1..=self.m)
            .flat_map(|i| (1..=self.n).map(move |a| format!("{prefix}{i}{a}")))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SegreFamily {
    #[serde(rename = "a1")]
    A1,
    #[serde(rename = "a2")]
    A2,
    #[serde(rename = "b")]
    B,
    /// Kernel generators of the Segre map, over `Z`.
    #[serde(rename = "s")]
    S,
}

impl SegreFamily {
    pub fn tag(self) -> &'static str {
        match self {
            SegreFamily::A1 => "a1",
            SegreFamily::A2 => "a2",
            SegreFamily::B => "b",
            SegreFamily::S => "s",
        }
    }
}

/// One relation with the data it was built from (zero-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreRelation {
    pub family: SegreFamily,
    /// `(j, i)` for `a1`, `(i, j)` otherwise: the `X`-word of the leading
    /// monomial.
    pub x_pair: (usize, usize),
    /// `(b, a)`: the `Y`-word of the leading monomial.
    pub y_pair: (usize, usize),
    pub x_image: (usize, usize),
    pub y_image: (usize, usize),
    pub polynomial: NcPolynomial,
}

impl SegreRelation {
    /// `X`-word of the second monomial: moved by `r1` only in family `a1`.
    pub fn x_target(&self) -> (usize, usize) {
        match self.family {
            SegreFamily::A1 => self.x_image,
            _ => self.x_pair,
        }
    }

    /// One-based subscript as printed, e.g. `32,22`.
    pub fn subscript(&self) -> String {
        format!(
            "{}{},{}{}",
            self.x_pair.0 + 1,
            self.x_pair.1 + 1,
            self.y_pair.0 + 1,
            self.y_pair.1 + 1
        )
    }
}

fn pair_word(p: (usize, usize)) -> Word {
    Word::from_indices(&[p.0, p.1])
}

/// `x_p x_q > r(x_p x_q)` in deg-lex.
fn descends(qs: &QuadraticSet, p: usize, q: usize) -> bool {
    (p, q) > qs.r(p, q)
}

fn build_relation(
    g: &SegreGenerators,
    family: SegreFamily,
    x_pair: (usize, usize),
    y_pair: (usize, usize),
    x_image: (usize, usize),
    y_image: (usize, usize),
) -> Option<SegreRelation> {
    let x_target = if family == SegreFamily::A1 { x_image } else { x_pair };
    let u = Word::from_indices(&[g.index(x_pair.0, y_pair.0), g.index(x_pair.1, y_pair.1)]);
    let v = Word::from_indices(&[g.index(x_target.0, y_image.0), g.index(x_target.1, y_image.1)]);
    if u == v {
        return None;
    }
    let polynomial = NcPolynomial::binomial(g.count(), u, v).monic();
    Some(SegreRelation {
        family,
        x_pair,
        y_pair,
        x_image,
        y_image,
        polynomial,
    })
}

// every candidate is a monic binomial, so its words identify it
fn push_unique(out: &mut Vec<SegreRelation>, seen: &mut BTreeSet<Vec<Word>>, rel: Option<SegreRelation>) {
    if let Some(rel) = rel {
        if seen.insert(rel.polynomial.terms().map(|(w, _)| w.clone()).collect()) {
            out.push(rel);
        }
    }
}

fn families(a: &QuadraticSet, b: &QuadraticSet) -> Result<(Vec<SegreRelation>, Vec<SegreRelation>, Vec<SegreRelation>)> {
    for (qs, which) in [(a, "first"), (b, "second")] {
        if !classify(qs).is_solution {
            return Err(Error::Precondition(format!("the {which} factor is not a solution")));
        }
    }
    let (m, n) = (a.size(), b.size());
    let g = SegreGenerators::new(m, n);
    let mut seen = BTreeSet::new();
    let (mut a1, mut a2, mut bb) = (Vec::new(), Vec::new(), Vec::new());

    // descending in the leading X-word, then in the Y-word
    let x_words: Vec<(usize, usize)> = (0..m).flat_map(|p| (0..m).map(move |q| (p, q))).rev().collect();
    let y_words: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).rev().collect();

    for &(j, i) in &x_words {
        if !descends(a, j, i) {
            continue;
        }
        for &(bi, ai) in &y_words {
            let rel = build_relation(&g, SegreFamily::A1, (j, i), (bi, ai), a.r(j, i), b.r(bi, ai));
            push_unique(&mut a1, &mut seen, rel);
        }
    }
    for &(i, j) in &x_words {
        let fixed = a.is_fixed(i, j);
        let ascends = !fixed && !descends(a, i, j);
        if !(fixed || ascends) {
            continue;
        }
        for &(bi, ai) in &y_words {
            if !descends(b, bi, ai) {
                continue;
            }
            let family = if fixed { SegreFamily::A2 } else { SegreFamily::B };
            let rel = build_relation(&g, family, (i, j), (bi, ai), a.r(i, j), b.r(bi, ai));
            push_unique(if fixed { &mut a2 } else { &mut bb }, &mut seen, rel);
        }
    }
    Ok((a1, a2, bb))
}

/// The Segre product presentation of `A ∘ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegrePresentation {
    pub generators: SegreGenerators,
    pub re_a1: Vec<SegreRelation>,
    pub re_a2: Vec<SegreRelation>,
    pub re_b: Vec<SegreRelation>,
}

impl SegrePresentation {
    pub fn labels(&self) -> Vec<String> {
        self.generators.labels("w")
    }

    pub fn relations(&self) -> impl Iterator<Item = &SegreRelation> {
        self.re_a1.iter().chain(&self.re_a2).chain(&self.re_b)
    }

    pub fn relation_count(&self) -> usize {
        self.re_a1.len() + self.re_a2.len() + self.re_b.len()
    }

    /// All relations over `W`, in family order `a1`, `a2`, `b`.
    pub fn presentation(&self) -> Result<QuadraticPresentation> {
        QuadraticPresentation::new(self.labels(), self.relations().map(|r| r.polynomial.clone()).collect())
    }

    pub fn to_document(&self) -> SegreDocument {
        let labels = self.labels();
        SegreDocument {
            generators: labels.clone(),
            groups: [&self.re_a1, &self.re_a2, &self.re_b]
                .into_iter()
                .filter_map(|rels| rels.first().map(|r| group_document(r.family, rels, &labels)))
                .collect(),
        }
    }
}

/// Serialized relation with its source indices `[x0, x1, y0, y1]`
/// (zero-based, as in the leading monomial).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaggedRelationDocument {
    pub source: [usize; 4],
    pub text: String,
    pub terms: Vec<TermDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationGroupDocument {
    pub family: SegreFamily,
    pub relations: Vec<TaggedRelationDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreDocument {
    pub generators: Vec<String>,
    pub groups: Vec<RelationGroupDocument>,
}

pub fn group_document(family: SegreFamily, rels: &[SegreRelation], labels: &[String]) -> RelationGroupDocument {
    RelationGroupDocument {
        family,
        relations: rels
            .iter()
            .map(|r| TaggedRelationDocument {
                source: [r.x_pair.0, r.x_pair.1, r.y_pair.0, r.y_pair.1],
                text: r.polynomial.display_with(labels),
                terms: encode_polynomial(&r.polynomial),
            })
            .collect(),
    }
}

/// Builds `Re = Re_a1 ∪ Re_a2 ∪ Re_b`.
pub fn segre_presentation(a: &QuadraticSet, b: &QuadraticSet) -> Result<SegrePresentation> {
    let (re_a1, re_a2, re_b) = families(a, b)?;
    Ok(SegrePresentation {
        generators: SegreGenerators::new(a.size(), b.size()),
        re_a1,
        re_a2,
        re_b,
    })
}

/// Yang-Baxter presentation of `A_Z`, read off from `Re_a1 ∪ Re_a2` with
/// `w` relabelled `z` and sorted by ascending leading monomial.
pub fn z_presentation(a: &QuadraticSet, b: &QuadraticSet) -> Result<QuadraticPresentation> {
    let (a1, a2, _) = families(a, b)?;
    let labels = SegreGenerators::new(a.size(), b.size()).labels("z");
    let p = QuadraticPresentation::new(labels, a1.into_iter().chain(a2).map(|r| r.polynomial).collect())?.sorted();
    if p != yb_presentation(&z_solution(a, b)?)? {
        return Err(Error::IdentityViolation(
            "Re_a1 ∪ Re_a2 differs from the Yang-Baxter relations of the product solution".into(),
        ));
    }
    Ok(p)
}

/// `Re_s`: the `γ_ij,ba = z_ib z_ja − z_ia' z_jb'` over `Z`.
pub fn kernel_generators(a: &QuadraticSet, b: &QuadraticSet) -> Result<Vec<SegreRelation>> {
    let (_, _, re_b) = families(a, b)?;
    Ok(re_b
        .into_iter()
        .map(|r| SegreRelation {
            family: SegreFamily::S,
            ..r
        })
        .collect())
}

/// `(φ, ψ)` with `φ = σ²³((x-word − x-target) ⊗ y-word)` and
/// `ψ = σ²³(x-target ⊗ (y-word − y-image))`, so that `φ + ψ` is the relation.
pub fn transport_decomposition(
    rel: &SegreRelation,
    generators: &SegreGenerators,
) -> Result<(NcPolynomial, NcPolynomial)> {
    let (m, n) = (generators.m, generators.n);
    let x_word = pair_word(rel.x_pair);
    let x_target = pair_word(rel.x_target());
    let y_word = pair_word(rel.y_pair);
    let mut fx = NcPolynomial::zero(m);
    fx.add_term(x_word, coeff(1));
    fx.add_term(x_target.clone(), coeff(-1));
    let phi = sigma23_transport(&fx, &y_word, n)?;
    let mut gy = NcPolynomial::zero(n);
    gy.add_term(y_word, coeff(1));
    gy.add_term(pair_word(rel.y_image), coeff(-1));
    let psi = sigma23_transport_left(&x_target, m, &gy)?;
    Ok((phi, psi))
}

/// Evaluated dimension identities for a pair of solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimIdentityReport {
    pub m: usize,
    pub n: usize,
    pub re_a1: usize,
    pub re_a2: usize,
    pub re_b: usize,
    pub relations: usize,
    /// `C(m+1,2)·C(n+1,2) = dim (A∘B)_2`.
    pub segre_degree_two: usize,
    /// `(mn)²`.
    pub word_space: usize,
    /// `C(mn+1,2) = dim (A_Z)_2`.
    pub z_degree_two: usize,
    /// `C(m,2)·C(n,2)`.
    pub kernel_expected: usize,
    pub kernel_generators: usize,
    /// Rank of `Re` in the degree-2 word space.
    pub relation_rank: usize,
    /// Rank of `Re_s` in `(A_Z)_2`, by elimination against `Re(A_Z)`.
    pub kernel_rank_oracle: usize,
    /// The same rank, from normal forms modulo the basis of `A_Z`.
    pub kernel_rank_normal_form: usize,
}

impl DimIdentityReport {
    /// Human-readable list of the identities and whether each holds.
    pub fn checks(&self) -> Vec<(String, bool)> {
        let (m, n) = (self.m, self.n);
        let mn = m * n;
        vec![
            (
                format!("|Re_a1| = C(m,2)n^2 = {}", binomial(m, 2) * n * n),
                self.re_a1 == binomial(m, 2) * n * n,
            ),
            (
                format!("|Re_a2| = mC(n,2) = {}", m * binomial(n, 2)),
                self.re_a2 == m * binomial(n, 2),
            ),
            (
                format!("|Re_a1| + |Re_a2| = C(mn,2) = {}", binomial(mn, 2)),
                self.re_a1 + self.re_a2 == binomial(mn, 2),
            ),
            (
                format!("|Re_b| = C(m,2)C(n,2) = {}", self.kernel_expected),
                self.re_b == self.kernel_expected,
            ),
            (
                format!(
                    "|Re| + C(m+1,2)C(n+1,2) = {} + {} = (mn)^2 = {}",
                    self.relations, self.segre_degree_two, self.word_space
                ),
                self.relations + self.segre_degree_two == self.word_space,
            ),
            (
                format!(
                    "C(mn+1,2) - C(m+1,2)C(n+1,2) = {} - {} = C(m,2)C(n,2) = {}",
                    self.z_degree_two, self.segre_degree_two, self.kernel_expected
                ),
                self.z_degree_two == self.segre_degree_two + self.kernel_expected,
            ),
            (
                format!("rank Re = |Re| = {}", self.relations),
                self.relation_rank == self.relations,
            ),
            (
                format!("|Re_s| = {}", self.kernel_expected),
                self.kernel_generators == self.kernel_expected,
            ),
            (
                format!("rank of Re_s in (A_Z)_2 = {} (elimination)", self.kernel_expected),
                self.kernel_rank_oracle == self.kernel_expected,
            ),
            (
                format!("rank of Re_s in (A_Z)_2 = {} (normal forms)", self.kernel_expected),
                self.kernel_rank_normal_form == self.kernel_expected,
            ),
        ]
    }

    pub fn holds(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

fn violation(what: &str, failed: impl IntoIterator<Item = String>) -> Error {
    let list: Vec<String> = failed.into_iter().collect();
    Error::IdentityViolation(format!("{what}: {}", list.join("; ")))
}

/// Computes the dimension report; fails with
/// [`Error::IdentityViolation`] if any identity does not hold.
pub fn dim_identity_report(a: &QuadraticSet, b: &QuadraticSet) -> Result<DimIdentityReport> {
    let report = compute_dim_identities(a, b)?;
    let failed: Vec<String> = report
        .checks()
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(s, _)| s)
        .collect();
    if !failed.is_empty() {
        return Err(violation("dimension identities", failed));
    }
    Ok(report)
}

/// The report without the final assertion.
pub fn compute_dim_identities(a: &QuadraticSet, b: &QuadraticSet) -> Result<DimIdentityReport> {
    let (m, n) = (a.size(), b.size());
    let sp = segre_presentation(a, b)?;
    let re: Vec<NcPolynomial> = sp.relations().map(|r| r.polynomial.clone()).collect();
    let zp = z_presentation(a, b)?;
    let gammas: Vec<NcPolynomial> = kernel_generators(a, b)?.into_iter().map(|r| r.polynomial).collect();

    let z_rank = oracle::rank(zp.relations())?;
    let joint: Vec<NcPolynomial> = zp.relations().iter().chain(&gammas).cloned().collect();
    let kernel_rank_oracle = oracle::rank(&joint)? - z_rank;

    let gb_z = truncated_groebner(&zp, 2)?;
    let reduced = gammas
        .iter()
        .map(|g| normal_form(g, &gb_z))
        .collect::<Result<Vec<_>>>()?;
    let kernel_rank_normal_form = oracle::rank(&reduced)?;

    Ok(DimIdentityReport {
        m,
        n,
        re_a1: sp.re_a1.len(),
        re_a2: sp.re_a2.len(),
        re_b: sp.re_b.len(),
        relations: re.len(),
        segre_degree_two: binomial(m + 1, 2) * binomial(n + 1, 2),
        word_space: (m * n).pow(2),
        z_degree_two: binomial(m * n + 1, 2),
        kernel_expected: binomial(m, 2) * binomial(n, 2),
        kernel_generators: gammas.len(),
        relation_rank: oracle::rank(&re)?,
        kernel_rank_oracle,
        kernel_rank_normal_form,
    })
}

/// Per-relation result of mapping into `A ⊗ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageCheck {
    pub family: SegreFamily,
    pub subscript: String,
    pub image: TensorElement,
    /// Normal form modulo `A_Z` (kernel generators only).
    pub z_normal_form: Option<NcPolynomial>,
}

impl ImageCheck {
    pub fn vanishes(&self) -> bool {
        self.image.is_zero()
    }
}

/// Everything about `s_{m,n}: A_Z → A ∘ B` that is checked in degree 2.
#[derive(Clone, Debug)]
pub struct SegreMapReport {
    pub z_presentation: QuadraticPresentation,
    /// Images of the relations of `A_Z`; each must vanish.
    pub image_check: Vec<ImageCheck>,
    /// Images of `Re`; each must vanish.
    pub relation_check: Vec<ImageCheck>,
    /// `Re_s` with their images; each image must vanish while the
    /// normal form modulo `A_Z` must not.
    pub kernel_generators: Vec<SegreRelation>,
    pub kernel_check: Vec<ImageCheck>,
    pub dim_identities: DimIdentityReport,
}

impl SegreMapReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in self.image_check.iter().chain(&self.relation_check) {
            if !c.vanishes() {
                out.push(format!("{} relation {} does not vanish in A⊗B", c.family.tag(), c.subscript));
            }
        }
        for c in &self.kernel_check {
            if !c.vanishes() {
                out.push(format!("gamma {} does not vanish in A⊗B", c.subscript));
            }
            if c.z_normal_form.as_ref().map_or(true, NcPolynomial::is_zero) {
                out.push(format!("gamma {} is zero in A_Z", c.subscript));
            }
        }
        out
    }
}

/// Degree-2 bases of the two factors, enough for every relation check.
pub fn factor_bases(a: &QuadraticSet, b: &QuadraticSet, degree: usize) -> Result<(TruncatedGB, TruncatedGB)> {
    Ok((
        truncated_groebner(&yb_presentation(a)?, degree)?,
        truncated_groebner(&yb_presentation(b)?, degree)?,
    ))
}

pub fn segre_map_report(a: &QuadraticSet, b: &QuadraticSet) -> Result<SegreMapReport> {
    let (gb_a, gb_b) = factor_bases(a, b, 2)?;
    let zp = z_presentation(a, b)?;
    let gb_z = truncated_groebner(&zp, 2)?;
    let sp = segre_presentation(a, b)?;

    // A_Z relations are Re_a1 ∪ Re_a2 over Z; z_ia ↦ w_ia keeps indices
    let image_check = sp
        .re_a1
        .iter()
        .chain(&sp.re_a2)
        .map(|r| {
            Ok(ImageCheck {
                family: r.family,
                subscript: r.subscript(),
                image: segre_map(&r.polynomial, &gb_a, &gb_b)?,
                z_normal_form: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let relation_check = sp
        .relations()
        .map(|r| {
            Ok(ImageCheck {
                family: r.family,
                subscript: r.subscript(),
                image: tensor_normal_form(&r.polynomial, &gb_a, &gb_b)?,
                z_normal_form: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel = kernel_generators(a, b)?;
    let kernel_check = kernel
        .iter()
        .map(|r| {
            Ok(ImageCheck {
                family: SegreFamily::S,
                subscript: r.subscript(),
                image: segre_map(&r.polynomial, &gb_a, &gb_b)?,
                z_normal_form: Some(normal_form(&r.polynomial, &gb_z)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = SegreMapReport {
        z_presentation: zp,
        image_check,
        relation_check,
        kernel_generators: kernel,
        kernel_check,
        dim_identities: compute_dim_identities(a, b)?,
    };
    let mut failed = report.failures();
    failed.extend(
        report
            .dim_identities
            .checks()
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(s, _)| s),
    );
    if !failed.is_empty() {
        return Err(violation("Segre map", failed));
    }
    Ok(report)
}

/// One degree of [`segre_hilbert_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreHilbertRow {
    pub degree: usize,
    /// `C(m+d−1,d)·C(n+d−1,d)`.
    pub expected: usize,
    pub normal_words: usize,
    /// `None` when the word space exceeds the oracle bound.
    pub oracle: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreHilbertReport {
    pub m: usize,
    pub n: usize,
    pub complete_through: usize,
    pub rows: Vec<SegreHilbertRow>,
}

/// `dim (A∘B)_d` for `d ≤ max_degree`, from the `W`-presentation by both
/// the Gröbner basis and the oracle, against the closed form.
pub fn segre_hilbert_check(a: &QuadraticSet, b: &QuadraticSet, max_degree: usize) -> Result<SegreHilbertReport> {
    let (m, n) = (a.size(), b.size());
    let p = segre_presentation(a, b)?.presentation()?;
    let gb = truncated_groebner(&p, max_degree.max(2))?;
    let dims = hilbert_function(&gb, max_degree)?;
    let mut rows = Vec::new();
    for (d, &normal_words) in dims.iter().enumerate() {
        let fits = ((m * n) as u128)
            .checked_pow(d as u32)
            .is_some_and(|s| s <= MAX_WORD_SPACE as u128);
        let oracle = if fits { Some(quotient_dim_oracle(&p, d)?) } else { None };
        rows.push(SegreHilbertRow {
            degree: d,
            expected: binomial(m + d - 1, d) * binomial(n + d - 1, d),
            normal_words,
            oracle,
        });
    }
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| r.normal_words != r.expected || r.oracle.is_some_and(|o| o != r.expected))
        .map(|r| format!("degree {}: expected {}, normal words {}, oracle {:?}", r.degree, r.expected, r.normal_words, r.oracle))
        .collect();
    if !failed.is_empty() {
        return Err(violation("Segre Hilbert function", failed));
    }
    Ok(SegreHilbertReport {
        m,
        n,
        complete_through: gb.complete_through(),
        rows,
    })
}

/// PBW certificate for the Segre product of two square-free solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareFreeCertificate {
    pub m: usize,
    pub n: usize,
    pub is_groebner: bool,
    pub normal_count_3: usize,
    /// `C(m+2,3)·C(n+2,3)`.
    pub expected_normal_count_3: usize,
    /// `N(Re)_2 = {w_ia w_jb : i ≤ j, a ≤ b}`.
    pub degree_two_basis_matches: bool,
    pub z_conditions: SkewPolynomialConditions,
}

impl SquareFreeCertificate {
    pub fn holds(&self) -> bool {
        self.is_groebner
            && self.normal_count_3 == self.expected_normal_count_3
            && self.degree_two_basis_matches
            && self.z_conditions.all_hold()
    }
}

pub fn square_free_certificate(a: &QuadraticSet, b: &QuadraticSet) -> Result<SquareFreeCertificate> {
    for (qs, which) in [(a, "first"), (b, "second")] {
        let rep = pbw_check(qs)?;
        if !rep.is_square_free {
            return Err(Error::Precondition(format!("the {which} factor is not square-free")));
        }
        if !rep.groebner_certified {
            return Err(Error::Precondition(format!(
                "the {which} factor is not PBW under its enumeration"
            )));
        }
    }
    let (m, n) = (a.size(), b.size());
    let sp = segre_presentation(a, b)?;
    let p = sp.presentation()?;
    let check = is_groebner_quadratic(&p)?;
    let gb = truncated_groebner(&p, 2)?;
    let g = &sp.generators;
    let expected_two: Vec<Word> = {
        let mut v: Vec<Word> = (0..m)
            .flat_map(|i| (i..m).flat_map(move |j| (0..n).flat_map(move |a| (a..n).map(move |b| (i, j, a, b)))))
            .map(|(i, j, a, b)| Word::from_indices(&[g.index(i, a), g.index(j, b)]))
            .collect();
        v.sort();
        v
    };
    let cert = SquareFreeCertificate {
        m,
        n,
        is_groebner: check.is_groebner,
        normal_count_3: check.normal_count_3,
        expected_normal_count_3: binomial(m + 2, 3) * binomial(n + 2, 3),
        degree_two_basis_matches: normal_monomials(&gb, 2)?.words == expected_two,
        z_conditions: skew_polynomial_conditions(&z_presentation(a, b)?)?,
    };
    if !cert.holds() {
        return Err(Error::IdentityViolation(format!(
            "square-free Segre certificate failed: {cert:?}"
        )));
    }
    Ok(cert)
}
