//! Finite quadratic sets `(X, r)` and the set-theoretic Yang-Baxter axioms.
//!
//! A quadratic set on `X = {x_1, ..., x_n}` is stored as its full `r`-table:
//! `r(x_i, x_j) = (x_p, x_q)` is the entry `(p, q)` at row `i`, column `j`
//! (zero-based). Writing `r(x, y) = (ˣy, xʸ)` defines the left action
//! `L_x(y) = ˣy` and the right action `R_y(x) = xʸ`.
//!
//! Nothing is validated on load beyond index ranges; [`classify`] reports
//! which axioms hold, and operations that need a solution check it
//! themselves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::default_labels;

/// A finite set with a map `r: X × X → X × X` given by its table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSet {
    size: usize,
    table: Vec<(usize, usize)>,
    labels: Vec<String>,
}

/// Left and right action tables derived from `r`.
///
/// `left[i][j]` is the index of `ˣⁱx_j`, `right[j][i]` the index of
/// `x_i^{x_j}`, so that `r(i, j) = (left[i][j], right[j][i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTables {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionClassification {
    pub is_bijective: bool,
    pub is_braided: bool,
    pub is_involutive: bool,
    pub is_nondegenerate: bool,
    pub is_square_free: bool,
    /// Braided, involutive and nondegenerate.
    pub is_solution: bool,
}

/// Decomposition of `X²` into `⟨r⟩`-orbits for an involutive `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub fixed_points: Vec<(usize, usize)>,
    /// Each orbit as `(u, r(u))` with `u` the deg-lex larger pair.
    pub nontrivial_orbits: Vec<((usize, usize), (usize, usize))>,
    pub fixed_count: usize,
    pub nontrivial_count: usize,
    pub total_orbits: usize,
}

/// On-disk form of a quadratic set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub r: Vec<Vec<[usize; 2]>>,
}

impl QuadraticSet {
    /// Builds a quadratic set from a map on index pairs.
    pub fn from_fn(size: usize, mut r: impl FnMut(usize, usize) -> (usize, usize)) -> Result<Self> {
        let mut table = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let (p, q) = r(i, j);
                for idx in [p, q] {
                    if idx >= size {
                        return Err(Error::IndexOutOfRange { index: idx, size });
                    }
                }
                table.push((p, q));
            }
        }
        Ok(QuadraticSet {
            size,
            table,
            labels: default_labels("x", size),
        })
    }

    pub fn from_document(doc: &SolutionDocument) -> Result<Self> {
        let n = doc.size;
        if n == 0 {
            return Err(Error::Malformed("size must be positive".into()));
        }
        if doc.r.len() != n {
            return Err(Error::NonSquare(format!("expected {n} rows, found {}", doc.r.len())));
        }
        if let Some((i, row)) = doc.r.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::NonSquare(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        let mut qs = Self::from_fn(n, |i, j| {
            let [p, q] = doc.r[i][j];
            (p, q)
        })?;
        if let Some(labels) = &doc.labels {
            if labels.len() != n {
                return Err(Error::Malformed(format!(
                    "{} labels for size {n}",
                    labels.len()
                )));
            }
            qs.labels = labels.clone();
        }
        Ok(qs)
    }

    pub fn to_document(&self) -> SolutionDocument {
        let n = self.size;
        SolutionDocument {
            size: n,
            labels: Some(self.labels.clone()),
            r: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let (p, q) = self.r(i, j);
                            [p, q]
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// The flip `r(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |i, j| (j, i)).expect("flip is in range")
    }

    /// The identity map, which is braided and involutive but degenerate
    /// for `n ≥ 2`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| (i, j)).expect("identity is in range")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Malformed(format!(
                "{} labels for size {}",
                labels.len(),
                self.size
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn r(&self, i: usize, j: usize) -> (usize, usize) {
        self.table[i * self.size + j]
    }

    pub fn is_fixed(&self, i: usize, j: usize) -> bool {
        self.r(i, j) == (i, j)
    }

    pub fn actions(&self) -> ActionTables {
        let n = self.size;
        let mut left = vec![vec![0; n]; n];
        let mut right = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (p, q) = self.r(i, j);
                left[i][j] = p;
                right[j][i] = q;
            }
        }
        ActionTables { left, right }
    }

    /// Re-enumerates the underlying set: old element `k` becomes `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size;
        if perm.len() != n || !is_permutation(perm) {
            return Err(Error::Precondition(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut inv = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let mut out = Self::from_fn(n, |i, j| {
            let (p, q) = self.r(inv[i], inv[j]);
            (perm[p], perm[q])
        })?;
        out.labels = inv.iter().map(|&k| self.labels[k].clone()).collect();
        Ok(out)
    }

    fn require_solution(&self, what: &str) -> Result<()> {
        let c = classify(self);
        if !c.is_solution {
            return Err(Error::Precondition(format!(
                "{what}: input is not a nondegenerate involutive braided set ({c:?})"
            )));
        }
        Ok(())
    }
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Parses a solution document from JSON.
pub fn load_solution(document: &str) -> Result<QuadraticSet> {
    let doc: SolutionDocument =
        serde_json::from_str(document).map_err(|e| Error::Malformed(e.to_string()))?;
    QuadraticSet::from_document(&doc)
}

/// Exhaustively evaluates every axiom.
pub fn classify(qs: &QuadraticSet) -> SolutionClassification {
    let n = qs.size;

    let mut seen = vec![false; n * n];
    for &(p, q) in &qs.table {
        seen[p * n + q] = true;
    }
    let is_bijective = seen.iter().all(|&s| s);

    let is_involutive = (0..n).all(|i| {
        (0..n).all(|j| {
            let (p, q) = qs.r(i, j);
            qs.r(p, q) == (i, j)
        })
    });

    let acts = qs.actions();
    let is_nondegenerate = acts.left.iter().all(|row| is_permutation(row))
        && acts.right.iter().all(|row| is_permutation(row));

    let is_braided = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| braid_holds(qs, a, b, c))));

    let is_square_free = (0..n).all(|i| qs.is_fixed(i, i));

    SolutionClassification {
        is_bijective,
        is_braided,
        is_involutive,
        is_nondegenerate,
        is_square_free,
        is_solution: is_braided && is_involutive && is_nondegenerate,
    }
}

fn r12(qs: &QuadraticSet, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
    let (p, q) = qs.r(a, b);
    (p, q, c)
}

fn r23(qs: &QuadraticSet, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
    let (p, q) = qs.r(b, c);
    (a, p, q)
}

fn braid_holds(qs: &QuadraticSet, a: usize, b: usize, c: usize) -> bool {
    let t = (a, b, c);
    let lhs = r12(qs, r23(qs, r12(qs, t)));
    let rhs = r23(qs, r12(qs, r23(qs, t)));
    lhs == rhs
}

/// Splits `X²` into fixed points and two-element `r`-orbits.
pub fn orbit_report(qs: &QuadraticSet) -> Result<OrbitReport> {
    let n = qs.size;
    let involutive = (0..n).all(|i| (0..n).all(|j| {
        let (p, q) = qs.r(i, j);
        qs.r(p, q) == (i, j)
    }));
    if !involutive {
        return Err(Error::Precondition("orbit report needs an involutive map".into()));
    }
    let mut fixed_points = Vec::new();
    let mut nontrivial_orbits = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let img = qs.r(i, j);
            if img == (i, j) {
                fixed_points.push((i, j));
            } else if (i, j) > img {
                nontrivial_orbits.push(((i, j), img));
            }
        }
    }
    let fixed_count = fixed_points.len();
    let nontrivial_count = nontrivial_orbits.len();
    Ok(OrbitReport {
        fixed_points,
        nontrivial_orbits,
        fixed_count,
        nontrivial_count,
        total_orbits: fixed_count + nontrivial_count,
    })
}

/// The Cartesian product solution on `X × Y`, with the pair `(i, a)`
/// flattened to `i·|Y| + a`:
///
/// `ρ((x_j, y_b), (x_i, y_a)) = ((ˣʲx_i, ʸᵇy_a), (x_j^{x_i}, y_b^{y_a}))`.
pub fn cartesian_product(a: &QuadraticSet, b: &QuadraticSet) -> Result<QuadraticSet> {
    a.require_solution("cartesian product (first factor)")?;
    b.require_solution("cartesian product (second factor)")?;
    let out = product_table(a, b)?;
    let labels = (0..a.size)
        .flat_map(|i| (0..b.size).map(move |k| (i, k)))
        .map(|(i, k)| format!("({},{})", a.labels[i], b.labels[k]))
        .collect();
    out.with_labels(labels)
}

fn product_table(a: &QuadraticSet, b: &QuadraticSet) -> Result<QuadraticSet> {
    let n = b.size;
    QuadraticSet::from_fn(a.size * n, |u, v| {
        let (j, bb) = (u / n, u % n);
        let (i, aa) = (v / n, v % n);
        let (p, q) = a.r(j, i);
        let (s, t) = b.r(bb, aa);
        (p * n + s, q * n + t)
    })
}

/// The solution `(Z, r_Z)`: the Cartesian product relabelled `z_{ia}`.
pub fn z_solution(a: &QuadraticSet, b: &QuadraticSet) -> Result<QuadraticSet> {
    a.require_solution("Z-solution (first factor)")?;
    b.require_solution("Z-solution (second factor)")?;
    let labels = (1..=a.size)
        .flat_map(|i| (1..=b.size).map(move |k| format!("z{i}{k}")))
        .collect();
    product_table(a, b)?.with_labels(labels)
}

/// Largest order accepted by [`enumerate_solutions`].
pub const MAX_ENUMERATION_ORDER: usize = 4;

/// All nondegenerate involutive braided sets on `{0..n-1}`, labelled (no
/// isomorphism reduction).
///
/// An involutive `r` with bijective left actions is determined by them:
/// `r(x, y) = (L_x(y), L_{L_x(y)}⁻¹(x))`. The search therefore runs over
/// tuples of permutations `(L_x)` and keeps the tuples whose induced right
/// actions are bijective and which satisfy the braid relation.
pub fn enumerate_solutions(n: usize) -> Result<Vec<QuadraticSet>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::Precondition(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let perms = permutations(n);
    let inverses: Vec<Vec<usize>> = perms.iter().map(|p| invert(p)).collect();
    let mut choice = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        let qs = QuadraticSet::from_fn(n, |x, y| {
            let u = perms[choice[x]][y];
            (u, inverses[choice[u]][x])
        })?;
        if classify(&qs).is_solution {
            out.push(qs);
        }
        // odometer over choice
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < perms.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (k, &v) in p.iter().enumerate() {
        inv[v] = k;
    }
    inv
}
