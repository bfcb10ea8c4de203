//! Text and JSON rendering of each subcommand.

use std::fmt::Write;

use serde_json::{json, Value};

use ybalg::groebner::{hilbert_function, truncated_groebner};
use ybalg::oracle::{quotient_dim_oracle, MAX_WORD_SPACE};
use ybalg::pbw::pbw_check;
use ybalg::presentation::{yb_presentation, QuadraticPresentation};
use ybalg::segre::{
    binomial, dim_identity_report, group_document, segre_map_report, segre_presentation, square_free_certificate,
    z_presentation, SegreFamily, SegreGenerators,
};
use ybalg::solution::{cartesian_product, classify, enumerate_solutions, orbit_report, QuadraticSet};
use ybalg::{Error, Result};

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn pair(qs: &QuadraticSet, (i, j): (usize, usize)) -> String {
    format!("{}{}", qs.labels()[i], qs.labels()[j])
}

fn relation_lines(out: &mut String, p: &QuadraticPresentation) {
    for line in p.display_relations() {
        let _ = writeln!(out, "  {line}");
    }
}

pub fn verify(qs: &QuadraticSet, as_json: bool) -> Result<String> {
    let c = classify(qs);
    let orbits = if c.is_involutive { Some(orbit_report(qs)?) } else { None };
    if as_json {
        return Ok(pretty(&json!({
            "size": qs.size(),
            "classification": c,
            "orbits": orbits,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "size: {}", qs.size());
    for (name, v) in [
        ("bijective", c.is_bijective),
        ("braided", c.is_braided),
        ("involutive", c.is_involutive),
        ("nondegenerate", c.is_nondegenerate),
        ("square-free", c.is_square_free),
        ("solution", c.is_solution),
    ] {
        let _ = writeln!(s, "{name}: {v}");
    }
    match orbits {
        Some(o) => {
            let fixed: Vec<String> = o.fixed_points.iter().map(|&p| pair(qs, p)).collect();
            let _ = writeln!(s, "fixed points ({}): {}", o.fixed_count, fixed.join(" "));
            let _ = writeln!(s, "nontrivial orbits ({}):", o.nontrivial_count);
            for &(u, v) in &o.nontrivial_orbits {
                let _ = writeln!(s, "  {} <-> {}", pair(qs, u), pair(qs, v));
            }
            let _ = writeln!(s, "total orbits: {}", o.total_orbits);
        }
        None => s.push_str("orbits: not computed (r is not involutive)\n"),
    }
    Ok(s)
}

pub fn present(qs: &QuadraticSet, with_pbw: bool, as_json: bool) -> Result<String> {
    let p = yb_presentation(qs)?;
    let pbw = if with_pbw { Some(pbw_check(qs)?) } else { None };
    if let Some(rep) = &pbw {
        if rep.counterexample_alert {
            return Err(Error::IdentityViolation(format!(
                "square-freeness and the PBW property disagree: {rep:?}"
            )));
        }
    }
    if as_json {
        return Ok(pretty(&json!({ "presentation": p.to_document(), "pbw": pbw })));
    }
    let mut s = format!("relations ({}):\n", p.relations().len());
    relation_lines(&mut s, &p);
    if let Some(rep) = pbw {
        let k = &rep.skew_conditions;
        let _ = writeln!(s, "square-free: {}", rep.is_square_free);
        let _ = writeln!(s, "groebner basis under this enumeration: {}", rep.groebner_certified);
        let _ = writeln!(s, "unresolved overlaps: {}", rep.unresolved_overlaps);
        if let Some((w, r)) = &rep.witness {
            let word: Vec<String> = w.iter().map(|&i| p.labels()[i].clone()).collect();
            let _ = writeln!(s, "witness: overlap {} leaves {}", word.concat(), r);
        }
        let _ = writeln!(
            s,
            "skew polynomial conditions: shape {}, (a) {}, (b) {}, (c) {}, (d) {}, (d') {}",
            k.shape, k.nonzero_coefficients, k.orientation, k.covers_ordered_pairs, k.groebner, k.terms_are_normal_basis
        );
        if let Some(perm) = &rep.pbw_enumeration {
            let _ = writeln!(s, "PBW enumeration: {perm:?}");
        }
    }
    Ok(s)
}

pub fn hilbert(qs: &QuadraticSet, degree: usize, as_json: bool) -> Result<String> {
    let n = qs.size();
    let p = yb_presentation(qs)?;
    let gb = truncated_groebner(&p, degree)?;
    let dims = hilbert_function(&gb, degree)?;
    let solution = classify(qs).is_solution;
    let mut rows = Vec::new();
    for (d, &normal) in dims.iter().enumerate() {
        let fits = (n as u128).checked_pow(d as u32).is_some_and(|s| s <= MAX_WORD_SPACE as u128);
        let oracle = if fits { Some(quotient_dim_oracle(&p, d)?) } else { None };
        let expected = solution.then(|| binomial(n + d - 1, d));
        if oracle.is_some_and(|o| o != normal) || expected.is_some_and(|e| e != normal) {
            return Err(Error::IdentityViolation(format!(
                "degree {d}: normal words {normal}, oracle {oracle:?}, expected {expected:?}"
            )));
        }
        rows.push(json!({ "degree": d, "normal_words": normal, "oracle": oracle, "expected": expected }));
    }
    if as_json {
        return Ok(pretty(&json!({ "groebner_basis": gb.to_document(), "hilbert": rows })));
    }
    let mut s = format!(
        "groebner basis ({} elements, complete through degree {}):\n",
        gb.basis().len(),
        gb.complete_through()
    );
    for g in gb.basis() {
        let _ = writeln!(s, "  {}", g.display_with(gb.labels()));
    }
    s.push_str("degree  normal words  oracle  expected\n");
    for r in &rows {
        let show = |v: &Value| if v.is_null() { "-".to_string() } else { v.to_string() };
        let _ = writeln!(
            s,
            "{:>6}  {:>12}  {:>6}  {:>8}",
            show(&r["degree"]),
            show(&r["normal_words"]),
            show(&r["oracle"]),
            show(&r["expected"])
        );
    }
    Ok(s)
}

pub fn product(a: &QuadraticSet, b: &QuadraticSet) -> Result<String> {
    let doc = cartesian_product(a, b)?.to_document();
    Ok(serde_json::to_string_pretty(&doc).expect("documents serialize"))
}

pub fn segre(a: &QuadraticSet, b: &QuadraticSet, as_json: bool) -> Result<String> {
    let sp = segre_presentation(a, b)?;
    let dims = dim_identity_report(a, b)?;
    if as_json {
        return Ok(pretty(&json!({ "presentation": sp.to_document(), "dim_identities": dims })));
    }
    let labels = sp.labels();
    let mut s = format!("generators ({}): {}\n", labels.len(), labels.join(" "));
    let _ = writeln!(
        s,
        "relations: {} = {} (a1) + {} (a2) + {} (b)",
        sp.relation_count(),
        sp.re_a1.len(),
        sp.re_a2.len(),
        sp.re_b.len()
    );
    for rels in [&sp.re_a1, &sp.re_a2, &sp.re_b] {
        for r in rels.iter() {
            let _ = writeln!(
                s,
                "  {:<2} {:<6} {}",
                r.family.tag(),
                r.subscript(),
                r.polynomial.display_with(&labels)
            );
        }
    }
    s.push_str("identities:\n");
    for (text, ok) in dims.checks() {
        let _ = writeln!(s, "  [{}] {text}", if ok { "ok" } else { "FAILED" });
    }
    Ok(s)
}

pub fn zalg(a: &QuadraticSet, b: &QuadraticSet, as_json: bool) -> Result<String> {
    let p = z_presentation(a, b)?;
    if as_json {
        return Ok(pretty(&json!(p.to_document())));
    }
    let mut s = format!("generators ({}): {}\n", p.generator_count(), p.labels().join(" "));
    let _ = writeln!(s, "relations ({}):", p.relations().len());
    relation_lines(&mut s, &p);
    Ok(s)
}

pub fn kernel(a: &QuadraticSet, b: &QuadraticSet, as_json: bool) -> Result<String> {
    let rep = segre_map_report(a, b)?;
    let labels = SegreGenerators::new(a.size(), b.size()).labels("z");
    let vanishing = rep.image_check.iter().filter(|c| c.vanishes()).count();
    let relation_vanishing = rep.relation_check.iter().filter(|c| c.vanishes()).count();
    let soundness: Vec<Value> = rep
        .kernel_check
        .iter()
        .map(|c| {
            json!({
                "subscript": c.subscript,
                "image_is_zero": c.vanishes(),
                "normal_form_in_a_z": c.z_normal_form.as_ref().map(|f| f.display_with(&labels)),
            })
        })
        .collect();
    if as_json {
        return Ok(pretty(&json!({
            "kernel": group_document(SegreFamily::S, &rep.kernel_generators, &labels),
            "soundness": soundness,
            "a_z_relations": rep.image_check.len(),
            "a_z_relations_vanishing": vanishing,
            "segre_relations": rep.relation_check.len(),
            "segre_relations_vanishing": relation_vanishing,
            "dim_identities": rep.dim_identities,
        })));
    }
    let mut s = format!("kernel generators ({}):\n", rep.kernel_generators.len());
    for (g, c) in rep.kernel_generators.iter().zip(&rep.kernel_check) {
        let _ = writeln!(
            s,
            "  gamma{} = {}   image 0: {}, normal form in A_Z: {}",
            g.subscript(),
            g.polynomial.display_with(&labels),
            c.vanishes(),
            c.z_normal_form.as_ref().map_or("-".into(), |f| f.display_with(&labels))
        );
    }
    let _ = writeln!(s, "A_Z relations vanishing in A⊗B: {vanishing}/{}", rep.image_check.len());
    let _ = writeln!(
        s,
        "Segre relations vanishing in A⊗B: {relation_vanishing}/{}",
        rep.relation_check.len()
    );
    let d = &rep.dim_identities;
    let _ = writeln!(
        s,
        "rank of kernel in (A_Z)_2: {} (elimination), {} (normal forms), expected {}",
        d.kernel_rank_oracle, d.kernel_rank_normal_form, d.kernel_expected
    );
    Ok(s)
}

pub fn certify(a: &QuadraticSet, b: &QuadraticSet, as_json: bool) -> Result<String> {
    let cert = square_free_certificate(a, b)?;
    if as_json {
        return Ok(pretty(&json!(cert)));
    }
    let k = &cert.z_conditions;
    Ok(format!(
        "Segre relations form a Groebner basis: {}\n\
         normal words of degree 3: {} (expected {})\n\
         degree-2 normal words are w_ia w_jb with i <= j, a <= b: {}\n\
         A_Z skew polynomial conditions: shape {}, (a) {}, (b) {}, (c) {}, (d) {}, (d') {}\n\
         certificate: passed\n",
        cert.is_groebner,
        cert.normal_count_3,
        cert.expected_normal_count_3,
        cert.degree_two_basis_matches,
        k.shape,
        k.nonzero_coefficients,
        k.orientation,
        k.covers_ordered_pairs,
        k.groebner,
        k.terms_are_normal_basis
    ))
}

pub fn enumerate(order: usize, as_json: bool) -> Result<String> {
    let sols = enumerate_solutions(order)?;
    if as_json {
        let docs: Vec<_> = sols.iter().map(|q| q.to_document()).collect();
        return Ok(pretty(&json!(docs)));
    }
    let mut s = format!("{} solutions of order {order}\n", sols.len());
    for qs in &sols {
        let c = classify(qs);
        let row: Vec<String> = (0..order)
            .flat_map(|i| (0..order).map(move |j| (i, j)))
            .map(|(i, j)| {
                let (p, q) = qs.r(i, j);
                format!("{p}{q}")
            })
            .collect();
        let _ = writeln!(s, "  r = {}{}", row.join(" "), if c.is_square_free { "  (square-free)" } else { "" });
    }
    Ok(s)
}
