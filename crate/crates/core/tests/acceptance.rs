//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{binomial, corpus, example_x, example_y, sorted};
use ybalg::groebner::{hilbert_function, truncated_groebner};
use ybalg::oracle::quotient_dim_oracle;
use ybalg::pbw::{find_pbw_enumeration, pbw_check};
use ybalg::poly::{coeff, NcPolynomial};
use ybalg::presentation::{yb_presentation, QuadraticPresentation};
use ybalg::segre::{
    dim_identity_report, kernel_generators, segre_hilbert_check, segre_map_report, segre_presentation,
    square_free_certificate, z_presentation, SegreGenerators,
};
use ybalg::solution::{cartesian_product, classify, orbit_report, QuadraticSet};
use ybalg::word::{default_labels, Word};
use ybalg::Error;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn texts(polys: impl IntoIterator<Item = NcPolynomial>, labels: &[String]) -> Vec<String> {
    let v: Vec<String> = polys.into_iter().map(|f| f.display_with(labels)).collect();
    sorted(&v)
}

fn pairs(max: usize) -> Vec<(QuadraticSet, QuadraticSet)> {
    let c = corpus(max);
    let mut out = Vec::new();
    for a in &c {
        for b in &c {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn golden() -> Check {
    let (x, y) = (example_x(), example_y());
    let a = yb_presentation(&x).map_err(err)?;
    ensure(
        sorted(&a.display_relations()) == sorted(&["x3x2 - x1x3", "x3x1 - x2x3", "x2x1 - x1x2"]),
        || format!("A relations {:?}", a.display_relations()),
    )?;
    let b = yb_presentation(&y).map_err(err)?;
    ensure(b.display_relations() == ["y2y2 - y1y1"], || format!("B relations {:?}", b.display_relations()))?;

    let sp = segre_presentation(&x, &y).map_err(err)?;
    let w = sp.labels();
    let fam = |rels: &[ybalg::segre::SegreRelation]| texts(rels.iter().map(|r| r.polynomial.clone()), &w);
    let a1 = sorted(&[
        "w32w22 - w11w31", "w31w21 - w12w32", "w32w21 - w12w31", "w31w22 - w11w32",
        "w32w12 - w21w31", "w31w11 - w22w32", "w32w11 - w22w31", "w31w12 - w21w32",
        "w22w12 - w11w21", "w21w11 - w12w22", "w22w11 - w12w21", "w21w12 - w11w22",
    ]);
    let a2 = sorted(&["w32w32 - w31w31", "w22w22 - w21w21", "w12w12 - w11w11"]);
    let bb = sorted(&["w22w32 - w21w31", "w12w32 - w11w31", "w12w22 - w11w21"]);
    ensure(sp.relation_count() == 18, || format!("{} Segre relations", sp.relation_count()))?;
    ensure(fam(&sp.re_a1) == a1, || format!("Re_a1 {:?}", fam(&sp.re_a1)))?;
    ensure(fam(&sp.re_a2) == a2, || format!("Re_a2 {:?}", fam(&sp.re_a2)))?;
    ensure(fam(&sp.re_b) == bb, || format!("Re_b {:?}", fam(&sp.re_b)))?;

    let zp = z_presentation(&x, &y).map_err(err)?;
    let z_expected: Vec<String> = a1.iter().chain(&a2).map(|s| s.replace('w', "z")).collect();
    ensure(sorted(&zp.display_relations()) == sorted(&z_expected), || {
        format!("A_Z relations {:?}", zp.display_relations())
    })?;
    let z = SegreGenerators::new(3, 2).labels("z");
    let gammas = texts(kernel_generators(&x, &y).map_err(err)?.into_iter().map(|r| r.polynomial), &z);
    ensure(
        gammas == sorted(&["z22z32 - z21z31", "z12z32 - z11z31", "z12z22 - z11z21"]),
        || format!("kernel {gammas:?}"),
    )
}

fn counting() -> Check {
    for (a, b) in pairs(3) {
        let (m, n) = (a.size(), b.size());
        let sp = segre_presentation(&a, &b).map_err(err)?;
        let got = (sp.re_a1.len(), sp.re_a2.len(), sp.re_b.len());
        let want = (binomial(m, 2) * n * n, m * binomial(n, 2), binomial(m, 2) * binomial(n, 2));
        ensure(got == want, || format!("m={m} n={n}: families {got:?}, expected {want:?}"))?;
        ensure(sp.relation_count() == binomial(m * n, 2) + want.2, || format!("m={m} n={n}: total"))?;
        let orbits = orbit_report(&cartesian_product(&a, &b).map_err(err)?).map_err(err)?;
        ensure(orbits.fixed_count == m * n, || format!("m={m} n={n}: {} fixed points", orbits.fixed_count))?;
        ensure(orbits.nontrivial_count == binomial(m * n, 2), || {
            format!("m={m} n={n}: {} nontrivial orbits", orbits.nontrivial_count)
        })?;
    }
    Ok(())
}

fn dimensions() -> Check {
    for (a, b) in pairs(3).into_iter().filter(|(a, b)| a.size() * b.size() <= 6) {
        dim_identity_report(&a, &b).map_err(err)?;
    }
    let rep = dim_identity_report(&example_x(), &example_y()).map_err(err)?;
    ensure(
        (rep.relations, rep.segre_degree_two, rep.word_space, rep.z_degree_two, rep.kernel_expected) == (18, 18, 36, 21, 3),
        || format!("{rep:?}"),
    )
}

fn hilbert() -> Check {
    for qs in corpus(4) {
        let n = qs.size();
        let p = yb_presentation(&qs).map_err(err)?;
        let gb = truncated_groebner(&p, 5).map_err(err)?;
        let h = hilbert_function(&gb, 5).map_err(err)?;
        for (d, &dim) in h.iter().enumerate() {
            let want = binomial(n + d - 1, d);
            let oracle = quotient_dim_oracle(&p, d).map_err(err)?;
            ensure(dim == want && oracle == want, || {
                format!("n={n} d={d}: normal words {dim}, oracle {oracle}, expected {want} for {qs:?}")
            })?;
        }
    }
    for (a, b) in pairs(3).into_iter().filter(|(a, b)| a.size() * b.size() <= 6) {
        let rep = segre_hilbert_check(&a, &b, 3).map_err(err)?;
        ensure(rep.rows.iter().all(|r| r.oracle.is_some()), || "oracle skipped a degree".into())?;
    }
    Ok(())
}

fn vanishing() -> Check {
    for (a, b) in pairs(3) {
        // segre_map_report fails on any nonvanishing image or zero kernel element
        let rep = segre_map_report(&a, &b).map_err(err)?;
        ensure(rep.kernel_check.len() == binomial(a.size(), 2) * binomial(b.size(), 2), || "kernel size".into())?;
    }
    Ok(())
}

fn pbw_form(qs: &QuadraticSet) -> std::result::Result<QuadraticSet, String> {
    if pbw_check(qs).map_err(err)?.groebner_certified {
        return Ok(qs.clone());
    }
    let perm = find_pbw_enumeration(qs)
        .map_err(err)?
        .ok_or_else(|| format!("no PBW enumeration for square-free {qs:?}"))?;
    qs.relabel(&perm).map_err(err)
}

fn square_free() -> Check {
    let sf: Vec<QuadraticSet> = corpus(3)
        .into_iter()
        .filter(|q| classify(q).is_square_free)
        .map(|q| pbw_form(&q))
        .collect::<std::result::Result<_, _>>()?;
    for a in &sf {
        for b in &sf {
            let cert = square_free_certificate(a, b).map_err(err)?;
            ensure(cert.normal_count_3 == binomial(a.size() + 2, 3) * binomial(b.size() + 2, 3), || {
                format!("{cert:?}")
            })?;
        }
    }
    let cert = square_free_certificate(&example_x(), &QuadraticSet::flip(2)).map_err(err)?;
    ensure(cert.normal_count_3 == 40, || format!("{cert:?}"))?;
    match square_free_certificate(&example_x(), &example_y()) {
        Err(Error::Precondition(_)) => Ok(()),
        other => Err(format!("certificate did not refuse a non-square-free factor: {other:?}")),
    }
}

fn random_presentation(rng: &mut StdRng) -> QuadraticPresentation {
    let n = rng.gen_range(1..=4usize);
    let words = Word::all_of_length(n, 2);
    let count = rng.gen_range(0..=6usize);
    let mut rels: Vec<NcPolynomial> = Vec::new();
    for _ in 0..count {
        let u = &words[rng.gen_range(0..words.len())];
        let v = &words[rng.gen_range(0..words.len())];
        if u == v {
            continue;
        }
        let c = coeff([-2, -1, 1, 3][rng.gen_range(0..4)]);
        let mut f = NcPolynomial::monomial(n, u.clone(), coeff(1));
        f.add_term(v.clone(), c);
        let f = f.monic();
        if !rels.contains(&f) {
            rels.push(f);
        }
    }
    QuadraticPresentation::new(default_labels("x", n), rels).unwrap()
}

fn oracle_equivalence() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5e9e);
    for k in 0..50 {
        let p = random_presentation(&mut rng);
        let gb = truncated_groebner(&p, 4).map_err(err)?;
        let top = gb.complete_through().min(4);
        let h = hilbert_function(&gb, top).map_err(err)?;
        for (d, &dim) in h.iter().enumerate() {
            let oracle = quotient_dim_oracle(&p, d).map_err(err)?;
            ensure(dim == oracle, || {
                format!("sample {k}, degree {d}: normal words {dim}, oracle {oracle}: {:?}", p.display_relations())
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("golden reproduction of the m=3, n=2 example", golden),
        ("counting identities, m,n <= 3", counting),
        ("dimension identities and rank checks, mn <= 6", dimensions),
        ("Hilbert functions, n <= 4, d <= 5; Segre, mn <= 6, d <= 3", hilbert),
        ("vanishing of relations and kernel soundness", vanishing),
        ("square-free certification", square_free),
        ("oracle equivalence on 50 random presentations", oracle_equivalence),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2?})", k + 1, t.elapsed()),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
