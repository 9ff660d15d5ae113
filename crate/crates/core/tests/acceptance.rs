//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use golodkit_core::catalog;
use golodkit_core::products::cross_product_map;
use golodkit_core::{
    find_nontrivial_product, golod_verdict, hochster_table, koszul_product_nontrivial, koszul_tor_table,
    moore_complex, nonisomorphic_graphs, surface_golod_equivalence_report, verify_moore, FieldSpec, Reason,
    SimplicialComplex, VertexSet,
};
use proptest::test_runner::{Config, TestRunner};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Duration, limit: Duration, what: &str) -> Result<(), String> {
    check(t <= limit, format!("{what} took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
}

fn criterion_1() -> Outcome {
    let mut detail = Vec::new();
    for (p, limit) in [(2usize, 10u64), (3, 10), (5, 300)] {
        let k = moore_complex(p).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let modp = golod_verdict(&k, FieldSpec::Prime(p as u32));
        let rational = golod_verdict(&k, FieldSpec::Rationals);
        let elapsed = start.elapsed();
        let w = modp.witness().ok_or_else(|| format!("M({p}) over F{p}: {}", modp.label()))?;
        w.verify(&k).map_err(|e| format!("M({p}) witness does not re-verify: {e}"))?;
        if p == 2 {
            check(
                w.i == VertexSet::from_vertices([6, 7]) && w.j == VertexSet::full(5),
                format!("M(2) witness is I={} J={}", w.i, w.j),
            )?;
        }
        check(rational.reason() == Some(Reason::RationalCriterion), format!("M({p}) over Q: {}", rational.label()))?;
        within(elapsed, Duration::from_secs(limit), &format!("M({p})"))?;
        detail.push(format!("M({p}) I={} J={} ({},{}) {:.2}s", w.i, w.j, w.p, w.q, elapsed.as_secs_f64()));
    }
    Ok(detail.join("; "))
}

fn criterion_2() -> Outcome {
    let mut detail = Vec::new();
    for p in 2..=5 {
        let k = moore_complex(p).map_err(|e| e.to_string())?;
        let r = verify_moore(&k, p).map_err(|e| e.to_string())?;
        check(r.passed(), format!("M({p}): {:?}", r.diffs))?;
        check(r.homology_ok && r.chordal && r.proxy_failures.is_empty(), format!("M({p}) report inconsistent"))?;
        if p > 2 {
            check(r.stated_ordering_ok == Some(true), format!("M({p}): stated elimination ordering rejected"))?;
        }
        detail.push(format!("M({p}) {} subcomplexes", r.proper_subcomplexes_checked));
    }
    Ok(detail.join("; "))
}

fn criterion_3() -> Outcome {
    let corpus = [
        ("boundary of the 3-simplex", SimplicialComplex::simplex_boundary(4).unwrap()),
        ("rp2-6", catalog::rp2_six()),
        ("torus-7", catalog::torus_seven()),
        ("m2", catalog::moore_rp2()),
        ("octahedron", catalog::octahedron()),
        ("bipyramid-5", catalog::bipyramid(5)),
    ];
    let mut non_neighborly = 0;
    for (name, k) in &corpus {
        let r = surface_golod_equivalence_report(k).map_err(|e| format!("{name}: {e}"))?;
        check(r.agreement, format!("{name}: 1-neighborly = {}, verdict {}", r.one_neighborly, r.verdict.label()))?;
        if !r.one_neighborly {
            non_neighborly += 1;
            check(r.top_class_hit, format!("{name}: no rank-1 product into the top class"))?;
            let w = r.top_witness.as_ref().unwrap();
            w.verify(k).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    Ok(format!("{} surfaces, {non_neighborly} not 1-neighborly", corpus.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let k = catalog::remark_complex();
    check(!k.is_k_neighborly(1), "remark complex is 1-neighborly")?;
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        let w = find_nontrivial_product(&k, field).map_err(|e| e.to_string())?;
        check(w.is_none(), format!("product found over {field}"))?;
    }
    let v = golod_verdict(&k, FieldSpec::Rationals);
    check(v.reason() == Some(Reason::RationalCriterion), format!("verdict over Q: {}", v.label()))?;
    within(start.elapsed(), Duration::from_secs(1), "remark complex")?;
    Ok(format!("{:.3}s", start.elapsed().as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut chordal_count = 0;
    for n in 1..=6 {
        let graphs = nonisomorphic_graphs(n).map_err(|e| e.to_string())?;
        counts.push(graphs.len());
        for g in &graphs {
            let k = SimplicialComplex::from_graph(n, g).map_err(|e| e.to_string())?;
            let chordal = golodkit_core::is_chordal(g).0;
            let product = find_nontrivial_product(&k, FieldSpec::Prime(2)).map_err(|e| e.to_string())?;
            check(chordal == product.is_none(), format!("graph {:?}: chordal = {chordal}, product = {}", g.edges().collect::<Vec<_>>(), product.is_some()))?;
            chordal_count += chordal as usize;
        }
    }
    check(counts == [1, 2, 4, 11, 34, 156], format!("class counts {counts:?}"))?;
    within(start.elapsed(), Duration::from_secs(60), "graph sweep")?;
    Ok(format!("{} classes, {chordal_count} chordal, {:.1}s", counts.iter().sum::<usize>(), start.elapsed().as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let corpus = oracle_corpus();
    check(corpus.len() >= 30, format!("corpus has {} complexes", corpus.len()))?;
    let mut pairings = 0;
    for (name, k) in &corpus {
        check(k.ground().len() <= 8, format!("{name} too large"))?;
        for field in FIELDS {
            let h = hochster_table(k, field).map_err(|e| e.to_string())?;
            let o = koszul_tor_table(k, field).map_err(|e| e.to_string())?;
            check(h == o, format!("{name} over {field}: Tor tables differ"))?;
            let p = find_nontrivial_product(k, field).map_err(|e| e.to_string())?.is_some();
            let q = koszul_product_nontrivial(k, field).map_err(|e| e.to_string())?;
            check(p == q, format!("{name} over {field}: product scan {p}, Koszul {q}"))?;
            for ((t, t2, i, i2), rank) in golodkit_core::koszul::koszul_pairing_ranks(k, field).map_err(|e| e.to_string())? {
                let (pd, qd) = (t.len() as isize - i as isize - 1, t2.len() as isize - i2 as isize - 1);
                let map = cross_product_map(k, t, t2, pd, qd, field).map_err(|e| e.to_string())?;
                check(map.rank == rank, format!("{name} over {field}: pairing {t} x {t2} rank {} vs {rank}", map.rank))?;
                pairings += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(600), "oracle corpus")?;
    Ok(format!("{} complexes x 4 fields, {pairings} non-zero pairings matched, {:.1}s", corpus.len(), start.elapsed().as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let cases = 200;
    let runner = || TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let mut names = Vec::new();
    macro_rules! prop {
        ($name:expr, $strategy:expr, $body:expr) => {{
            runner().run(&$strategy, $body).map_err(|e| format!("{}: {e}", $name))?;
            names.push($name);
        }};
    }
    prop!("boundary squares to zero", arb_complex(7), |k| prop_boundary_squares_to_zero(&k));
    prop!("euler characteristic", arb_complex(7), |k| prop_euler_characteristic(&k));
    prop!("universal coefficients", arb_complex(7), |k| prop_universal_coefficients(&k));
    prop!("full subcomplexes and hat closure", (arb_complex(7), proptest::prelude::any::<u64>(), proptest::prelude::any::<u64>()), |(k, a, b)| prop_full_subcomplex_and_hat(&k, a, b));
    prop!("join f-vector", (arb_complex(4), arb_complex(4)), |(a, b)| prop_join_f_vector(&a, &b));
    prop!("representative independence", (arb_complex(6), proptest::prelude::any::<u64>()), |(k, s)| prop_representative_independence(&k, s));
    prop!("graded commutativity", (arb_complex(6), proptest::prelude::any::<u64>()), |(k, s)| prop_graded_commutativity(&k, s));
    prop!("chordality self-certification", arb_graph(7), |g| prop_chordality_self_certifies(&g));
    Ok(format!("{} properties x {cases} cases", names.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 Moore complexes: not Golod over F_p, rationally Golod", criterion_1),
        ("2 Moore complexes: homology, chordality, proper subcomplexes", criterion_2),
        ("3 surfaces: 1-neighborly iff Golod", criterion_3),
        ("4 {1,2,3},{3,4}: trivial products, rational criterion", criterion_4),
        ("5 graphs on <= 6 vertices: chordal iff no product", criterion_5),
        ("6 Koszul oracle agreement", criterion_6),
        ("7 invariant property suite", criterion_7),
    ];
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !only.is_empty() && !only.iter().any(|o| name.starts_with(o.as_str())) {
            continue;
        }
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name} [{detail}] ({:.1}s)", start.elapsed().as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
