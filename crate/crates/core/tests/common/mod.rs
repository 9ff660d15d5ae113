#![allow(dead_code)]

use std::collections::BTreeSet;

use golodkit_core::catalog;
use golodkit_core::field::{Field, PrimeField, Rationals};
use golodkit_core::homology::{ChainComplexData, CohomologyBasis};
use golodkit_core::koszul::KoszulComplexData;
use golodkit_core::products::{cross_cochain, cross_product_map};
use golodkit_core::{
    integral_homology, is_chordal, reduced_betti, verify_peo, FieldSpec, Graph, SimplicialComplex, VertexSet,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FIELDS: [FieldSpec; 4] = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(5)];

pub fn complex_from_masks(m: usize, masks: &[u64]) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = masks.iter().map(|&b| VertexSet::from_bits(b).to_vec()).collect();
    SimplicialComplex::new(m, facets).expect("masks lie in [m]")
}

/// Random complexes on up to `max_m` vertices with up to 7 generating faces.
pub fn arb_complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(1u64..(1u64 << m), 0..7).prop_map(move |masks| complex_from_masks(m, &masks))
    })
}

/// Random graphs on `1..=n`, `n ≤ max_n`.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(1..=n, edges).unwrap()
        })
    })
}

pub fn random_complex(rng: &mut ChaCha8Rng, m: usize, facets: usize, max_size: usize) -> SimplicialComplex {
    let masks: Vec<u64> = (0..facets)
        .map(|_| loop {
            let b = rng.gen_range(1u64..(1u64 << m));
            if b.count_ones() as usize <= max_size {
                break b;
            }
        })
        .collect();
    complex_from_masks(m, &masks)
}

/// Named complexes with `m ≤ 8` plus seeded random ones, at least 30 in all.
pub fn oracle_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = vec![
        ("boundary-4".into(), SimplicialComplex::simplex_boundary(4).unwrap()),
        ("rp2-6".into(), catalog::rp2_six()),
        ("torus-7".into(), catalog::torus_seven()),
        ("m2".into(), catalog::moore_rp2()),
        ("octahedron".into(), catalog::octahedron()),
        ("bipyramid-5".into(), catalog::bipyramid(5)),
        ("remark".into(), catalog::remark_complex()),
        ("simplex-3".into(), SimplicialComplex::simplex(3).unwrap()),
        ("points-2".into(), catalog::points(2)),
        ("points-4".into(), catalog::points(4)),
    ];
    for n in 4..=8 {
        out.push((format!("cycle-{n}"), SimplicialComplex::cycle(n).unwrap()));
    }
    let c4 = SimplicialComplex::cycle(4).unwrap();
    let two = SimplicialComplex::on_ground(6, VertexSet::from_vertices([5, 6]), &[VertexSet::singleton(5), VertexSet::singleton(6)]).unwrap();
    out.push(("cycle-4 * points".into(), c4.join(&two).unwrap()));
    out.push(("ghost".into(), SimplicialComplex::new(4, [vec![1, 2], vec![2, 3]]).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(0x601d);
    for idx in 0..16 {
        let m = 4 + idx % 5;
        let facets = 3 + idx % 5;
        out.push((format!("random-{idx}"), random_complex(&mut rng, m, facets, 4)));
    }
    out
}

/// Chordal iff no induced cycle of length at least 4, by subset enumeration.
pub fn brute_force_chordal(g: &Graph) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    for mask in 0u32..1 << n {
        if mask.count_ones() < 4 {
            continue;
        }
        let keep: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        let h = g.induced(&keep);
        let two_regular = keep.iter().all(|&v| h.neighborhood(v).unwrap().len() == 2);
        if two_regular && h.edge_count() == keep.len() && connected(&h) {
            return false;
        }
    }
    true
}

fn connected(g: &Graph) -> bool {
    let Some(start) = g.vertices().next() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighborhood(v).unwrap() {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == g.vertex_count()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn prop_boundary_squares_to_zero(k: &SimplicialComplex) -> Result<(), TestCaseError> {
    ensure(ChainComplexData::new(k).boundary_squares_to_zero(), || format!("d^2 != 0 on {:?}", k.facet_lists()))?;
    if k.ground().len() <= 7 {
        let kd = KoszulComplexData::new(k).unwrap();
        ensure(kd.parts.iter().all(|p| p.squares_to_zero()), || "Koszul d^2 != 0".into())?;
    }
    Ok(())
}

pub fn prop_euler_characteristic(k: &SimplicialComplex) -> Result<(), TestCaseError> {
    for field in FIELDS {
        let b = reduced_betti(k, field);
        ensure(b.euler_characteristic() == k.euler_characteristic() - 1, || {
            format!("reduced Euler characteristic mismatch over {field} on {:?}", k.facet_lists())
        })?;
    }
    Ok(())
}

pub fn prop_universal_coefficients(k: &SimplicialComplex) -> Result<(), TestCaseError> {
    let h = integral_homology(k);
    let q = reduced_betti(k, FieldSpec::Rationals);
    for d in -1..=k.dim() {
        ensure(q.get(d) == h.free_rank(d), || format!("rational b_{d} != free rank"))?;
    }
    for p in [2u64, 3, 5] {
        let b = reduced_betti(k, FieldSpec::Prime(p as u32));
        for d in -1..=k.dim() {
            let tp = |e: isize| h.group(e).map_or(0, |g| g.p_torsion_count(p));
            let expect = h.free_rank(d) + tp(d) + tp(d - 1);
            ensure(b.get(d) == expect, || format!("b_{d}(F{p}) = {} but UCT gives {expect} on {:?}", b.get(d), k.facet_lists()))?;
        }
    }
    Ok(())
}

pub fn prop_full_subcomplex_and_hat(k: &SimplicialComplex, i_bits: u64, j_bits: u64) -> Result<(), TestCaseError> {
    let g = k.ground().bits();
    let i = VertexSet::from_bits(i_bits & g);
    let j = VertexSet::from_bits(j_bits & i.bits());
    let ki = k.full_subcomplex(i).unwrap();
    ensure(ki.full_subcomplex(j).unwrap() == k.full_subcomplex(j).unwrap(), || "(K_I)_J != K_J".into())?;
    ensure(ki.full_subcomplex(i).unwrap() == ki, || "K_I not idempotent".into())?;
    let hat = k.hat_closure();
    for layer in k.faces_by_dim() {
        for &f in layer {
            ensure(hat.contains(f), || format!("{f} lost in hat closure"))?;
        }
    }
    for s in k.minimal_non_faces() {
        ensure(hat.contains(s), || format!("minimal non-face {s} missing from hat closure"))?;
    }
    ensure(hat.full_subcomplex(i).unwrap() == ki.hat_closure(), || "hat closure does not commute with restriction".into())
}

pub fn prop_join_f_vector(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<(), TestCaseError> {
    // relabel b onto fresh vertices
    let shift = a.m();
    let facets: Vec<Vec<usize>> = b.facet_lists().iter().map(|f| f.iter().map(|v| v + shift).collect()).collect();
    let ground = VertexSet::from_vertices(b.ground().iter().map(|v| v + shift));
    let masks: Vec<VertexSet> = facets.iter().map(|f| VertexSet::from_vertices(f.iter().copied())).collect();
    let b2 = SimplicialComplex::on_ground(a.m() + b.m(), ground, &masks).unwrap();
    let j = a.join(&b2).unwrap();
    let (fa, fb) = (a.f_vector(), b2.f_vector());
    let mut expect = vec![0usize; fa.len() + fb.len() - 1];
    for (x, p) in fa.iter().enumerate() {
        for (y, q) in fb.iter().enumerate() {
            expect[x + y] += p * q;
        }
    }
    while expect.len() > 1 && expect.last() == Some(&0) {
        expect.pop();
    }
    ensure(j.f_vector() == expect, || format!("join f-vector {:?} != {:?}", j.f_vector(), expect))
}

/// A disjoint pair with non-zero cohomology on both sides, chosen by `seed`.
fn pick_pair(k: &SimplicialComplex, field: FieldSpec, seed: u64) -> Option<(VertexSet, VertexSet, isize, isize)> {
    let ground = k.ground();
    let mut cands = Vec::new();
    for i in ground.subsets().filter(|s| !s.is_empty()) {
        let rest = ground.difference(i);
        for j in rest.subsets().filter(|s| !s.is_empty()) {
            let bi = reduced_betti(&k.full_subcomplex(i).unwrap(), field);
            let bj = reduced_betti(&k.full_subcomplex(j).unwrap(), field);
            for (p, _) in bi.nonzero() {
                for (q, _) in bj.nonzero() {
                    cands.push((i, j, p, q));
                }
            }
        }
    }
    if cands.is_empty() {
        None
    } else {
        Some(cands[(seed as usize) % cands.len()])
    }
}

fn random_vec<F: Field>(f: &F, rng: &mut ChaCha8Rng, n: usize) -> Vec<F::Elem> {
    (0..n).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect()
}

/// Perturbing `α` and `β` by coboundaries leaves the class of the cross product unchanged.
pub fn prop_representative_independence(k: &SimplicialComplex, seed: u64) -> Result<(), TestCaseError> {
    fn run<F: Field>(f: &F, k: &SimplicialComplex, seed: u64) -> Result<(), TestCaseError> {
        let Some((i, j, p, q)) = pick_pair(k, f.spec(), seed) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (ci, cj) = (ChainComplexData::restricted(k, i), ChainComplexData::restricted(k, j));
        let cu = ChainComplexData::restricted(k, i.union(j));
        let (bi, bj) = (CohomologyBasis::compute(f, &ci, p), CohomologyBasis::compute(f, &cj, q));
        let bu = CohomologyBasis::compute(f, &cu, p + q + 1);
        let perturb = |cc: &ChainComplexData, d: isize, v: &[F::Elem], rng: &mut ChaCha8Rng| -> Vec<F::Elem> {
            if d < 0 {
                return v.to_vec();
            }
            let eta = random_vec(f, rng, cc.count(d - 1));
            let de = cc.coboundary(f, d - 1, &eta);
            v.iter().zip(&de).map(|(a, b)| f.add(a, b)).collect()
        };
        for alpha in &bi.reps {
            for beta in &bj.reps {
                let g0 = cross_cochain(f, k, i, j, p, q, alpha, beta).unwrap();
                let a1 = perturb(&ci, p, alpha, &mut rng);
                let b1 = perturb(&cj, q, beta, &mut rng);
                let g1 = cross_cochain(f, k, i, j, p, q, &a1, &b1).unwrap();
                let c0 = bu.coordinates(&g0);
                let c1 = bu.coordinates(&g1);
                ensure(c0.is_some() && c0 == c1, || format!("class changed for {i} x {j} ({p},{q}) over {}", f.spec()))?;
            }
        }
        Ok(())
    }
    run(&Rationals, k, seed)?;
    run(&PrimeField::new(2), k, seed)?;
    run(&PrimeField::new(3), k, seed)
}

/// Swapping the factors multiplies the product by `(-1)^{(p+1)(q+1)}`,
/// both on cochains and on the matrix of the pairing.
pub fn prop_graded_commutativity(k: &SimplicialComplex, seed: u64) -> Result<(), TestCaseError> {
    let f = PrimeField::new(5);
    let Some((i, j, p, q)) = pick_pair(k, f.spec(), seed) else { return Ok(()) };
    let odd = (p + 1) * (q + 1) % 2 != 0;
    let ab = cross_product_map(k, i, j, p, q, f.spec()).unwrap();
    let ba = cross_product_map(k, j, i, q, p, f.spec()).unwrap();
    ensure(ab.rank == ba.rank, || "rank changed under swap".into())?;
    let (ri, rj) = ab.source_dims;
    for a in 0..ri {
        for b in 0..rj {
            let x = &ab.entries[a * rj + b];
            let y = &ba.entries[b * ri + a];
            for (u, v) in x.iter().zip(y) {
                let (u, v) = (f.parse(u).unwrap(), f.parse(v).unwrap());
                let expect = if odd { f.neg(&u) } else { u };
                ensure(expect == v, || format!("swap sign wrong for {i} x {j} ({p},{q})"))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let ci = ChainComplexData::restricted(k, i);
    let cj = ChainComplexData::restricted(k, j);
    let alpha = random_vec(&f, &mut rng, ci.count(p));
    let beta = random_vec(&f, &mut rng, cj.count(q));
    let g = cross_cochain(&f, k, i, j, p, q, &alpha, &beta).unwrap();
    let h = cross_cochain(&f, k, j, i, q, p, &beta, &alpha).unwrap();
    let g: Vec<u64> = if odd { g.iter().map(|x| f.neg(x)).collect() } else { g };
    ensure(g == h, || "cochain-level swap sign wrong".into())
}

pub fn prop_chordality_self_certifies(g: &Graph) -> Result<(), TestCaseError> {
    let (chordal, peo) = is_chordal(g);
    ensure(chordal == brute_force_chordal(g), || format!("chordality wrong on {:?}", g.edges().collect::<Vec<_>>()))?;
    match peo {
        Some(order) => ensure(chordal && verify_peo(g, &order).unwrap(), || "returned ordering is not perfect".into()),
        None => ensure(!chordal, || "chordal graph without ordering".into()),
    }
}
