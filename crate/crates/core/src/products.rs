//! Products on the full-subcomplex decomposition of `H^*(Z_K)`.
//!
//! For disjoint `I, J` the product `H̃^p(K_I) ⊗ H̃^q(K_J) → H̃^{p+q+1}(K_{I∪J})`
//! sends cocycles `α, β` to the cochain
//! `γ(ω) = sign(ω) · α(ω∩I) · β(ω∩J)` on the `(p+q+1)`-faces `ω` of `K_{I∪J}`,
//! where `sign(ω)` is the parity of the shuffle sorting `(ω∩I, ω∩J)` into `ω`.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{with_field, Field, FieldSpec};
use crate::hochster::{compress, deposit, subset_betti};
use crate::homology::{BettiVector, ChainComplexData, CohomologyBasis};
use crate::limits::ScanLimits;
use crate::linalg::{self, Dense};
use crate::vertex_set::VertexSet;

/// Whether the shuffle taking `(ω∩I, ω∩J)` to `ω` is odd: the number of
/// pairs `x ∈ ω∩J`, `y ∈ ω∩I` with `x < y`.
pub fn shuffle_sign_is_odd(omega: VertexSet, i: VertexSet) -> bool {
    let a = omega.intersection(i);
    let b = omega.difference(i).bits();
    let mut count = 0u32;
    for y in a.iter() {
        count += (b & ((1u64 << (y - 1)) - 1)).count_ones();
    }
    count % 2 == 1
}

struct SubsetData<F: Field> {
    cc: ChainComplexData,
    bases: Vec<OnceLock<CohomologyBasis<F>>>,
}

/// Lazily built chain complexes and cohomology bases of the full
/// subcomplexes, indexed by position within the ground set.
struct Context<'a, F: Field> {
    f: F,
    k: &'a SimplicialComplex,
    ground: VertexSet,
    data: Vec<OnceLock<SubsetData<F>>>,
}

impl<'a, F: Field> Context<'a, F> {
    fn new(f: F, k: &'a SimplicialComplex) -> Self {
        let n = k.ground().len();
        Context { f, k, ground: k.ground(), data: (0..1usize << n).map(|_| OnceLock::new()).collect() }
    }

    fn subset(&self, s: VertexSet) -> &SubsetData<F> {
        self.data[compress(s, self.ground)].get_or_init(|| {
            let cc = ChainComplexData::restricted(self.k, s);
            let slots = (cc.dim() + 2).max(1) as usize;
            SubsetData { cc, bases: (0..slots).map(|_| OnceLock::new()).collect() }
        })
    }

    fn cc(&self, s: VertexSet) -> &ChainComplexData {
        &self.subset(s).cc
    }

    /// `None` when `d` exceeds the dimension of `K_s`.
    fn basis(&self, s: VertexSet, d: isize) -> Option<&CohomologyBasis<F>> {
        let data = self.subset(s);
        let slot = data.bases.get((d + 1) as usize)?;
        Some(slot.get_or_init(|| CohomologyBasis::compute(&self.f, &data.cc, d)))
    }

    fn plan(&self, i: VertexSet, j: VertexSet, p: isize, q: isize) -> Vec<(usize, usize, usize, bool)> {
        plan(self.cc(i.union(j)), self.cc(i), self.cc(j), i, p, q)
    }

    fn cross_matrix(&self, i: VertexSet, j: VertexSet, p: isize, q: isize) -> Result<CrossData<F>> {
        let u = i.union(j);
        let (Some(bi), Some(bj)) = (self.basis(i, p), self.basis(j, q)) else {
            return Ok(CrossData::empty());
        };
        let t = p + q + 1;
        let Some(bu) = self.basis(u, t) else {
            return Ok(CrossData::empty());
        };
        let plan = self.plan(i, j, p, q);
        let n = self.cc(u).count(t);
        let mut rows = Vec::with_capacity(bi.rank() * bj.rank());
        let mut cochains = Vec::with_capacity(bi.rank() * bj.rank());
        for alpha in &bi.reps {
            for beta in &bj.reps {
                let gamma = apply_plan(&self.f, &plan, n, alpha, beta);
                let coords = bu.coordinates(&gamma).ok_or_else(|| {
                    Error::Internal(format!("cross product on {i} x {j} in bidegree ({p},{q}) is not a cocycle"))
                })?;
                rows.push(coords);
                cochains.push(gamma);
            }
        }
        Ok(CrossData { source: (bi.rank(), bj.rank()), target: bu.rank(), rows, cochains })
    }
}

struct CrossData<F: Field> {
    source: (usize, usize),
    target: usize,
    rows: Dense<F::Elem>,
    cochains: Vec<Vec<F::Elem>>,
}

impl<F: Field> CrossData<F> {
    fn empty() -> Self {
        CrossData { source: (0, 0), target: 0, rows: Vec::new(), cochains: Vec::new() }
    }
}

/// For each `(p+q+1)`-face `ω` of `K_{I∪J}` splitting as a `p`-face of `K_I`
/// and a `q`-face of `K_J`: `(ω index, ω∩I index, ω∩J index, sign odd)`.
fn plan(
    cu: &ChainComplexData,
    ci: &ChainComplexData,
    cj: &ChainComplexData,
    i: VertexSet,
    p: isize,
    q: isize,
) -> Vec<(usize, usize, usize, bool)> {
    cu.faces(p + q + 1)
        .iter()
        .enumerate()
        .filter_map(|(w, &omega)| {
            let a = omega.intersection(i);
            if a.len() as isize != p + 1 {
                return None;
            }
            let b = omega.difference(i);
            Some((w, ci.index_of(a)?, cj.index_of(b)?, shuffle_sign_is_odd(omega, i)))
        })
        .collect()
}

fn apply_plan<F: Field>(
    f: &F,
    plan: &[(usize, usize, usize, bool)],
    n: usize,
    alpha: &[F::Elem],
    beta: &[F::Elem],
) -> Vec<F::Elem> {
    let mut gamma = vec![f.zero(); n];
    for &(w, a, b, odd) in plan {
        if f.is_zero(&alpha[a]) || f.is_zero(&beta[b]) {
            continue;
        }
        let x = f.mul(&alpha[a], &beta[b]);
        gamma[w] = if odd { f.neg(&x) } else { x };
    }
    gamma
}

fn check_pair(k: &SimplicialComplex, i: VertexSet, j: VertexSet) -> Result<()> {
    if i.is_empty() {
        return Err(Error::EmptySubset("I"));
    }
    if j.is_empty() {
        return Err(Error::EmptySubset("J"));
    }
    if !i.is_disjoint(j) {
        return Err(Error::NotDisjoint(i, j));
    }
    for s in [i, j] {
        if !s.is_subset(k.ground()) {
            return Err(Error::SubsetOutOfUniverse { subset: s, universe: k.ground() });
        }
    }
    Ok(())
}

/// The cross-product cochain of `α ∈ C^p(K_I)` and `β ∈ C^q(K_J)` on `K_{I∪J}`.
#[allow(clippy::too_many_arguments)]
pub fn cross_cochain<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    i: VertexSet,
    j: VertexSet,
    p: isize,
    q: isize,
    alpha: &[F::Elem],
    beta: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    check_pair(k, i, j)?;
    let (ci, cj) = (ChainComplexData::restricted(k, i), ChainComplexData::restricted(k, j));
    let cu = ChainComplexData::restricted(k, i.union(j));
    if alpha.len() != ci.count(p) || beta.len() != cj.count(q) {
        return Err(Error::Witness("cochain length does not match the face count".into()));
    }
    let plan = plan(&cu, &ci, &cj, i, p, q);
    Ok(apply_plan(f, &plan, cu.count(p + q + 1), alpha, beta))
}

/// The matrix of `H̃^p(K_I) ⊗ H̃^q(K_J) → H̃^{p+q+1}(K_{I∪J})` in the computed
/// representative bases. Row `a · dim H̃^q(K_J) + b` is the image of `α_a ⊗ β_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossProductMap {
    pub field: FieldSpec,
    pub i: VertexSet,
    pub j: VertexSet,
    pub p: isize,
    pub q: isize,
    pub source_dims: (usize, usize),
    pub target_dim: usize,
    pub entries: Vec<Vec<String>>,
    pub rank: usize,
}

impl CrossProductMap {
    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }
}

pub fn cross_product_map(
    k: &SimplicialComplex,
    i: VertexSet,
    j: VertexSet,
    p: isize,
    q: isize,
    field: FieldSpec,
) -> Result<CrossProductMap> {
    check_pair(k, i, j)?;
    with_field!(field, |f| {
        let ctx = Context::new(f, k);
        let data = ctx.cross_matrix(i, j, p, q)?;
        Ok(CrossProductMap {
            field,
            i,
            j,
            p,
            q,
            source_dims: data.source,
            target_dim: data.target,
            entries: data.rows.iter().map(|r| r.iter().map(|x| f.render(x)).collect()).collect(),
            rank: linalg::rank(&f, data.rows),
        })
    })
}

/// A cochain written out over an explicit face basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain {
    pub degree: isize,
    pub faces: Vec<VertexSet>,
    pub coefficients: Vec<String>,
}

impl Cochain {
    fn new<F: Field>(f: &F, degree: isize, faces: &[VertexSet], v: &[F::Elem]) -> Self {
        Cochain { degree, faces: faces.to_vec(), coefficients: v.iter().map(|x| f.render(x)).collect() }
    }

    fn values<F: Field>(&self, f: &F, cc: &ChainComplexData, what: &str) -> Result<Vec<F::Elem>> {
        if self.faces != cc.faces(self.degree) {
            return Err(Error::Witness(format!("{what}: face basis differs from the {}-faces", self.degree)));
        }
        if self.coefficients.len() != self.faces.len() {
            return Err(Error::Witness(format!("{what}: {} coefficients for {} faces", self.coefficients.len(), self.faces.len())));
        }
        self.coefficients
            .iter()
            .map(|s| f.parse(s).ok_or_else(|| Error::Witness(format!("{what}: bad coefficient {s:?}"))))
            .collect()
    }

    /// The non-zero part as `(face, coefficient)`.
    pub fn support(&self) -> Vec<(VertexSet, &str)> {
        self.faces
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| c.as_str() != "0")
            .map(|(s, c)| (*s, c.as_str()))
            .collect()
    }
}

/// A non-trivial product `[α]·[β] = [γ] ≠ 0`, with all cochains written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductWitness {
    pub field: FieldSpec,
    pub i: VertexSet,
    pub j: VertexSet,
    pub p: isize,
    pub q: isize,
    pub alpha: Cochain,
    pub beta: Cochain,
    pub gamma: Cochain,
    /// Coordinates of `[γ]` in the computed basis of `H̃^{p+q+1}(K_{I∪J})`.
    pub class: Vec<String>,
    /// Rank of the whole pairing in this bidegree.
    pub pairing_rank: usize,
}

impl ProductWitness {
    /// Degrees of the two factors in `H^*(Z_K)`.
    pub fn zk_degrees(&self) -> (usize, usize) {
        ((self.i.len() as isize + self.p + 1) as usize, (self.j.len() as isize + self.q + 1) as usize)
    }

    pub fn target_degree(&self) -> isize {
        self.p + self.q + 1
    }

    /// Checks from scratch that `α`, `β` are cocycles, `γ` is their cross
    /// product and `γ` is not a coboundary.
    pub fn verify(&self, k: &SimplicialComplex) -> Result<()> {
        check_pair(k, self.i, self.j).map_err(|e| Error::Witness(e.to_string()))?;
        if self.alpha.degree != self.p || self.beta.degree != self.q || self.gamma.degree != self.target_degree() {
            return Err(Error::Witness("cochain degrees do not match the bidegree".into()));
        }
        with_field!(self.field, |f| self.verify_with(&f, k))
    }

    fn verify_with<F: Field>(&self, f: &F, k: &SimplicialComplex) -> Result<()> {
        let ci = ChainComplexData::restricted(k, self.i);
        let cj = ChainComplexData::restricted(k, self.j);
        let u = self.i.union(self.j);
        let cu = ChainComplexData::restricted(k, u);
        let alpha = self.alpha.values(f, &ci, "alpha")?;
        let beta = self.beta.values(f, &cj, "beta")?;
        let gamma = self.gamma.values(f, &cu, "gamma")?;
        for (name, cc, d, v) in [("alpha", &ci, self.p, &alpha), ("beta", &cj, self.q, &beta)] {
            if !linalg::is_zero_vec(f, &cc.coboundary(f, d, v)) {
                return Err(Error::Witness(format!("{name} is not a cocycle")));
            }
        }
        let expect = apply_plan(f, &plan(&cu, &ci, &cj, self.i, self.p, self.q), cu.count(self.target_degree()), &alpha, &beta);
        if expect != gamma {
            return Err(Error::Witness("gamma is not the cross product of alpha and beta".into()));
        }
        let basis = CohomologyBasis::compute(f, &cu, self.target_degree());
        match basis.coordinates(&gamma) {
            None => Err(Error::Witness("gamma is not a cocycle".into())),
            Some(c) if linalg::is_zero_vec(f, &c) => Err(Error::Witness("gamma is a coboundary".into())),
            Some(_) => Ok(()),
        }
    }
}

/// Options for [`scan_products`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    pub limits: ScanLimits,
    /// Report one witness per contributing pair instead of stopping at the first.
    pub all_pairs: bool,
    /// Only pairs with `I ∪ J` equal to the whole ground set.
    pub full_union_only: bool,
    /// Only products landing in `H̃^t(K_{I∪J})` with this `t`.
    pub target_degree: Option<isize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductScan {
    pub field: FieldSpec,
    pub witnesses: Vec<ProductWitness>,
}

/// The first non-trivial product in the order `(|I∪J|, I∪J, |I|, J)` (sets
/// compared colexicographically), over unordered pairs with `(|I|, I) < (|J|, J)`.
pub fn find_nontrivial_product(k: &SimplicialComplex, field: FieldSpec) -> Result<Option<ProductWitness>> {
    Ok(scan_products(k, field, &ScanOptions::default())?.witnesses.into_iter().next())
}

pub fn scan_products(k: &SimplicialComplex, field: FieldSpec, opts: &ScanOptions) -> Result<ProductScan> {
    let n = k.ground().len();
    opts.limits.check("product scan", n, opts.limits.product_max_m)?;
    let witnesses = with_field!(field, |f| scan_with(&f, k, opts))?;
    Ok(ProductScan { field, witnesses })
}

/// Bit `d + 1` is set when `b̃^d(K_I) ≠ 0`, indexed by position in the ground set.
fn nonzero_degrees(k: &SimplicialComplex, field: FieldSpec) -> Vec<u64> {
    let ground = k.ground();
    let mut nz = vec![0u64; 1 << ground.len()];
    let betti = subset_betti(k, field);
    let mut idx = 0;
    for (pos, slot) in nz.iter_mut().enumerate() {
        let s = deposit(pos as u64, ground);
        if let Some(b) = betti.get(&s) {
            *slot = degree_mask(b);
            idx += 1;
        }
    }
    debug_assert_eq!(idx, betti.len());
    nz
}

fn degree_mask(b: &BettiVector) -> u64 {
    b.nonzero().fold(0, |acc, (d, _)| acc | 1 << (d + 1))
}

fn degrees(mask: u64) -> impl Iterator<Item = isize> {
    (0..64).filter(move |b| mask >> b & 1 == 1).map(|b| b as isize - 1)
}

fn scan_with<F: Field>(f: &F, k: &SimplicialComplex, opts: &ScanOptions) -> Result<Vec<ProductWitness>> {
    let ground = k.ground();
    let n = ground.len();
    let nz = nonzero_degrees(k, f.spec());
    let full = (1u64 << n) - 1;
    let mut unions: Vec<u64> = if opts.full_union_only {
        vec![full]
    } else {
        (1..=full).filter(|&u| u.count_ones() >= 2).collect()
    };
    unions.retain(|&u| nz[u as usize] != 0);
    unions.sort_by_key(|&u| (u.count_ones(), u));
    let ctx = Context::new(f.clone(), k);

    let visit = |u: u64| -> Result<Vec<ProductWitness>> {
        let mut target_mask = nz[u as usize];
        if let Some(t) = opts.target_degree {
            target_mask &= if (-1..63).contains(&t) { 1 << (t + 1) } else { 0 };
        }
        if target_mask == 0 {
            return Ok(Vec::new());
        }
        let mut splits: Vec<u64> = Vec::new();
        let mut i = (u - 1) & u;
        while i != 0 {
            let j = u ^ i;
            if (i.count_ones(), i) < (j.count_ones(), j) && nz[i as usize] != 0 && nz[j as usize] != 0 {
                splits.push(i);
            }
            i = (i - 1) & u;
        }
        splits.sort_by_key(|&i| (i.count_ones(), u ^ i));
        let mut found = Vec::new();
        for i in splits {
            let j = u ^ i;
            if let Some(w) = first_witness(f, &ctx, i, j, nz[i as usize], nz[j as usize], target_mask)? {
                found.push(w);
                if !opts.all_pairs {
                    break;
                }
            }
        }
        Ok(found)
    };

    if opts.all_pairs {
        let per_union: Vec<Vec<ProductWitness>> = unions.par_iter().map(|&u| visit(u)).collect::<Result<_>>()?;
        Ok(per_union.into_iter().flatten().collect())
    } else {
        let first = unions.par_iter().find_map_first(|&u| match visit(u) {
            Ok(v) if v.is_empty() => None,
            other => Some(other),
        });
        first.transpose().map(Option::unwrap_or_default)
    }
}

#[allow(clippy::too_many_arguments)]
fn first_witness<F: Field>(
    f: &F,
    ctx: &Context<'_, F>,
    ci: u64,
    cj: u64,
    mask_i: u64,
    mask_j: u64,
    mask_u: u64,
) -> Result<Option<ProductWitness>> {
    let i = deposit(ci, ctx.ground);
    let j = deposit(cj, ctx.ground);
    for p in degrees(mask_i) {
        for q in degrees(mask_j) {
            let t = p + q + 1;
            if !(-1..63).contains(&t) || mask_u >> (t + 1) & 1 == 0 {
                continue;
            }
            let data = ctx.cross_matrix(i, j, p, q)?;
            let Some(row) = data.rows.iter().position(|r| !linalg::is_zero_vec(f, r)) else {
                continue;
            };
            let (ra, rb) = (row / data.source.1, row % data.source.1);
            let bi = ctx.basis(i, p).expect("non-zero cohomology");
            let bj = ctx.basis(j, q).expect("non-zero cohomology");
            let u = i.union(j);
            let render = |v: &[F::Elem]| v.iter().map(|x| f.render(x)).collect::<Vec<_>>();
            return Ok(Some(ProductWitness {
                field: f.spec(),
                i,
                j,
                p,
                q,
                alpha: Cochain::new(f, p, ctx.cc(i).faces(p), &bi.reps[ra]),
                beta: Cochain::new(f, q, ctx.cc(j).faces(q), &bj.reps[rb]),
                gamma: Cochain::new(f, t, ctx.cc(u).faces(t), &data.cochains[row]),
                class: render(&data.rows[row]),
                pairing_rank: linalg::rank(f, data.rows.clone()),
            }));
        }
    }
    Ok(None)
}
