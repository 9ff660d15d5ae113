//! Tor of the Stanley-Reisner ring with its product, computed directly from
//! the Koszul complex `k[K] ⊗ Λ[u_1, ..., u_m]`.
//!
//! Only squarefree multidegrees `T` matter (the others are acyclic). In
//! multidegree `T` the basis is `u_S v^A` with `S ⊔ A = T` and `A ∈ K`,
//! in homological degree `|S|`, and
//! `d(u_S v^A) = Σ_k (-1)^k u_{S - s_k} v^{A + s_k}` with `s_0 < s_1 < ...`,
//! dropping the terms whose monomial is not a face.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{with_field, Field, FieldSpec};
use crate::hochster::{compress, deposit, TorTable};
use crate::homology::BettiVector;
use crate::limits::ScanLimits;
use crate::linalg::{self, Reducer};
use crate::vertex_set::VertexSet;

/// The Koszul complex in one squarefree multidegree.
#[derive(Clone, Debug)]
pub struct KoszulMultidegree {
    pub t: VertexSet,
    /// `basis[i]` lists the exterior supports `S` (`|S| = i`) in colex order.
    pub basis: Vec<Vec<VertexSet>>,
    /// `differential[i][a]` is `d` of the `a`-th degree-`i` element, as
    /// `(index in degree i-1, sign)`.
    differential: Vec<Vec<Vec<(usize, i8)>>>,
}

impl KoszulMultidegree {
    fn new(k: &SimplicialComplex, t: VertexSet) -> Self {
        let mut basis = vec![Vec::new(); t.len() + 1];
        for s in t.subsets() {
            if k.contains(t.difference(s)) {
                basis[s.len()].push(s);
            }
        }
        let differential = (0..basis.len())
            .map(|i| {
                if i == 0 {
                    return vec![Vec::new(); basis[0].len()];
                }
                basis[i]
                    .iter()
                    .map(|s| {
                        s.iter()
                            .enumerate()
                            .filter_map(|(pos, v)| {
                                let idx = basis[i - 1].binary_search(&s.without(v)).ok()?;
                                Some((idx, if pos % 2 == 0 { 1 } else { -1 }))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        KoszulMultidegree { t, basis, differential }
    }

    pub fn dim(&self, i: usize) -> usize {
        self.basis.get(i).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    /// `d ∘ d = 0`, checked over the integers.
    pub fn squares_to_zero(&self) -> bool {
        (2..self.basis.len()).all(|i| {
            self.differential[i].iter().all(|col| {
                let mut acc = vec![0i64; self.dim(i - 2)];
                for &(a, s) in col {
                    for &(b, r) in &self.differential[i - 1][a] {
                        acc[b] += (s * r) as i64;
                    }
                }
                acc.iter().all(|&x| x == 0)
            })
        })
    }

    fn matrix<F: Field>(&self, f: &F, i: usize) -> Vec<Vec<F::Elem>> {
        let mut rows = vec![vec![f.zero(); self.dim(i)]; self.dim(i.wrapping_sub(1))];
        if i > 0 {
            for (a, col) in self.differential[i].iter().enumerate() {
                for &(b, s) in col {
                    rows[b][a] = f.from_i64(s as i64);
                }
            }
        }
        rows
    }

    fn image<F: Field>(&self, f: &F, i: usize) -> Vec<Vec<F::Elem>> {
        self.differential.get(i).map_or_else(Vec::new, |cols| {
            cols.iter()
                .map(|col| {
                    let mut v = vec![f.zero(); self.dim(i - 1)];
                    for &(b, s) in col {
                        v[b] = f.from_i64(s as i64);
                    }
                    v
                })
                .collect()
        })
    }
}

/// The Koszul complex of `k[K]` in every squarefree multidegree.
#[derive(Clone, Debug)]
pub struct KoszulComplexData {
    pub ground: VertexSet,
    /// Indexed by position of `T` within the ground set.
    pub parts: Vec<KoszulMultidegree>,
}

impl KoszulComplexData {
    pub fn new(k: &SimplicialComplex) -> Result<Self> {
        Self::with_limits(k, &ScanLimits::default())
    }

    pub fn with_limits(k: &SimplicialComplex, limits: &ScanLimits) -> Result<Self> {
        let ground = k.ground();
        limits.check("koszul oracle", ground.len(), limits.koszul_max_m)?;
        let parts: Vec<KoszulMultidegree> = (0..1u64 << ground.len())
            .into_par_iter()
            .map(|idx| KoszulMultidegree::new(k, deposit(idx, ground)))
            .collect();
        if let Some(bad) = parts.iter().find(|p| !p.squares_to_zero()) {
            return Err(Error::Internal(format!("Koszul differential does not square to zero in multidegree {}", bad.t)));
        }
        Ok(KoszulComplexData { ground, parts })
    }

    pub fn part(&self, t: VertexSet) -> &KoszulMultidegree {
        &self.parts[compress(t, self.ground)]
    }

    /// `u_S v^A · u_{S'} v^{A'}` in multidegree `T ⊔ T'`: the support
    /// `S ∪ S'` and the sign, or `None` when the product vanishes.
    pub fn basis_product(
        &self,
        k: &SimplicialComplex,
        (t, s): (VertexSet, VertexSet),
        (t2, s2): (VertexSet, VertexSet),
    ) -> Option<(VertexSet, bool)> {
        if !t.is_disjoint(t2) {
            return None;
        }
        let a = t.difference(s).union(t2.difference(s2));
        if !k.contains(a) {
            return None;
        }
        let mut inversions = 0u32;
        for y in s2.iter() {
            inversions += (s.bits() >> y).count_ones();
        }
        Some((s.union(s2), inversions % 2 == 1))
    }
}

struct Homology<F: Field> {
    /// Per degree: boundaries only.
    boundaries: Vec<Reducer<F>>,
    /// Per degree: cycle representatives of a homology basis.
    reps: Vec<Vec<Vec<F::Elem>>>,
}

fn homology<F: Field>(f: &F, part: &KoszulMultidegree) -> Homology<F> {
    let top = part.basis.len();
    let mut boundaries = Vec::with_capacity(top);
    let mut reps = Vec::with_capacity(top);
    for i in 0..top {
        let mut b = Reducer::new(f.clone(), part.dim(i), 0);
        for v in part.image(f, i + 1) {
            b.insert(&v, &[]);
        }
        let cycles = if i == 0 {
            (0..part.dim(0))
                .map(|a| {
                    let mut e = vec![f.zero(); part.dim(0)];
                    e[a] = f.one();
                    e
                })
                .collect()
        } else {
            linalg::kernel_basis(f, part.matrix(f, i), part.dim(i))
        };
        let mut ext = b.clone();
        let r: Vec<_> = cycles.into_iter().filter(|z| ext.insert(z, &[])).collect();
        boundaries.push(b);
        reps.push(r);
    }
    Homology { boundaries, reps }
}

fn all_homology<F: Field>(f: &F, data: &KoszulComplexData) -> Vec<Homology<F>> {
    data.parts.par_iter().map(|p| homology(f, p)).collect()
}

/// `dim H_i` of multidegree `T` as a reduced Betti vector of `K_T`
/// (`b̃^{|T|-i-1}`).
fn as_betti(t: VertexSet, dims: impl Iterator<Item = (usize, usize)>) -> BettiVector {
    let mut values = vec![0; t.len() + 1];
    for (i, d) in dims {
        values[t.len() - i] += d;
    }
    BettiVector::from_values(values)
}

pub fn koszul_tor_table(k: &SimplicialComplex, field: FieldSpec) -> Result<TorTable> {
    koszul_tor_table_with(k, field, &ScanLimits::default())
}

pub fn koszul_tor_table_with(k: &SimplicialComplex, field: FieldSpec, limits: &ScanLimits) -> Result<TorTable> {
    let data = KoszulComplexData::with_limits(k, limits)?;
    let hom = with_field!(field, |f| {
        all_homology(&f, &data).iter().map(|h| h.reps.iter().map(Vec::len).collect::<Vec<_>>()).collect::<Vec<_>>()
    });
    let mut breakdown = BTreeMap::new();
    for (part, dims) in data.parts.iter().zip(hom) {
        let b = as_betti(part.t, dims.into_iter().enumerate());
        if !b.is_zero() {
            breakdown.insert(part.t, b);
        }
    }
    Ok(TorTable::from_breakdown(field, data.ground.len(), breakdown))
}

/// Ranks of `Tor_{i}(T) ⊗ Tor_{i'}(T') → Tor_{i+i'}(T ⊔ T')` for disjoint
/// non-empty `T, T'` with `(|T|, T) < (|T'|, T')`; non-zero ranks only.
pub type PairingRanks = BTreeMap<(VertexSet, VertexSet, usize, usize), usize>;

pub fn koszul_pairing_ranks(k: &SimplicialComplex, field: FieldSpec) -> Result<PairingRanks> {
    let data = KoszulComplexData::new(k)?;
    with_field!(field, |f| Ok(pairings(&f, k, &data, false)))
}

pub fn koszul_product_nontrivial(k: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let data = KoszulComplexData::new(k)?;
    with_field!(field, |f| Ok(!pairings(&f, k, &data, true).is_empty()))
}

/// The product of two chains `x ∈ C_i(T)`, `y ∈ C_{i'}(T')`.
fn chain_product<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    data: &KoszulComplexData,
    (t, i, x): (VertexSet, usize, &[F::Elem]),
    (t2, i2, y): (VertexSet, usize, &[F::Elem]),
) -> Vec<F::Elem> {
    let target = data.part(t.union(t2));
    let mut out = vec![f.zero(); target.dim(i + i2)];
    if !t.is_disjoint(t2) {
        return out;
    }
    let (pa, pb) = (data.part(t), data.part(t2));
    for (a, xa) in x.iter().enumerate() {
        if f.is_zero(xa) {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if f.is_zero(yb) {
                continue;
            }
            let Some((s, odd)) = data.basis_product(k, (t, pa.basis[i][a]), (t2, pb.basis[i2][b])) else {
                continue;
            };
            let idx = target.basis[i + i2].binary_search(&s).expect("product support is a basis element");
            let c = f.mul(xa, yb);
            out[idx] = if odd { f.sub(&out[idx], &c) } else { f.add(&out[idx], &c) };
        }
    }
    out
}

fn pairings<F: Field>(f: &F, k: &SimplicialComplex, data: &KoszulComplexData, stop_at_first: bool) -> PairingRanks {
    let hom = all_homology(f, data);
    let ground = data.ground;
    let n = ground.len();
    let live: Vec<u64> = (1..1u64 << n).filter(|&c| hom[c as usize].reps.iter().any(|r| !r.is_empty())).collect();
    let mut pairs = Vec::new();
    for &a in &live {
        for &b in &live {
            if a & b == 0 && (a.count_ones(), a) < (b.count_ones(), b) && live.binary_search(&(a | b)).is_ok() {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_by_key(|&(a, b)| ((a | b).count_ones(), a | b, a.count_ones(), b));
    let eval = |&(a, b): &(u64, u64)| -> Vec<((VertexSet, VertexSet, usize, usize), usize)> {
        let (t, t2) = (deposit(a, ground), deposit(b, ground));
        let (ha, hb, hu) = (&hom[a as usize], &hom[b as usize], &hom[(a | b) as usize]);
        let mut out = Vec::new();
        for (i, ra) in ha.reps.iter().enumerate() {
            for (i2, rb) in hb.reps.iter().enumerate() {
                if ra.is_empty() || rb.is_empty() || hu.reps.get(i + i2).is_none_or(Vec::is_empty) {
                    continue;
                }
                let mut red = hu.boundaries[i + i2].clone();
                let mut rank = 0;
                for x in ra {
                    for y in rb {
                        let z = chain_product(f, k, data, (t, i, x), (t2, i2, y));
                        if red.insert(&z, &[]) {
                            rank += 1;
                        }
                    }
                }
                if rank > 0 {
                    out.push(((t, t2, i, i2), rank));
                }
            }
        }
        out
    };
    if stop_at_first {
        pairs.par_iter().find_map_first(|p| Some(eval(p)).filter(|v| !v.is_empty())).unwrap_or_default().into_iter().collect()
    } else {
        pairs.par_iter().flat_map_iter(eval).collect::<Vec<_>>().into_iter().collect()
    }
}

/// Checks `x · y = (-1)^{i i'} y · x` on all pairs of basis chains, and that
/// the product with the unit of `C_0(∅)` is the identity.
pub fn graded_commutativity_holds(k: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let data = KoszulComplexData::new(k)?;
    with_field!(field, |f| Ok(commutes(&f, k, &data)))
}

fn commutes<F: Field>(f: &F, k: &SimplicialComplex, data: &KoszulComplexData) -> bool {
    let unit = [f.one()];
    let basis_vec = |n: usize, a: usize| {
        let mut e = vec![f.zero(); n];
        e[a] = f.one();
        e
    };
    for pa in &data.parts {
        for pb in &data.parts {
            if !pa.t.is_disjoint(pb.t) {
                continue;
            }
            for i in 0..pa.basis.len() {
                for i2 in 0..pb.basis.len() {
                    for a in 0..pa.dim(i) {
                        let x = basis_vec(pa.dim(i), a);
                        if pb.t.is_empty() {
                            let xu = chain_product(f, k, data, (pa.t, i, &x), (VertexSet::EMPTY, 0, &unit));
                            if xu != x {
                                return false;
                            }
                        }
                        for b in 0..pb.dim(i2) {
                            let y = basis_vec(pb.dim(i2), b);
                            let xy = chain_product(f, k, data, (pa.t, i, &x), (pb.t, i2, &y));
                            let yx = chain_product(f, k, data, (pb.t, i2, &y), (pa.t, i, &x));
                            let yx: Vec<_> = if i * i2 % 2 == 1 { yx.iter().map(|e| f.neg(e)).collect() } else { yx };
                            if xy != yx {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// The Leibniz rule `d(xy) = d(x) y + (-1)^i x d(y)` on all basis pairs.
pub fn leibniz_holds(k: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let data = KoszulComplexData::new(k)?;
    with_field!(field, |f| Ok(leibniz(&f, k, &data)))
}

fn leibniz<F: Field>(f: &F, k: &SimplicialComplex, data: &KoszulComplexData) -> bool {
    let d = |t: VertexSet, i: usize, x: &[F::Elem]| -> Vec<F::Elem> {
        if i == 0 {
            return Vec::new();
        }
        let m = data.part(t).matrix(f, i);
        linalg::apply(f, &m, x)
    };
    let basis_vec = |n: usize, a: usize| {
        let mut e = vec![f.zero(); n];
        e[a] = f.one();
        e
    };
    for pa in data.parts.iter().filter(|p| !p.t.is_empty()) {
        for pb in data.parts.iter().filter(|p| !p.t.is_empty() && p.t.is_disjoint(pa.t)) {
            let u = pa.t.union(pb.t);
            for i in 0..pa.basis.len() {
                for i2 in 0..pb.basis.len() {
                    if i + i2 == 0 {
                        continue;
                    }
                    for a in 0..pa.dim(i) {
                        for b in 0..pb.dim(i2) {
                            let x = basis_vec(pa.dim(i), a);
                            let y = basis_vec(pb.dim(i2), b);
                            let lhs = d(u, i + i2, &chain_product(f, k, data, (pa.t, i, &x), (pb.t, i2, &y)));
                            let mut rhs = vec![f.zero(); data.part(u).dim(i + i2 - 1)];
                            if i > 0 {
                                let t1 = chain_product(f, k, data, (pa.t, i - 1, &d(pa.t, i, &x)), (pb.t, i2, &y));
                                rhs = rhs.iter().zip(&t1).map(|(r, s)| f.add(r, s)).collect();
                            }
                            if i2 > 0 {
                                let t2 = chain_product(f, k, data, (pa.t, i, &x), (pb.t, i2 - 1, &d(pb.t, i2, &y)));
                                rhs = rhs
                                    .iter()
                                    .zip(&t2)
                                    .map(|(r, s)| if i % 2 == 1 { f.sub(r, s) } else { f.add(r, s) })
                                    .collect();
                            }
                            if lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}
