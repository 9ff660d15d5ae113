//! Reduced simplicial (co)homology over fields and over the integers.
//!
//! Chain complexes are augmented: the empty face spans degree `-1`, so the
//! complex `{∅}` has `H̃_{-1} = k` and every other complex has `H̃_{-1} = 0`.
//! Faces are oriented by ascending labels and the boundary of
//! `[v_0, ..., v_d]` is `Σ (-1)^i [v_0, ..., v̂_i, ..., v_d]`.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{with_field, Field, FieldSpec};
use crate::linalg::{self, Dense, Reducer};
use crate::snf;
use crate::vertex_set::VertexSet;

/// Augmented simplicial chain complex with sparse `±1` boundary matrices.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    /// `faces[d + 1]` lists the `d`-faces in colex order.
    faces: Vec<Vec<VertexSet>>,
    /// `boundary[d + 1][j]` is `∂` of the `j`-th `d`-face as `(index, sign)`
    /// pairs into the `(d-1)`-faces. Empty for `d = -1`.
    boundary: Vec<Vec<Vec<(usize, i8)>>>,
}

impl ChainComplexData {
    pub fn new(k: &SimplicialComplex) -> Self {
        Self::from_faces(k.faces_by_dim().to_vec())
    }

    /// Chain complex of the full subcomplex `K_I`, built from `K`'s face lists.
    pub fn restricted(k: &SimplicialComplex, subset: VertexSet) -> Self {
        let mut faces: Vec<Vec<VertexSet>> = k
            .faces_by_dim()
            .iter()
            .map(|layer| layer.iter().copied().filter(|f| f.is_subset(subset)).collect())
            .collect();
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        Self::from_faces(faces)
    }

    /// `faces[d + 1]` must be the sorted `d`-faces of a simplicial complex.
    pub fn from_faces(faces: Vec<Vec<VertexSet>>) -> Self {
        let mut boundary = vec![Vec::new()];
        for d in 1..faces.len() {
            let lower = &faces[d - 1];
            let col = faces[d]
                .iter()
                .map(|sigma| {
                    sigma
                        .iter()
                        .enumerate()
                        .map(|(i, v)| {
                            let idx = lower.binary_search(&sigma.without(v)).expect("face lists are downward closed");
                            (idx, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            boundary.push(col);
        }
        let cc = ChainComplexData { faces, boundary };
        debug_assert!(cc.boundary_squares_to_zero());
        cc
    }

    /// Top dimension present (`-1` for `{∅}`).
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn faces(&self, d: isize) -> &[VertexSet] {
        if d < -1 {
            return &[];
        }
        self.faces.get((d + 1) as usize).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: isize) -> usize {
        self.faces(d).len()
    }

    pub fn index_of(&self, face: VertexSet) -> Option<usize> {
        self.faces(face.dim()).binary_search(&face).ok()
    }

    /// `∂_d` of the `j`-th `d`-face.
    pub fn boundary_of(&self, d: isize, j: usize) -> &[(usize, i8)] {
        &self.boundary[(d + 1) as usize][j]
    }

    /// Dense integer matrix of `∂_d : C_d → C_{d-1}` (rows index `(d-1)`-faces).
    pub fn boundary_matrix(&self, d: isize) -> Vec<Vec<i64>> {
        if d < 0 || d > self.dim() {
            return Vec::new();
        }
        let mut m = vec![vec![0i64; self.count(d)]; self.count(d - 1)];
        for (j, col) in self.boundary[(d + 1) as usize].iter().enumerate() {
            for &(i, s) in col {
                m[i][j] = s as i64;
            }
        }
        m
    }

    /// Dense `∂_d` over a field.
    pub fn boundary_dense<F: Field>(&self, f: &F, d: isize) -> Dense<F::Elem> {
        let mut m = vec![vec![f.zero(); self.count(d)]; self.count(d - 1)];
        if d >= 0 && d <= self.dim() {
            for (j, col) in self.boundary[(d + 1) as usize].iter().enumerate() {
                for &(i, s) in col {
                    m[i][j] = f.from_i64(s as i64);
                }
            }
        }
        m
    }

    /// Dense coboundary `δ^d : C^d → C^{d+1}` (rows index `(d+1)`-faces).
    pub fn coboundary_dense<F: Field>(&self, f: &F, d: isize) -> Dense<F::Elem> {
        let mut m = vec![vec![f.zero(); self.count(d)]; self.count(d + 1)];
        if d + 1 >= 0 && d < self.dim() {
            for (i, col) in self.boundary[(d + 2) as usize].iter().enumerate() {
                for &(j, s) in col {
                    m[i][j] = f.from_i64(s as i64);
                }
            }
        }
        m
    }

    /// `δ φ` for a `d`-cochain `φ`.
    pub fn coboundary<F: Field>(&self, f: &F, d: isize, cochain: &[F::Elem]) -> Vec<F::Elem> {
        if d + 1 > self.dim() {
            return Vec::new();
        }
        self.boundary[(d + 2) as usize]
            .iter()
            .map(|col| {
                col.iter().fold(f.zero(), |acc, &(j, s)| {
                    let x = &cochain[j];
                    if s > 0 {
                        f.add(&acc, x)
                    } else {
                        f.sub(&acc, x)
                    }
                })
            })
            .collect()
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        (1..=self.dim()).all(|d| {
            self.boundary[(d + 1) as usize].iter().all(|col| {
                let mut acc = vec![0i64; self.count(d - 2)];
                for &(i, s) in col {
                    for &(k, t) in self.boundary_of(d - 1, i) {
                        acc[k] += (s * t) as i64;
                    }
                }
                acc.iter().all(|&x| x == 0)
            })
        })
    }

    pub fn rank_boundary<F: Field>(&self, f: &F, d: isize) -> usize {
        if d < 0 || d > self.dim() {
            return 0;
        }
        // rank(∂) = rank(∂ᵀ); the transpose has the short rows.
        linalg::rank(f, self.coboundary_dense(f, d - 1))
    }

    pub fn betti<F: Field>(&self, f: &F) -> BettiVector {
        // ranks[d + 1] = rank ∂_d, with ∂_{-1} = 0
        let ranks: Vec<usize> = (-1..=self.dim() + 1).map(|d| self.rank_boundary(f, d)).collect();
        let values = (-1..=self.dim())
            .map(|d| self.count(d) - ranks[(d + 1) as usize] - ranks[(d + 2) as usize])
            .collect();
        BettiVector::from_values(values)
    }
}

/// Reduced Betti numbers `b̃_d` for `d = -1, 0, 1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    pub fn from_values(values: Vec<usize>) -> Self {
        let mut b = BettiVector { values };
        b.trim();
        b
    }

    fn trim(&mut self) {
        while self.values.len() > 1 && self.values.last() == Some(&0) {
            self.values.pop();
        }
    }

    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.values.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries starting at dimension `-1`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    /// Highest `d` with `b̃_d > 0`.
    pub fn top(&self) -> Option<isize> {
        self.values.iter().rposition(|&b| b > 0).map(|i| i as isize - 1)
    }

    /// `(d, b̃_d)` for the non-zero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values.iter().enumerate().filter(|(_, &b)| b > 0).map(|(i, &b)| (i as isize - 1, b))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `b̃_*(K; k)` by Gaussian elimination.
pub fn reduced_betti(k: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let cc = ChainComplexData::new(k);
    with_field!(field, |f| {
        let mut b = cc.betti(&f);
        b.trim();
        b
    })
}

/// One reduced integral homology group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: isize,
    pub free_rank: usize,
    /// Torsion coefficients `> 1`, each dividing the next.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of torsion coefficients divisible by `p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|t| (*t % &p) == BigInt::from(0)).count()
    }
}

fn serialize_torsion<S: Serializer>(t: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|x| match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(x.to_string()),
    }))
}

/// `H̃_d(K; Z)` for `d = -1, ..., dim K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralHomology {
    pub groups: Vec<HomologyGroup>,
}

impl IntegralHomology {
    pub fn group(&self, d: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == d)
    }

    pub fn free_rank(&self, d: isize) -> usize {
        self.group(d).map_or(0, |g| g.free_rank)
    }

    pub fn torsion(&self, d: isize) -> Vec<BigInt> {
        self.group(d).map(|g| g.torsion.clone()).unwrap_or_default()
    }

    /// Whether this is the reduced homology of a mod-`p` Moore space in
    /// degree 1: `H̃_1 = Z/p` and every other group vanishes.
    pub fn is_mod_p_moore(&self, p: u64) -> bool {
        self.groups.iter().all(|g| {
            if g.dim == 1 {
                g.free_rank == 0 && g.torsion == vec![BigInt::from(p)]
            } else {
                g.is_trivial()
            }
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_trivial)
    }
}

/// Reduced integral homology via Smith normal form of every boundary matrix.
pub fn integral_homology(k: &SimplicialComplex) -> IntegralHomology {
    integral_homology_of(&ChainComplexData::new(k))
}

pub fn integral_homology_of(cc: &ChainComplexData) -> IntegralHomology {
    let top = cc.dim();
    let factors: Vec<Vec<BigInt>> = (0..=top + 1).map(|d| snf::invariant_factors(&cc.boundary_matrix(d))).collect();
    let groups = (-1..=top)
        .map(|d| {
            let rank_out = if d >= 0 { factors[d as usize].len() } else { 0 };
            let incoming = &factors[(d + 1) as usize];
            HomologyGroup {
                dim: d,
                free_rank: cc.count(d) - rank_out - incoming.len(),
                torsion: incoming.iter().filter(|x| !x.is_one()).cloned().collect(),
            }
        })
        .collect();
    IntegralHomology { groups }
}

/// Homological proxy for "homotopy dimension ≤ 1" on complexes of dimension
/// at most 2: `H̃_2(K; Z) = 0` and `H̃_1(K; Z)` torsion-free.
pub fn homological_dim_le_1(k: &SimplicialComplex) -> Result<bool> {
    if k.dim() > 2 {
        return Err(Error::DimensionTooLarge(k.dim()));
    }
    Ok(proxy_hodim_le_1(&ChainComplexData::new(k)))
}

pub(crate) fn proxy_hodim_le_1(cc: &ChainComplexData) -> bool {
    if cc.dim() < 2 {
        return true;
    }
    let factors = snf::invariant_factors(&cc.boundary_matrix(2));
    factors.len() == cc.count(2) && factors.iter().all(|x| x.is_one())
}

/// Representatives of a basis of `H̃^d` and the means to read off the class of
/// any `d`-cocycle in that basis.
#[derive(Clone, Debug)]
pub struct CohomologyBasis<F: Field> {
    pub degree: isize,
    /// Cocycle representatives, as coefficient vectors over the `d`-faces.
    pub reps: Vec<Vec<F::Elem>>,
    reducer: Reducer<F>,
    cocycle_count: usize,
    rep_slots: Vec<usize>,
}

impl<F: Field> CohomologyBasis<F> {
    pub fn compute(f: &F, cc: &ChainComplexData, d: isize) -> Self {
        let n = cc.count(d);
        let cocycles = linalg::kernel_basis(f, cc.coboundary_dense(f, d), n);
        let mut reducer = Reducer::new(f.clone(), n, cocycles.len());
        let zero_tag = vec![f.zero(); cocycles.len()];
        if d >= 0 {
            for j in 0..cc.count(d - 1) {
                let mut e = vec![f.zero(); cc.count(d - 1)];
                e[j] = f.one();
                reducer.insert(&cc.coboundary(f, d - 1, &e), &zero_tag);
            }
        }
        let mut reps = Vec::new();
        let mut rep_slots = Vec::new();
        for (i, z) in cocycles.iter().enumerate() {
            let mut tag = zero_tag.clone();
            tag[i] = f.one();
            if reducer.insert(z, &tag) {
                reps.push(z.clone());
                rep_slots.push(i);
            }
        }
        CohomologyBasis { degree: d, reps, reducer, cocycle_count: cocycles.len(), rep_slots }
    }

    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `z` in the representative basis, or `None`
    /// if `z` is not a cocycle.
    pub fn coordinates(&self, z: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let (res, tag) = self.reducer.reduce(z);
        if !linalg::is_zero_vec(self.reducer.field(), &res) {
            return None;
        }
        debug_assert_eq!(tag.len(), self.cocycle_count);
        Some(self.rep_slots.iter().map(|&i| tag[i].clone()).collect())
    }

    /// Whether `z` is a coboundary (assumes it is a cocycle).
    pub fn is_coboundary(&self, z: &[F::Elem]) -> bool {
        self.coordinates(z).is_some_and(|c| linalg::is_zero_vec(self.reducer.field(), &c))
    }
}
