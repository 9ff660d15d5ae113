//! Bigraded Tor of the Stanley-Reisner ring from full-subcomplex cohomology.
//!
//! `dim Tor_{i,2j}(k[K], k) = Σ_{|I| = j} b̃^{j-i-1}(K_I; k)`, and the class of
//! `H̃^d(K_I)` sits in degree `|I| + d + 1` of `H^*(Z_K; k)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::field::{with_field, FieldSpec};
use crate::homology::{BettiVector, ChainComplexData};
use crate::limits::ScanLimits;
use crate::vertex_set::VertexSet;

/// Dimensions of `Tor_{i,2j}(k[K], k)` with the per-subset contributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    pub field: FieldSpec,
    /// Size of the vertex universe.
    pub n: usize,
    /// `(i, j) ↦ dim`, non-zero entries only.
    pub entries: BTreeMap<(usize, usize), usize>,
    /// `I ↦ b̃^*(K_I)` for the subsets `I` that contribute.
    pub breakdown: BTreeMap<VertexSet, BettiVector>,
}

impl TorTable {
    pub fn from_breakdown(field: FieldSpec, n: usize, breakdown: BTreeMap<VertexSet, BettiVector>) -> Self {
        let mut entries = BTreeMap::new();
        for (s, b) in &breakdown {
            let j = s.len();
            for (d, dim) in b.nonzero() {
                let i = (j as isize - d - 1) as usize;
                *entries.entry((i, j)).or_insert(0) += dim;
            }
        }
        TorTable { field, n, entries, breakdown }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Table total equals the total over the per-subset breakdown.
    pub fn is_consistent(&self) -> bool {
        self.total() == self.breakdown.values().map(BettiVector::total).sum::<usize>()
            && self.entries.keys().all(|&(i, j)| i <= j && j <= self.n)
    }

    /// Same bigraded dimensions (ignores the breakdown).
    pub fn same_dimensions(&self, other: &TorTable) -> bool {
        self.entries == other.entries
    }

    pub fn poincare(&self) -> PoincareSeries {
        let top = self.entries.keys().map(|&(i, j)| 2 * j - i).max().unwrap_or(0);
        let mut dims = vec![0; top + 1];
        for (&(i, j), &d) in &self.entries {
            dims[2 * j - i] += d;
        }
        PoincareSeries { dims }
    }

    /// Aligned text rendering: rows `i`, columns `j`.
    pub fn render_text(&self) -> String {
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let width = self.entries.values().map(|d| d.to_string().len()).max().unwrap_or(1).max(2);
        let mut out = format!("Tor_{{i,2j}} over {}\n{:>4} |", self.field, "i\\j");
        for j in 0..=max_j {
            out += &format!(" {j:>width$}");
        }
        out += "\n";
        out += &"-".repeat(6 + (width + 1) * (max_j + 1));
        out += "\n";
        for i in 0..=max_i {
            out += &format!("{i:>4} |");
            for j in 0..=max_j {
                let d = self.get(i, j);
                if d == 0 {
                    out += &format!(" {:>width$}", ".");
                } else {
                    out += &format!(" {d:>width$}");
                }
            }
            out += "\n";
        }
        out
    }
}

impl Serialize for TorTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            dim: usize,
        }
        #[derive(Serialize)]
        struct Part<'a> {
            subset: VertexSet,
            reduced_betti: &'a [usize],
        }
        let entries: Vec<Entry> = self.entries.iter().map(|(&(i, j), &dim)| Entry { i, j, dim }).collect();
        let parts: Vec<Part> =
            self.breakdown.iter().map(|(s, b)| Part { subset: *s, reduced_betti: b.values() }).collect();
        let mut st = serializer.serialize_struct("TorTable", 4)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("breakdown", &parts)?;
        st.end()
    }
}

/// `dim_k H^ℓ(Z_K; k)` for `ℓ = 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PoincareSeries {
    pub dims: Vec<usize>,
}

impl PoincareSeries {
    pub fn get(&self, l: usize) -> usize {
        self.dims.get(l).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Coefficients padded with zeros to `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len.max(self.dims.len())).map(|l| self.get(l)).collect()
    }

    /// Product of polynomials.
    pub fn convolve(&self, other: &PoincareSeries) -> PoincareSeries {
        let mut dims = vec![0; self.dims.len() + other.dims.len() - 1];
        for (a, x) in self.dims.iter().enumerate() {
            for (b, y) in other.dims.iter().enumerate() {
                dims[a + b] += x * y;
            }
        }
        PoincareSeries { dims }
    }
}

/// Spreads the low bits of `index` onto the set bits of `ground`.
pub(crate) fn deposit(mut index: u64, ground: VertexSet) -> VertexSet {
    let mut out = 0u64;
    let mut g = ground.bits();
    while g != 0 && index != 0 {
        let low = g & g.wrapping_neg();
        if index & 1 == 1 {
            out |= low;
        }
        index >>= 1;
        g &= g - 1;
    }
    VertexSet::from_bits(out)
}

/// Inverse of [`deposit`] on subsets of `ground`.
pub(crate) fn compress(s: VertexSet, ground: VertexSet) -> usize {
    let mut idx = 0usize;
    for (bit, v) in ground.iter().enumerate() {
        if s.contains(v) {
            idx |= 1 << bit;
        }
    }
    idx
}

/// Reduced Betti numbers of every full subcomplex with non-zero reduced cohomology.
pub fn subset_betti(k: &SimplicialComplex, field: FieldSpec) -> BTreeMap<VertexSet, BettiVector> {
    let ground = k.ground();
    let count = 1u64 << ground.len();
    with_field!(field, |f| {
        (0..count)
            .into_par_iter()
            .map(|idx| deposit(idx, ground))
            .filter_map(|s| {
                let b = ChainComplexData::restricted(k, s).betti(&f);
                (!b.is_zero()).then_some((s, b))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    })
}

pub fn hochster_table(k: &SimplicialComplex, field: FieldSpec) -> Result<TorTable> {
    hochster_table_with(k, field, &ScanLimits::default())
}

pub fn hochster_table_with(k: &SimplicialComplex, field: FieldSpec, limits: &ScanLimits) -> Result<TorTable> {
    let n = k.ground().len();
    limits.check("hochster table", n, limits.hochster_max_m)?;
    Ok(TorTable::from_breakdown(field, n, subset_betti(k, field)))
}

pub fn zk_poincare(k: &SimplicialComplex, field: FieldSpec) -> Result<PoincareSeries> {
    Ok(hochster_table(k, field)?.poincare())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn deposit_matches_subset_order() {
        let g = VertexSet::from_vertices([2, 5, 6]);
        let via: Vec<_> = (0..8).map(|i| deposit(i, g)).collect();
        let direct: Vec<_> = g.subsets().collect();
        assert_eq!(via, direct);
    }

    #[test]
    fn simplex_has_trivial_tor() {
        let t = hochster_table(&SimplicialComplex::simplex(3).unwrap(), Q).unwrap();
        assert_eq!(t.entries, BTreeMap::from([((0, 0), 1)]));
        assert_eq!(t.poincare().dims, vec![1]);
    }

    #[test]
    fn two_points() {
        let t = hochster_table(&catalog::points(2), Q).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.total(), 2);
        assert_eq!(t.poincare().padded(4), vec![1, 0, 0, 1]);
    }

    #[test]
    fn four_cycle() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let t = hochster_table(&c4, Q).unwrap();
        assert_eq!(t.breakdown.len(), 4);
        assert_eq!(t.breakdown[&VertexSet::from_vertices([1, 3])].get(0), 1);
        assert_eq!(t.breakdown[&VertexSet::full(4)].get(1), 1);
        assert_eq!(zk_poincare(&c4, Q).unwrap().dims, vec![1, 0, 0, 2, 0, 0, 1]);
        assert!(t.is_consistent());
    }

    #[test]
    fn m2_tables_differ_only_where_torsion_lives() {
        let m2 = catalog::moore_rp2();
        let q = hochster_table(&m2, Q).unwrap();
        let f2 = hochster_table(&m2, FieldSpec::Prime(2)).unwrap();
        let full = VertexSet::full(7);
        assert!(!q.breakdown.contains_key(&full));
        assert_eq!(f2.breakdown[&full].values(), &[0, 0, 1, 1]);
        for (s, b) in &q.breakdown {
            assert_eq!(f2.breakdown.get(s), Some(b), "subset {s}");
        }
        assert_eq!(f2.breakdown.len(), q.breakdown.len() + 1);
        // H̃^1 and H̃^2 of the whole complex: Tor_{5,14} and Tor_{4,14}
        assert_eq!(f2.get(5, 7) - q.get(5, 7), 1);
        assert_eq!(f2.get(4, 7) - q.get(4, 7), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let k = catalog::points(10);
        let tight = ScanLimits { hochster_max_m: 8, ..ScanLimits::default() };
        assert!(hochster_table_with(&k, Q, &tight).is_err());
        let forced = ScanLimits { force: true, ..tight };
        assert!(hochster_table_with(&k, Q, &forced).is_ok());
    }

    #[test]
    fn text_rendering_mentions_every_entry() {
        let t = hochster_table(&SimplicialComplex::cycle(4).unwrap(), Q).unwrap();
        let s = t.render_text();
        assert!(s.contains("over q"));
        assert_eq!(s.lines().count(), 3 + 3);
    }
}
