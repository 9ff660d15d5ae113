//! Triangulations `M(p)` of the 2-dimensional mod-`p` Moore space.
//!
//! `M(2)` is a fixed 7-vertex projective plane. For `p > 2` the complex is
//! built from a `3p`-gon wrapping `p` times around the triangle
//! `v_1 v_2 v_3`, two `p`-gons `w_1 ... w_p`, `u_1 ... u_p` and a fan
//! triangulation of the `w`-gon. Integer labels: `v_i ↦ i`, `w_i ↦ 3 + i`,
//! `u_i ↦ 3 + p + i`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::chordal::{self, EliminationOrdering};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{self, ChainComplexData, IntegralHomology};
use crate::vertex_set::VertexSet;

/// Facets of `M(2)`, read off the 7-vertex projective plane picture
/// (inner triangle 1,2,3 around the centre 7; outer hexagon 4,5,6,4,5,6).
pub const M2_FACETS: [[usize; 3]; 12] = [
    [1, 2, 7],
    [2, 3, 7],
    [1, 3, 7],
    [1, 2, 5],
    [2, 3, 4],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [2, 5, 6],
    [2, 4, 6],
    [3, 4, 5],
    [3, 5, 6],
];

/// Vertex labelling of `M(p)` for `p > 2`. Indices of `w` and `u` are taken mod `p`
/// with representatives `1..=p`.
#[derive(Clone, Copy, Debug)]
pub struct MooreLabels {
    pub p: usize,
}

impl MooreLabels {
    pub fn new(p: usize) -> Self {
        MooreLabels { p }
    }

    pub fn vertex_count(&self) -> usize {
        if self.p == 2 {
            7
        } else {
            3 + 2 * self.p
        }
    }

    fn cyc(&self, i: usize) -> usize {
        (i + self.p - 1) % self.p + 1
    }

    pub fn v(&self, i: usize) -> usize {
        (i + 2) % 3 + 1
    }

    pub fn w(&self, i: usize) -> usize {
        3 + self.cyc(i)
    }

    pub fn u(&self, i: usize) -> usize {
        3 + self.p + self.cyc(i)
    }

    /// Human-readable name of an integer label.
    pub fn name(&self, label: usize) -> String {
        if self.p == 2 {
            return label.to_string();
        }
        match label {
            1..=3 => format!("v{label}"),
            l if l <= 3 + self.p => format!("w{}", l - 3),
            l => format!("u{}", l - 3 - self.p),
        }
    }

    /// `u_1 < ... < u_p < w_1 < ... < w_p < v_1 < v_2 < v_3`.
    pub fn stated_elimination_ordering(&self) -> EliminationOrdering {
        let p = self.p;
        let order = (1..=p).map(|i| self.u(i)).chain((1..=p).map(|i| self.w(i))).chain((1..=3).map(|i| self.v(i)));
        EliminationOrdering(order.collect())
    }

    /// The displayed neighbourhoods. `v_2` is omitted: the display puts every
    /// `u_i` next to it, but no facet of the construction contains `{v_2, u_i}`.
    pub fn displayed_neighborhoods(&self) -> Vec<(usize, BTreeSet<usize>)> {
        let p = self.p;
        let mut out = Vec::new();
        for i in [1, 3] {
            let mut n: BTreeSet<usize> = [self.v(i + 1), self.v(i + 2)].into();
            n.extend((1..=p).map(|j| self.w(j)));
            n.extend((1..=p).map(|j| self.u(j)));
            out.push((self.v(i), n));
        }
        for i in 1..=p {
            let mut n: BTreeSet<usize> = [
                self.v(1),
                self.v(2),
                self.v(3),
                self.w(i + p - 1),
                self.w(i + 1),
                self.u(i + p - 1),
                self.u(i),
            ]
            .into();
            let extra: Vec<usize> = if i == 1 || i == p - 1 {
                Vec::new()
            } else if i == p {
                (2..=p.saturating_sub(2)).map(|j| self.w(j)).collect()
            } else {
                vec![self.w(p)]
            };
            n.extend(extra);
            out.push((self.w(i), n));
        }
        for i in 1..=p {
            out.push((self.u(i), [self.v(1), self.v(3), self.w(i), self.w(i + 1)].into()));
        }
        out
    }
}

/// The facet lists of `M(p)`, `p ≥ 2`.
pub fn moore_facets(p: usize) -> Result<Vec<[usize; 3]>> {
    if p < 2 {
        return Err(Error::MooreParameter(p));
    }
    if p == 2 {
        return Ok(M2_FACETS.to_vec());
    }
    let l = MooreLabels::new(p);
    let mut facets = Vec::with_capacity(7 * p - 2);
    for i in 1..=p {
        facets.push([l.v(1), l.v(2), l.w(i)]);
        facets.push([l.v(2), l.v(3), l.w(i)]);
    }
    for i in 1..=p {
        facets.push([l.v(3), l.v(1), l.u(i)]);
        facets.push([l.v(3), l.u(i), l.w(i)]);
        facets.push([l.v(1), l.u(i), l.w(i + 1)]);
        facets.push([l.u(i), l.w(i), l.w(i + 1)]);
    }
    for i in 1..=p - 2 {
        facets.push([l.w(i), l.w(i + 1), l.w(p)]);
    }
    Ok(facets)
}

pub fn moore_complex(p: usize) -> Result<SimplicialComplex> {
    let facets = moore_facets(p)?;
    SimplicialComplex::new(MooreLabels::new(p).vertex_count(), facets)
}

/// Outcome of checking a complex against the properties `M(p)` must have.
#[derive(Clone, Debug, Serialize)]
pub struct MooreReport {
    pub p: usize,
    pub matches_generator: bool,
    pub homology: IntegralHomology,
    pub homology_ok: bool,
    pub chordal: bool,
    pub elimination_ordering: Option<EliminationOrdering>,
    /// The `u < w < v` ordering, checked for `p > 2`.
    pub stated_ordering_ok: Option<bool>,
    /// Label `"homological proxy for hodim ≤ 1"`.
    pub hodim_check: &'static str,
    pub proper_subcomplexes_checked: usize,
    pub proxy_failures: Vec<VertexSet>,
    pub neighborhoods_ok: bool,
    pub notes: Vec<String>,
    pub diffs: Vec<String>,
}

impl MooreReport {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

pub const HODIM_PROXY_LABEL: &str = "homological proxy for hodim ≤ 1";

/// Every proper non-empty full subcomplex failing the hodim proxy.
pub fn proper_subcomplex_proxy_failures(k: &SimplicialComplex) -> (usize, Vec<VertexSet>) {
    let ground = k.ground();
    let subsets: Vec<VertexSet> = ground.subsets().filter(|s| !s.is_empty() && *s != ground).collect();
    let mut failures: Vec<VertexSet> = subsets
        .par_iter()
        .filter(|&&s| !homology::proxy_hodim_le_1(&ChainComplexData::restricted(k, s)))
        .copied()
        .collect();
    failures.sort();
    (subsets.len(), failures)
}

pub fn verify_moore(k: &SimplicialComplex, p: usize) -> Result<MooreReport> {
    let reference = moore_complex(p)?;
    let labels = MooreLabels::new(p);
    let mut diffs = Vec::new();
    let mut notes = Vec::new();

    let matches_generator = *k == reference;
    if !matches_generator {
        diffs.push(format!("complex differs from the generated M({p})"));
    }
    if k.dim() > 2 {
        return Err(Error::DimensionTooLarge(k.dim()));
    }

    let hom = homology::integral_homology(k);
    let homology_ok = hom.is_mod_p_moore(p as u64);
    if !homology_ok {
        diffs.push(format!("integral homology is not that of the mod-{p} Moore space: {hom:?}"));
    }

    let g = k.one_skeleton();
    let (chordal, peo) = chordal::is_chordal(&g);
    if !chordal {
        diffs.push("1-skeleton is not chordal".into());
    }
    let stated_ordering_ok = (p > 2).then(|| {
        let order = labels.stated_elimination_ordering();
        chordal::verify_peo(&g, &order).unwrap_or(false)
    });
    if stated_ordering_ok == Some(false) {
        diffs.push("u < w < v ordering is not a perfect elimination ordering".into());
    }

    let (checked, proxy_failures) = proper_subcomplex_proxy_failures(k);
    for s in &proxy_failures {
        diffs.push(format!("proper full subcomplex on {s} fails the {HODIM_PROXY_LABEL}"));
    }

    let mut neighborhoods_ok = true;
    if p == 2 {
        let n7: BTreeSet<usize> = g.neighborhood(7).cloned().unwrap_or_default();
        if n7 != BTreeSet::from([1, 2, 3]) {
            neighborhoods_ok = false;
            diffs.push(format!("N(7) = {n7:?}, expected {{1, 2, 3}}"));
        }
        if g.has_edge(6, 7) {
            neighborhoods_ok = false;
            diffs.push("edge {6,7} present".into());
        }
    } else {
        for (v, want) in labels.displayed_neighborhoods() {
            let got = g.neighborhood(v).cloned().unwrap_or_default();
            if got != want {
                neighborhoods_ok = false;
                let fmt = |s: &BTreeSet<usize>| s.iter().map(|&x| labels.name(x)).collect::<Vec<_>>().join(",");
                diffs.push(format!("N({}) = {{{}}}, displayed {{{}}}", labels.name(v), fmt(&got), fmt(&want)));
            }
        }
        notes.push("N(v2) is derived from the facets; the display's u-entries for v2 are not checked".into());
    }

    Ok(MooreReport {
        p,
        matches_generator,
        homology: hom,
        homology_ok,
        chordal,
        elimination_ordering: peo,
        stated_ordering_ok,
        hodim_check: HODIM_PROXY_LABEL,
        proper_subcomplexes_checked: checked,
        proxy_failures,
        neighborhoods_ok,
        notes,
        diffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_and_vertex_counts() {
        let m2 = moore_complex(2).unwrap();
        assert_eq!(m2.m(), 7);
        assert_eq!(m2.f_vector(), vec![1, 7, 18, 12]);
        assert_eq!(m2.euler_characteristic(), 1);
        for p in 3..=6 {
            let k = moore_complex(p).unwrap();
            assert_eq!(k.m(), 3 + 2 * p);
            assert_eq!(k.facets().len(), 7 * p - 2, "p = {p}");
            assert_eq!(k.euler_characteristic(), 1, "p = {p}");
        }
        assert_eq!(moore_complex(4).unwrap().vertices().len(), 11);
        assert_eq!(moore_complex(1), Err(Error::MooreParameter(1)));
    }

    #[test]
    fn only_m2_is_a_surface() {
        assert!(moore_complex(2).unwrap().is_surface_triangulation());
        let m3 = moore_complex(3).unwrap();
        assert!(!m3.is_surface_triangulation());
        let l = MooreLabels::new(3);
        let e = VertexSet::from_vertices([l.v(1), l.v(2)]);
        assert_eq!(m3.facets().iter().filter(|f| e.is_subset(**f)).count(), 3);
    }

    #[test]
    fn never_one_neighborly() {
        for p in 2..=5 {
            let k = moore_complex(p).unwrap();
            assert!(!k.is_k_neighborly(1));
            let g = k.one_skeleton();
            if p == 2 {
                assert!(!g.has_edge(6, 7));
            } else {
                let l = MooreLabels::new(p);
                assert!(!g.has_edge(l.u(1), l.v(2)));
                if p >= 4 {
                    assert!(!g.has_edge(l.w(1), l.w(p - 1)));
                    assert!(!g.has_edge(l.u(1), l.u(3)));
                }
            }
        }
    }

    #[test]
    fn generator_is_deterministic() {
        assert_eq!(moore_facets(5).unwrap(), moore_facets(5).unwrap());
        assert_eq!(moore_complex(4).unwrap(), moore_complex(4).unwrap());
    }

    #[test]
    fn verify_small_cases() {
        for p in 2..=4 {
            let r = verify_moore(&moore_complex(p).unwrap(), p).unwrap();
            assert!(r.passed(), "M({p}): {:?}", r.diffs);
        }
    }

    #[test]
    fn verify_detects_a_wrong_complex() {
        let r = verify_moore(&moore_complex(3).unwrap(), 2).unwrap();
        assert!(!r.passed());
        assert!(!r.matches_generator);
    }

    #[test]
    fn displayed_w_neighborhoods_at_p4() {
        let l = MooreLabels::new(4);
        let shown: Vec<_> = l.displayed_neighborhoods();
        let w4 = shown.iter().find(|(v, _)| *v == l.w(4)).unwrap();
        assert!(w4.1.contains(&l.w(2)));
        let w2 = shown.iter().find(|(v, _)| *v == l.w(2)).unwrap();
        assert!(w2.1.contains(&l.w(4)));
        assert_eq!(l.name(l.u(2)), "u2");
        assert_eq!(l.name(l.w(4)), "w4");
    }
}
