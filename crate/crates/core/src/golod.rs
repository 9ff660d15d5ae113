//! Golod verdicts: a product scan followed by the known sufficient criteria.

use std::fmt;

use serde::Serialize;

use crate::chordal::is_chordal;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::reduced_betti;
use crate::moore::{proper_subcomplex_proxy_failures, HODIM_PROXY_LABEL};
use crate::products::{scan_products, ProductWitness, ScanOptions};

/// Why a complex is certified Golod.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `K` is `⌈dim K / 2⌉`-neighborly.
    Neighborly,
    /// A 1-neighborly surface triangulation.
    SurfaceTheorem,
    /// Over `Q`: dimension 2, chordal 1-skeleton, every proper full
    /// subcomplex of homological dimension ≤ 1 and `b̃_*(K; Q) = 0`.
    RationalCriterion,
    /// Dimension ≤ 1 with chordal 1-skeleton.
    OneDimChordal,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Neighborly => "neighborly",
            Reason::SurfaceTheorem => "surface-theorem",
            Reason::RationalCriterion => "rational-criterion",
            Reason::OneDimChordal => "one-dim-chordal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum GolodStatus {
    GolodCertified(Reason),
    NotGolod(Box<ProductWitness>),
    Inconclusive(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodVerdict {
    pub field: FieldSpec,
    pub status: GolodStatus,
    /// The cascade steps that were evaluated, in order.
    pub path: Vec<String>,
    pub notes: Vec<String>,
}

impl GolodVerdict {
    pub fn is_golod(&self) -> bool {
        matches!(self.status, GolodStatus::GolodCertified(_))
    }

    pub fn is_not_golod(&self) -> bool {
        matches!(self.status, GolodStatus::NotGolod(_))
    }

    pub fn reason(&self) -> Option<Reason> {
        match self.status {
            GolodStatus::GolodCertified(r) => Some(r),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&ProductWitness> {
        match &self.status {
            GolodStatus::NotGolod(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match &self.status {
            GolodStatus::GolodCertified(r) => format!("golod ({r})"),
            GolodStatus::NotGolod(w) => format!("not golod (witness I={} J={} p={} q={})", w.i, w.j, w.p, w.q),
            GolodStatus::Inconclusive(_) => "inconclusive".into(),
        }
    }
}

pub fn golod_verdict(k: &SimplicialComplex, field: FieldSpec) -> GolodVerdict {
    golod_verdict_with(k, field, &ScanOptions::default())
}

pub fn golod_verdict_with(k: &SimplicialComplex, field: FieldSpec, opts: &ScanOptions) -> GolodVerdict {
    let mut path = Vec::new();
    let mut notes = Vec::new();
    let done = |status, path, notes| GolodVerdict { field, status, path, notes };

    let opts = ScanOptions { all_pairs: false, full_union_only: false, target_degree: None, ..*opts };
    let mut scanned = false;
    match scan_products(k, field, &opts) {
        Ok(scan) => {
            scanned = true;
            if let Some(w) = scan.witnesses.into_iter().next() {
                path.push("product-scan: non-trivial product".into());
                return done(GolodStatus::NotGolod(Box::new(w)), path, notes);
            }
            path.push("product-scan: all products trivial".into());
        }
        Err(e) => {
            path.push("product-scan: skipped".into());
            notes.push(format!("product scan not run: {e}"));
        }
    }

    if !k.ghost_vertices().is_empty() {
        notes.push(format!("ghost vertices {} present; the criteria below assume none", k.ghost_vertices()));
        notes.push("higher Massey products were not examined".into());
        path.push("criteria: skipped".into());
        return done(GolodStatus::Inconclusive(notes.clone()), path, notes);
    }

    let dim = k.dim();
    let chordal = is_chordal(&k.one_skeleton()).0;
    if dim <= 1 {
        path.push(format!("one-dim-chordal: dim {dim}, 1-skeleton chordal = {chordal}"));
        if chordal {
            return done(GolodStatus::GolodCertified(Reason::OneDimChordal), path, notes);
        }
    }

    let nb = ((dim.max(0) + 1) / 2) as usize;
    let neighborly = k.is_k_neighborly(nb);
    path.push(format!("neighborly: {nb}-neighborly = {neighborly}"));
    if neighborly {
        return done(GolodStatus::GolodCertified(Reason::Neighborly), path, notes);
    }

    if k.is_surface_triangulation() {
        let one = k.is_k_neighborly(1);
        path.push(format!("surface-theorem: surface, 1-neighborly = {one}"));
        if one {
            return done(GolodStatus::GolodCertified(Reason::SurfaceTheorem), path, notes);
        }
        if scanned {
            notes.push(format!("surface is not 1-neighborly, so it is not Golod over every ring; no product witness over {field}"));
        } else {
            notes.push("surface is not 1-neighborly, so it is not Golod over every ring; no witness was computed".into());
        }
    }

    if field == FieldSpec::Rationals && dim == 2 {
        let (checked, failures) = proper_subcomplex_proxy_failures(k);
        let acyclic = reduced_betti(k, field).is_zero();
        path.push(format!(
            "rational-criterion: chordal = {chordal}, {HODIM_PROXY_LABEL} on {checked} proper full subcomplexes: {} failures, rationally acyclic = {acyclic}",
            failures.len()
        ));
        if chordal && failures.is_empty() && acyclic {
            return done(GolodStatus::GolodCertified(Reason::RationalCriterion), path, notes);
        }
    }

    if scanned {
        notes.push("all products vanish, but that alone does not imply Golod".into());
    }
    notes.push("higher Massey products were not examined".into());
    done(GolodStatus::Inconclusive(notes.clone()), path, notes)
}

/// Comparison of 1-neighborliness with the Golod verdict over `Z/2` on a
/// surface triangulation. The two must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub vertices: usize,
    pub one_neighborly: bool,
    pub verdict: GolodVerdict,
    pub agreement: bool,
    /// A product `H̃^p(K_I) ⊗ H̃^q(K_J) → H̃^2(K)` with `I ∪ J` all vertices.
    pub top_witness: Option<ProductWitness>,
    pub top_class_hit: bool,
    pub notes: Vec<String>,
}

pub fn surface_golod_equivalence_report(k: &SimplicialComplex) -> Result<SurfaceReport> {
    if !k.is_surface_triangulation() {
        return Err(Error::NotASurface);
    }
    let f2 = FieldSpec::Prime(2);
    let one_neighborly = k.is_k_neighborly(1);
    let verdict = golod_verdict(k, f2);
    let agreement = if one_neighborly { verdict.is_golod() } else { verdict.is_not_golod() };
    let mut notes = Vec::new();
    if !agreement {
        notes.push(format!("disagreement: 1-neighborly = {one_neighborly}, verdict = {}", verdict.label()));
    }
    let opts = ScanOptions { full_union_only: true, target_degree: Some(k.dim()), ..ScanOptions::default() };
    let top_witness = scan_products(k, f2, &opts)?.witnesses.into_iter().next();
    let top_dim = reduced_betti(k, f2).get(k.dim());
    let top_class_hit = top_witness.as_ref().is_some_and(|w| w.pairing_rank == 1 && top_dim == 1);
    if !one_neighborly && !top_class_hit {
        notes.push("no product reaching the top class".into());
    }
    Ok(SurfaceReport { vertices: k.vertices().len(), one_neighborly, verdict, agreement, top_witness, top_class_hit, notes })
}
