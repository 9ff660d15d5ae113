//! Finite simplicial complexes on a labelled vertex universe.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex stored by its facets.
///
/// `m` is the largest admissible label and `ground` the vertex universe the
/// complex lives on (for complexes built from facets this is `[m]`, for a
/// full subcomplex `K_I` it is `I`). Labels in `ground` that are not faces
/// are ghost vertices.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    m: usize,
    ground: VertexSet,
    facets: Vec<VertexSet>,
    faces: OnceLock<Vec<Vec<VertexSet>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.ground == other.ground && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds the complex generated by `facets` on `[m]`. Faces contained in
    /// other listed faces are absorbed.
    pub fn new<F, V>(m: usize, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = V>,
        V: AsRef<[usize]>,
    {
        if m == 0 {
            return Err(Error::ZeroVertices);
        }
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let mut masks = Vec::new();
        for (index, facet) in facets.into_iter().enumerate() {
            let facet = facet.as_ref();
            if facet.is_empty() {
                return Err(Error::EmptyFacet { index });
            }
            let mut mask = VertexSet::EMPTY;
            for &vertex in facet {
                if vertex == 0 || vertex > m {
                    return Err(Error::VertexOutOfRange { vertex, m });
                }
                if mask.contains(vertex) {
                    return Err(Error::DuplicateVertex { index, vertex });
                }
                mask = mask.with(vertex);
            }
            masks.push(mask);
        }
        Ok(Self::from_masks(m, VertexSet::full(m), masks))
    }

    /// Builds a complex on an arbitrary vertex universe `ground ⊆ [m]`.
    pub fn on_ground(m: usize, ground: VertexSet, facets: &[VertexSet]) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroVertices);
        }
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let universe = VertexSet::full(m);
        if !ground.is_subset(universe) {
            return Err(Error::SubsetOutOfUniverse { subset: ground, universe });
        }
        for (index, f) in facets.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFacet { index });
            }
            if let Some(vertex) = f.difference(ground).min() {
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        Ok(Self::from_masks(m, ground, facets.to_vec()))
    }

    /// The full simplex on `[m]`.
    pub fn simplex(m: usize) -> Result<Self> {
        Self::new(m, [(1..=m).collect::<Vec<_>>()])
    }

    /// The boundary of the simplex on `[m]`, an `(m-2)`-sphere.
    pub fn simplex_boundary(m: usize) -> Result<Self> {
        Self::new(m, (1..=m).map(|skip| (1..=m).filter(|&v| v != skip).collect::<Vec<_>>()))
    }

    /// The `n`-cycle `1-2-...-n-1` as a 1-dimensional complex.
    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).map(|i| vec![i, i % n + 1]))
    }

    pub(crate) fn from_masks(m: usize, ground: VertexSet, mut masks: Vec<VertexSet>) -> Self {
        masks.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<VertexSet> = Vec::with_capacity(masks.len());
        for f in masks {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { m, ground, facets, faces: OnceLock::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Labels `v` with `{v}` a face.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        self.ground.difference(self.vertices())
    }

    /// Dimension; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        face.is_empty() || self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces grouped by dimension: entry `d + 1` lists the `d`-faces in
    /// colex order, and entry 0 is `[∅]`.
    pub fn faces_by_dim(&self) -> &[Vec<VertexSet>] {
        self.faces.get_or_init(|| {
            let mut all = BTreeSet::new();
            for f in &self.facets {
                all.extend(f.subsets());
            }
            all.insert(VertexSet::EMPTY);
            let mut out = vec![Vec::new(); (self.dim() + 2) as usize];
            for f in all {
                out[f.len()].push(f);
            }
            out
        })
    }

    /// The `d`-dimensional faces in colex order; `d = -1` gives `[∅]`.
    pub fn faces(&self, d: isize) -> Vec<VertexSet> {
        if d < -1 {
            return Vec::new();
        }
        self.faces_by_dim().get((d + 1) as usize).cloned().unwrap_or_default()
    }

    /// Number of faces per dimension, starting at dimension `-1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// `Σ (-1)^d f_d` over non-empty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// `K_I`: every face of `K` contained in `I`, on vertex universe `I`.
    pub fn full_subcomplex(&self, subset: VertexSet) -> Result<Self> {
        if !subset.is_subset(self.ground) {
            return Err(Error::SubsetOutOfUniverse { subset, universe: self.ground });
        }
        let masks = self
            .facets
            .iter()
            .map(|f| f.intersection(subset))
            .filter(|f| !f.is_empty())
            .collect();
        Ok(Self::from_masks(self.m, subset, masks))
    }

    /// `lk_K(v)`, on the universe `ground - {v}`.
    pub fn link(&self, v: usize) -> Result<Self> {
        if !self.vertices().contains(v) {
            return Err(Error::NotAVertex(v));
        }
        let masks = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .filter(|f| !f.is_empty())
            .collect();
        Ok(Self::from_masks(self.m, self.ground.without(v), masks))
    }

    /// The simplicial join. The two vertex universes must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let overlap = self.ground.intersection(other.ground);
        if !overlap.is_empty() {
            return Err(Error::OverlappingLabels(overlap));
        }
        let m = self.m.max(other.m);
        let ground = self.ground.union(other.ground);
        let left: Vec<VertexSet> =
            if self.facets.is_empty() { vec![VertexSet::EMPTY] } else { self.facets.clone() };
        let right: Vec<VertexSet> =
            if other.facets.is_empty() { vec![VertexSet::EMPTY] } else { other.facets.clone() };
        let masks = left
            .iter()
            .flat_map(|a| right.iter().map(move |b| a.union(*b)))
            .filter(|f| !f.is_empty())
            .collect();
        Ok(Self::from_masks(m, ground, masks))
    }

    /// Subsets `σ ⊆ ground` with `σ ∉ K` but `σ - v ∈ K` for every `v ∈ σ`,
    /// ordered by size and then colex.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let mut out = BTreeSet::new();
        for layer in self.faces_by_dim() {
            for &tau in layer {
                for v in self.ground.difference(tau).iter() {
                    let sigma = tau.with(v);
                    if !self.contains(sigma) && sigma.iter().all(|w| self.contains(sigma.without(w))) {
                        out.insert((sigma.len(), sigma));
                    }
                }
            }
        }
        out.into_iter().map(|(_, s)| s).collect()
    }

    /// `K̂`: `K` together with all of its minimal non-faces.
    pub fn hat_closure(&self) -> Self {
        let mut masks = self.facets.clone();
        masks.extend(self.minimal_non_faces());
        Self::from_masks(self.m, self.ground, masks)
    }

    /// Whether every `(k+1)`-subset of the vertex universe is a face.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        let n = self.ground.len();
        if k + 1 > n {
            return true;
        }
        let have = self.faces_by_dim().get(k + 1).map_or(0, Vec::len);
        have == binomial(n, k + 1)
    }

    /// Pure 2-dimensional, connected, no ghost vertices, every edge in exactly
    /// two facets and every vertex link a single cycle.
    pub fn is_surface_triangulation(&self) -> bool {
        if self.dim() != 2 || !self.is_pure() || !self.ghost_vertices().is_empty() {
            return false;
        }
        for e in self.faces(1) {
            if self.facets.iter().filter(|f| e.is_subset(**f)).count() != 2 {
                return false;
            }
        }
        for v in self.vertices().iter() {
            let lk = self.link(v).expect("v is a vertex");
            if !is_single_cycle(&lk) {
                return false;
            }
        }
        is_connected(&self.one_skeleton())
    }

    /// Vertices of `K` as graph vertices, 1-faces as edges. Ghost vertices are omitted.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new();
        for v in self.vertices().iter() {
            g.add_vertex(v);
        }
        for e in self.faces(1) {
            let mut it = e.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            g.add_edge(a, b);
        }
        g
    }

    /// A graph on labels `1..=m` as a complex of dimension at most 1.
    pub fn from_graph(m: usize, g: &Graph) -> Result<Self> {
        let mut facets: Vec<Vec<usize>> = g.edges().map(|(a, b)| vec![a, b]).collect();
        facets.extend(g.vertices().filter(|&v| g.neighbors(v).is_empty()).map(|v| vec![v]));
        Self::new(m, facets)
    }

    /// Facets as label lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn is_single_cycle(k: &SimplicialComplex) -> bool {
    if k.dim() != 1 || !k.is_pure() {
        return false;
    }
    let g = k.one_skeleton();
    g.vertex_count() >= 3 && g.vertices().all(|v| g.neighbors(v).len() == 2) && is_connected(&g)
}

pub(crate) fn is_connected(g: &Graph) -> bool {
    let Some(start) = g.vertices().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == g.vertex_count()
}
