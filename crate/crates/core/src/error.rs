use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count must be positive")]
    ZeroVertices,
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("facet #{index} is empty")]
    EmptyFacet { index: usize },
    #[error("facet #{index} lists vertex {vertex} twice")]
    DuplicateVertex { index: usize, vertex: usize },
    #[error("{0} is not a vertex of the complex")]
    NotAVertex(usize),
    #[error("vertex label sets overlap in {0}")]
    OverlappingLabels(VertexSet),
    #[error("subsets {0} and {1} are not disjoint")]
    NotDisjoint(VertexSet, VertexSet),
    #[error("subset {0} must be non-empty")]
    EmptySubset(&'static str),
    #[error("subset {subset} is not contained in the vertex universe {universe}")]
    SubsetOutOfUniverse { subset: VertexSet, universe: VertexSet },
    #[error("ordering is not a permutation of the graph's vertices")]
    NotAPermutation,
    #[error("complex has dimension {0}, but at most 2 is supported here")]
    DimensionTooLarge(isize),
    #[error("{what}: m = {m} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, m: usize, cap: usize },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unknown field spec {0:?} (expected `q` or `fp:<prime>`)")]
    UnknownField(String),
    #[error("Moore space parameter must be at least 2, got {0}")]
    MooreParameter(usize),
    #[error("input is not a surface triangulation")]
    NotASurface,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("malformed witness: {0}")]
    Witness(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
