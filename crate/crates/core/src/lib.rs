//! Golodness invariants of simplicial complexes.
//!
//! The crate computes, for a simplicial complex `K` on `[m]`:
//!
//! * reduced (co)homology of full subcomplexes over `Q`, `Z/p` and `Z`;
//! * the bigraded Tor table of the Stanley-Reisner ring `k[K]` through
//!   Hochster's decomposition, and the Betti series of the moment-angle
//!   complex;
//! * the product pairing `H̃^p(K_I) ⊗ H̃^q(K_J) → H̃^{p+q+1}(K_{I∪J})` for
//!   disjoint `I, J`, with explicit witnesses of non-trivial products;
//! * chordality, neighborliness and surface recognition;
//! * a Golod verdict combining the above with the known certification
//!   criteria;
//! * an independent Koszul-complex computation of Tor and its products for
//!   cross-checking.

pub mod catalog;
pub mod chordal;
pub mod complex;
pub mod error;
pub mod field;
pub mod golod;
pub mod graph;
pub mod hochster;
pub mod homology;
pub mod io;
pub mod koszul;
pub mod limits;
pub mod linalg;
pub mod moore;
pub mod products;
pub mod snf;
pub mod vertex_set;

pub use chordal::{is_chordal, verify_peo, EliminationOrdering};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use golod::{golod_verdict, surface_golod_equivalence_report, GolodStatus, GolodVerdict, Reason};
pub use graph::{nonisomorphic_graphs, Graph};
pub use koszul::{koszul_product_nontrivial, koszul_tor_table};
pub use limits::ScanLimits;
pub use hochster::{hochster_table, zk_poincare, PoincareSeries, TorTable};
pub use homology::{integral_homology, reduced_betti, BettiVector, IntegralHomology};
pub use moore::{moore_complex, verify_moore, MooreReport};
pub use products::{cross_product_map, find_nontrivial_product, ProductWitness};
pub use vertex_set::VertexSet;
