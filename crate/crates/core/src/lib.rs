//! Clique graphs, iterated clique graphs, Helly and necktie classification,
//! homotopy-preserving reductions, and a GF(2) homology oracle for clique
//! complexes.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bit-set graphs, graph6 / edge-list I/O, generators,
//!   domination and twin predicates, small exact isomorphism.
//! * [`cliques`]: maximal cliques, the clique graph operator and its
//!   iterates, stars, neckties, internal triangles and Helly testing.
//! * [`homology`]: clique complexes, Euler characteristic and Betti numbers
//!   over GF(2).
//! * [`reduce`]: dominated-vertex and edge removals, dismantling, `#→`
//!   certificates and the wedge / H-construction pipelines.
//! * [`harness`]: exhaustive corpus generation and per-graph verification
//!   reports.

pub mod cliques;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod reduce;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
