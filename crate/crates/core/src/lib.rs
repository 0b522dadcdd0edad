//! Squared paths and squared cycles in graphs of large minimum degree.
//!
//! The crate evaluates the exact threshold functions, builds the extremal
//! constructions, analyses triangle components, packs connected triangle
//! factors and embeds squared paths and cycles both by exhaustive search and
//! by the constructive procedures that prove the thresholds are forced.

pub mod bitset;
pub mod embeddings;
pub mod factors;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod random;
pub mod stability;
pub mod thresholds;
pub mod triangles;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use graph::{Graph, GraphError};

/// Exact rational used for `η`, `μ` and inequality evaluation.
pub type Rational = num_rational::Ratio<i128>;
