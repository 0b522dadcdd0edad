//! Squared paths and squared cycles: witnesses, exact search and the
//! constructive embedding procedures.
//!
//! The square of a path `v1 … vℓ` adds the edges `v_i v_{i+2}`, so a squared
//! path is a vertex sequence in which every vertex is adjacent to the (up to)
//! two vertices before it. A squared cycle additionally wraps around.

mod nice;
mod parity;
mod qseq;
mod search;
mod squaring;

pub use nice::{nice_path_cycle, nice_preconditions, separation_holds};
pub use parity::squared_cycle_via_parity_correction;
pub use qseq::{
    concatenation_identity, k4_padding, k4_padding_sequence, q_sequence, ConcatenationCheck, QSequence, Residue,
};
pub use search::{
    find_squared_cycle, find_squared_cycle_with, find_squared_path, find_squared_path_with, longest_squared_cycle,
    longest_squared_path, SearchOptions, DEFAULT_SEARCH_CAP,
};
pub use squaring::{natural_sigma, quadruples, square_path_lemma};

use crate::graph::Graph;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("{n} vertices exceeds the exact-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("length {0} is not valid here")]
    InvalidLength(usize),
    #[error("quadruple Q{quadruple} at sigma position {position} has only {available} common neighbours in W")]
    SigmaConditionFails { position: usize, quadruple: usize, available: usize },
    #[error("sigma is not a permutation of the quadruple indices")]
    BadSigma,
    #[error("base sequence is not a path or cycle of the host: {0}")]
    NotAPath(String),
    #[error("vertex sets overlap")]
    Overlap,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction stuck: {0}")]
    ConstructionStuck(String),
    #[error("core contains no suitable triangle")]
    NoTriangle,
    #[error("length {0} unreachable with this core and connector set")]
    LengthUnreachable(usize),
    #[error("squared 5-cycles are K5 and cannot be built by parity correction")]
    Five,
    #[error("not a triangle walk at step {0}")]
    NotAWalk(usize),
    #[error("orientation is not the first edge of the walk")]
    BadOrientation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    SquaredPath,
    SquaredCycle,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::SquaredPath => "squared_path",
            WitnessKind::SquaredCycle => "squared_cycle",
        }
    }
}

/// An ordered vertex sequence claimed to span a squared path or cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl EmbeddingWitness {
    pub fn path(vertices: Vec<usize>) -> Self {
        EmbeddingWitness { kind: WitnessKind::SquaredPath, vertices }
    }

    pub fn cycle(vertices: Vec<usize>) -> Self {
        EmbeddingWitness { kind: WitnessKind::SquaredCycle, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "kind": self.kind.name(), "vertices": self.vertices })
    }
}

/// Linear-time check of distinctness and every required adjacency.
pub fn validate_witness(g: &Graph, w: &EmbeddingWitness) -> bool {
    let vs = &w.vertices;
    let l = vs.len();
    if l == 0 || vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = crate::VertexSet::new();
    for &v in vs {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    match w.kind {
        WitnessKind::SquaredPath => (0..l).all(|i| {
            (i + 1 >= l || g.has_edge(vs[i], vs[i + 1])) && (i + 2 >= l || g.has_edge(vs[i], vs[i + 2]))
        }),
        WitnessKind::SquaredCycle => {
            l >= 3 && (0..l).all(|i| g.has_edge(vs[i], vs[(i + 1) % l]) && g.has_edge(vs[i], vs[(i + 2) % l]))
        }
    }
}
