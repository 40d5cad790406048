use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph would need {requested} vertices, capacity is {}", crate::graph::MAX_VERTICES)]
    Capacity { requested: usize },

    #[error("weight vector has length {got}, graph has {expected} vertices")]
    WeightLength { expected: usize, got: usize },

    #[error("input graph must be connected")]
    Disconnected,

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("input contains an induced {pattern} on {witness}")]
    ForbiddenSubgraph { pattern: String, witness: VertexSet },

    #[error("independent routes disagree: {0}")]
    Disagreement(String),

    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),

    #[error("unknown graph class {0:?}")]
    UnknownClass(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
