use crate::set::VertexSet;

/// Errors produced by graph construction and the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} outside 1..={limit}")]
    VertexRange { vertex: usize, limit: usize },

    #[error("vertex labels above 64 are not supported")]
    LabelOverflow,

    #[error("edge {edge} has {got} vertices, expected {expected}")]
    EdgeArity {
        edge: VertexSet,
        got: usize,
        expected: usize,
    },

    #[error("duplicate edge {0}")]
    DuplicateEdge(VertexSet),

    #[error("invalid shadow target {target} for {uniformity}-sets")]
    InvalidTarget { target: usize, uniformity: usize },

    #[error("sets {0} and {1} overlap")]
    Overlap(VertexSet, VertexSet),

    #[error("uniformity mismatch: {0}")]
    Uniformity(String),

    #[error("shifting requires i < j, got i={i}, j={j}")]
    ShiftOrder { i: usize, j: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("instance exceeds the desk-scale limit: {0}")]
    LimitExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
