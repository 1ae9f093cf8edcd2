use thiserror::Error;

/// Errors raised by the library. Every budget overrun is an error; nothing is
/// silently truncated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("ground set of size {0} exceeds the supported maximum of 64 vertices")]
    TooManyVertices(usize),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("quotient ring is not unmixed")]
    NotUnmixed,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what} needs {required} evaluations, budget is {limit}")]
    Budget {
        what: String,
        required: u128,
        limit: u128,
    },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not very well-covered")]
    NotVeryWellCovered,

    #[error("invalid very well-covered structure: {0}")]
    InvalidStructure(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
