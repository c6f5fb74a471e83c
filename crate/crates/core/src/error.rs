use thiserror::Error;

/// Errors raised by graph construction, matrix assembly and file parsing.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("invalid parameter for {family}: {reason}")]
    InvalidFamilyParameter { family: &'static str, reason: String },

    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },

    #[error("phase given on non-edge ({0}, {1})")]
    PhaseOnNonEdge(usize, usize),

    #[error("missing phase on edge ({0}, {1})")]
    MissingPhase(usize, usize),

    #[error("non-finite phase on edge ({0}, {1})")]
    NonFinitePhase(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("diagonal is only accepted for the general kind")]
    UnexpectedDiagonal,

    #[error("operation not supported for {0} kind")]
    UnsupportedKind(&'static str),

    #[error("vertex {0} has no neighbours")]
    NoNeighbours(usize),

    #[error("vertex {vertex} is not adjacent to every other vertex (degree {degree}, n {n})")]
    NotApex { vertex: usize, degree: usize, n: usize },

    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("json error: {0}")]
    Json(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
