use thiserror::Error;

/// Errors surfaced by construction and precondition checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed face: {0}")]
    MalformedFace(String),

    #[error("a simplicial complex must contain at least the empty face")]
    VoidComplex,

    #[error("not a face of the complex: {0}")]
    NotAFace(String),

    #[error("vertex sets are not disjoint: {0}")]
    VertexOverlap(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("complex is not color-shifted: {0}")]
    NotColorShifted(String),

    #[error("complex is not flag: minimal non-face {0} has more than two elements")]
    NotFlag(String),

    #[error("face size mismatch: {0}")]
    SizeMismatch(String),

    #[error("not the f-vector of an r-colorable complex: {0}")]
    FfkViolation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("ledger error: {0}")]
    Ledger(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
