use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("symmetry violation: {0}")]
    Symmetry(String),
    #[error("parity obstruction: {0}")]
    Parity(String),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("point is not in the Vogan variety: {0}")]
    NotInVariety(String),
    #[error("inconsistent rank triangle: {0}")]
    InconsistentTriangle(String),
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Parse(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    /// Two independent routes to the same quantity disagreed.
    #[error("internal invariant breach: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code: 1 input error, 3 internal invariant breach.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(_) | Error::Singular => 3,
            _ => 1,
        }
    }
}
