use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("rank deficiency: expected rank {expected}, got {actual}")]
    RankDeficiency { expected: usize, actual: usize },

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("vector is not a lattice member: {0}")]
    NotMember(String),

    #[error("not a root basis: {0}")]
    NotRootBasis(String),

    #[error("degenerate form")]
    DegenerateForm,

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("point is not singular on the hypersurface: {0}")]
    NonsingularPoint(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported export: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
