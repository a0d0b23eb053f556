use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("action violates a defining relation: {0}")]
    ActionViolation(String),
    #[error("element is not invariant under the group action")]
    NotInvariant,
    #[error("operation requires a specialized parameter table; specialize q first")]
    SymbolicUnsupported,
    #[error("operation requires a diagonal action")]
    NotDiagonal,
    #[error("operation requires q = 1")]
    NotClassical,
    #[error("expected a basis element: {0}")]
    NotBasis(String),
    #[error("lift failed: {0}")]
    Lift(String),
}

pub type Result<T> = std::result::Result<T, Error>;
