use thiserror::Error;

/// Errors raised by the library.
///
/// `IdentityViolation` is special: it is only returned when a check that
/// must hold as a theorem fails, which means an implementation bug rather
/// than bad input. The CLI maps it to exit status 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("index out of range: {index} (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("non-square table: {0}")]
    NonSquare(String),

    #[error("alphabet mismatch: {left} vs {right} generators")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("degree {degree} exceeds certified truncation {complete_through}")]
    TruncationExceeded { degree: usize, complete_through: usize },

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("identity violated (implementation bug): {0}")]
    IdentityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
