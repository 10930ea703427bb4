use thiserror::Error;

/// Errors raised by group construction, representation computation and the
/// Wigner machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),

    #[error("group has even order {0}; square roots are not unique")]
    EvenOrderGroup(usize),

    #[error("joint diagonalization of class operators failed to separate characters after {0} attempts")]
    DegenerateEigenproblem(usize),

    #[error("could not extract an irreducible block for irrep {0}")]
    ReducibleBlock(usize),

    #[error("Wigner variants differ: {0:?} vs {1:?}")]
    VariantMismatch(crate::wigner::Variant, crate::wigner::Variant),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (< {bound})")]
    OutOfRange { index: usize, bound: usize },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
