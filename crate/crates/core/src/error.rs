use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cannot combine generators from different algebras: {0} and {1}")]
    MixedAlgebra(String, String),
    #[error("`{0}` is not an element of the N=1 BMS superalgebra")]
    NotBms(String),
    #[error("`{0}` is not an element of the Heisenberg-Clifford algebra")]
    NotHc(String),
    #[error("invalid generator index for `{0}`")]
    BadIndex(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expected a numeric value, got `{0}`")]
    NotNumeric(String),
    #[error("comparison between values of different kinds")]
    KindMismatch,
    #[error("inexact polynomial division")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
