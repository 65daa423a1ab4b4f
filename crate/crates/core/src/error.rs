use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("variable u{0} has no assigned value")]
    MissingVariable(u32),
    #[error("invalid Dyck word: {0}")]
    InvalidWord(String),
    #[error("argument out of range: {0}")]
    DomainError(String),
    #[error("Vandermonde nodes are not pairwise distinct (index {0} and {1})")]
    DuplicateNodes(usize, usize),
    #[error("cost guard exceeded: {0}")]
    CostGuard(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
