use thiserror::Error;

/// Errors raised by the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    ZeroDivisor,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
