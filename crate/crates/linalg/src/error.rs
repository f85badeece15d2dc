use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix of {rows}x{cols} exceeds the element budget of {budget}")]
    SizeLimit { rows: usize, cols: usize, budget: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("contract violated: {0}")]
    Contract(String),
}
