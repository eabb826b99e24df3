use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context violation: {0}")]
    ContextViolation(String),

    #[error("unsupported in this field kind: {0}")]
    Unsupported(String),

    #[error("unitarity bound violated: {0}")]
    BoundViolated(String),

    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("infeasible request: {0}")]
    Infeasible(String),
}
