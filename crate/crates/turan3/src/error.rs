use thiserror::Error;

/// Errors produced by the library.
///
/// `BudgetExhausted` is deliberately separate from `InvalidInput`: an
/// exhaustive search that runs out of its node budget must surface as a
/// resource failure carrying the best bound found so far, never as a
/// silently wrong answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("node budget exhausted after {nodes} nodes (best lower bound so far: {best:?})")]
    BudgetExhausted { nodes: u64, best: Option<u64> },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
