use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Unsupported or inconsistent configuration (e.g. extension degree).
    #[error("configuration error: {0}")]
    Config(String),
    /// Operation applied outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index {index} out of range (bound {bound})")]
    Index { index: usize, bound: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Broken internal invariant; indicates a bug rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
