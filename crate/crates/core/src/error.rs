use thiserror::Error;

/// Errors produced by algebra construction, arithmetic and the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("exponential series did not converge within {terms} terms")]
    Convergence { terms: usize },

    #[error("oscillation impossible: {0}")]
    Analysis(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("check failed: {0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
