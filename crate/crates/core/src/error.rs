//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an operation's arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two polynomials over different genera were combined.
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),

    /// Two truncated polynomials with different ambient shapes were combined.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The Polishchuk rewrite does not apply to the requested monomial.
    #[error("rewrite not applicable: {0}")]
    RewriteNotApplicable(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
