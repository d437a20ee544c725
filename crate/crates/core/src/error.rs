//! Library-wide error type.

use thiserror::Error;

/// Failure modes surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// The inputs are valid numbers but violate a physical applicability
    /// condition (for example a packet centred inside the barrier width).
    #[error("regime: {0}")]
    Regime(String),

    /// An iterative routine exhausted its budget before reaching the
    /// requested accuracy. Carries the best estimate it reached.
    #[error("convergence: {context}: best estimate {best:e}, error estimate {error:e} exceeds tolerance {tol:e}")]
    Convergence {
        context: String,
        best: f64,
        error: f64,
        tol: f64,
    },

    /// A root-finding bracket does not enclose a sign change.
    #[error("bracket: {0}")]
    Bracket(String),

    /// A configuration field failed validation.
    #[error("config: field `{field}`: {reason}")]
    Config { field: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn regime(msg: impl Into<String>) -> Self {
        Error::Regime(msg.into())
    }

    pub(crate) fn bracket(msg: impl Into<String>) -> Self {
        Error::Bracket(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
