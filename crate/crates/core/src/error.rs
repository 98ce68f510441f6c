use thiserror::Error;

/// Errors raised by the verification routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-contract input. `field` names the offending
    /// argument or JSON field.
    #[error("invalid input `{field}`: {reason}")]
    InvalidInput { field: String, reason: String },

    #[error("matrix is singular (|det| = {det:e})")]
    Singular { det: f64 },

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    /// A combinatorial size cap was exceeded and no override was given.
    #[error("{what} exceeds cap: {size} > {cap} (use the override flag)")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: String, iterations: usize },
}

impl Error {
    pub(crate) fn input(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
