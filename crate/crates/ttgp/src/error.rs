//! Crate-wide error type.
//!
//! Errors are partitioned into three semantic classes so that callers (in
//! particular the CLI) can map them to distinct exit codes: malformed input,
//! numerical failure (e.g. a covariance matrix that stays indefinite after
//! jitter escalation), and optimizer non-convergence.

use thiserror::Error;

/// Error type for every fallible operation in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid caller-supplied data: dimension mismatches, non-positive
    /// hyperparameters, malformed files, unknown columns, ...
    #[error("input error: {0}")]
    Input(String),

    /// A numerical routine failed beyond recovery: Cholesky factorization
    /// failed after jitter escalation, a quadrature did not reach its
    /// tolerance, ...
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Hyperparameter optimization failed to converge on every restart.
    /// Carries a description of the best parameters found.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Underlying I/O failure while reading or writing files.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Convenience constructor for [`Error::Input`].
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Convenience constructor for [`Error::Numerical`].
    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_prefixed_by_class() {
        assert!(Error::input("bad column").to_string().starts_with("input error:"));
        assert!(Error::numerical("not spd").to_string().starts_with("numerical error:"));
        assert!(Error::Convergence("stuck".into())
            .to_string()
            .starts_with("convergence error:"));
    }
}
