//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested GB2 moment does not exist (requires a*q > 1).
    #[error("GB2 first moment undefined: a*q = {aq} <= 1")]
    MomentUndefined { aq: f64 },

    /// Cholesky factorization hit a non-positive pivot.
    #[error("matrix not positive definite (pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },

    /// Inconsistent dimensions between related objects.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A grouped observation violated its structural invariants.
    #[error("invalid observation: {0}")]
    InvalidObservation(String),

    /// A configuration value violated its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A summary was requested from a chain with no stored draws.
    #[error("chain contains no draws")]
    EmptyChain,

    /// A failure tagged with the period it occurred in.
    #[error("failure at period {period}: {source}")]
    AtPeriod {
        period: usize,
        #[source]
        source: Box<Error>,
    },

    /// A failure tagged with the MCMC iteration it occurred in.
    #[error("failure at iteration {iteration}: {source}")]
    AtIteration {
        iteration: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_period(self, period: usize) -> Error {
        Error::AtPeriod {
            period,
            source: Box::new(self),
        }
    }

    pub(crate) fn at_iteration(self, iteration: usize) -> Error {
        Error::AtIteration {
            iteration,
            source: Box::new(self),
        }
    }
}
