use thiserror::Error;

/// Errors raised by the closed forms, the special-function kernel and the
/// numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Gamma (or a Pochhammer denominator) evaluated at a nonpositive integer.
    #[error("pole at {0}")]
    Pole(f64),

    /// Intermediate terms exceeded the representable range.
    #[error("overflow evaluating {0}")]
    Overflow(&'static str),

    /// The quantity diverges for the requested parameters.
    #[error("divergent: {0}")]
    Divergent(String),

    /// A root or eigenvalue search could not bracket a sign change.
    #[error("bracketing failed for level {level} on [{lo}, {hi}]: {reason}")]
    Bracket {
        level: usize,
        lo: f64,
        hi: f64,
        reason: String,
    },

    /// An iterative procedure ran out of iterations.
    #[error("no convergence after {iterations} iterations (last error estimate {estimate:e})")]
    NoConvergence { iterations: usize, estimate: f64 },

    /// A maximizer ended on the boundary of its search interval.
    #[error("maximum at interval boundary s = {0}")]
    BoundaryMaximum(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
