//! Error type shared by all modules.

use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid input (bad grid, bad degree, bad config value).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A weight that violates positivity/integrability requirements.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// The candidate map does not send the unit disk into itself.
    #[error("not a self-map of the disk: {0}")]
    NotSelfMap(String),

    /// An integrand evaluated to a non-finite value at a quadrature node.
    #[error("integration domain error: non-finite integrand at z = {at}")]
    IntegrationDomain { at: Complex64 },

    /// Refinement stopped before the requested tolerance was met.
    /// Carries the last two successive estimates.
    #[error("quadrature tolerance not met: last estimates {prev} and {last}")]
    ToleranceNotMet { last: f64, prev: f64 },

    /// The polynomial root finder failed to converge; `iterates` holds the
    /// final approximations for diagnosis.
    #[error("root finder failed after {iterations} iterations (residual {residual:.3e})")]
    RootFinder {
        iterations: usize,
        residual: f64,
        iterates: Vec<Complex64>,
    },

    /// A truncated series would need more terms than the allowed budget.
    #[error("truncation budget exceeded: {required} coefficients required")]
    TruncationBudget { required: usize },

    /// Geometric precondition on a region was violated.
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    /// Failure while parsing a textual spec (weight key, symbol, config).
    #[error("parse error: {0}")]
    Parse(String),

    /// Unexpected internal failure.
    #[error("internal error: {0}")]
    Internal(String),
}
