use thiserror::Error;

/// Errors raised by the rate solvers and the scenario layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    /// The integrator ran out of budget. `value` is the best available
    /// estimate of the quantity that was requested (an integral or a rate).
    #[error("no convergence after {evaluations} evaluations: value {value:e}, error estimate {error_estimate:e}")]
    Convergence {
        value: f64,
        error_estimate: f64,
        evaluations: u64,
    },

    #[error("invalid quadrature settings: {0}")]
    Quadrature(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
