use thiserror::Error;

/// Errors produced by the physics and numerics layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The inputs are valid numbers but fall outside the high-velocity,
    /// weak-coupling regime the theory covers.
    #[error("regime error: {0}")]
    Regime(String),

    /// An infinite series hit its term cap before reaching tolerance.
    #[error("series did not converge after {terms} terms (best estimate {best_estimate:e}, tail {tail_bound:e})")]
    SeriesCapOut {
        terms: usize,
        best_estimate: f64,
        tail_bound: f64,
    },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge (best estimate {best_estimate:e}, error estimate {error_estimate:e})")]
    Quadrature {
        best_estimate: f64,
        error_estimate: f64,
    },

    /// The radial integration could not produce a trustworthy phase shift.
    #[error("radial integration failed: {0}")]
    Radial(String),

    /// A phase-shift series was too short or otherwise malformed.
    #[error("invalid phase-shift series: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
