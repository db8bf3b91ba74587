//! Error type shared by the library modules.

use thiserror::Error;

/// Errors raised by the physics and calibration layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A quantity that must be a finite real number was not.
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    /// A quantity violated its domain constraint.
    #[error("{what} must be {constraint}, got {value}")]
    InvalidParameter {
        what: &'static str,
        constraint: &'static str,
        value: f64,
    },

    /// Monte Carlo estimators need at least one sample.
    #[error("sample count must be at least 1")]
    NoSamples,

    /// A calibration problem was malformed before any search started.
    #[error("invalid calibration problem: {0}")]
    InvalidProblem(String),

    /// The coarse grid scan found no candidate worth refining.
    #[error(
        "no solution in bounds: best coarse-grid residual {best_residual} rad \
         exceeds the {threshold} rad refinement threshold"
    )]
    NoSolutionInBounds { best_residual: f64, threshold: f64 },

    /// Local refinement ran out of its evaluation budget.
    #[error(
        "evaluation cap exceeded: residual {residual} rad after {evaluations} \
         evaluations (tolerance {tolerance} rad)"
    )]
    EvaluationCapExceeded {
        evaluations: usize,
        residual: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}

pub(crate) fn ensure_positive(what: &'static str, value: f64) -> Result<f64> {
    ensure_finite(what, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            what,
            constraint: "> 0",
            value,
        })
    }
}

pub(crate) fn ensure_non_negative(what: &'static str, value: f64) -> Result<f64> {
    ensure_finite(what, value)?;
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            what,
            constraint: ">= 0",
            value,
        })
    }
}
