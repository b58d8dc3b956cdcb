use thiserror::Error;

use crate::units::Dimension;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the numerical routines and the material registry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("{name} = {value:e} is out of range: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        expected: Dimension,
        found: Dimension,
    },

    /// Adaptive quadrature hit its subdivision limit with the error estimate
    /// still above the requested tolerance.
    #[error(
        "quadrature did not converge: error estimate {estimate:e} exceeds \
         tolerance {tolerance:e} after {subdivisions} subdivisions"
    )]
    Convergence {
        estimate: f64,
        tolerance: f64,
        subdivisions: usize,
    },

    #[error(
        "root finder did not converge after {iterations} iterations; last bracket [{lo:e}, {hi:e}]"
    )]
    Solver { lo: f64, hi: f64, iterations: usize },

    /// Positive heating with neither radiative nor gas transport: the body
    /// has no steady state.
    #[error("unboundable temperature: heat flux {flux:e} W/m^2 with no radiative or gas transport channel")]
    Unboundable { flux: f64 },

    #[error("invalid table at point {index}: {reason}")]
    InvalidTable { index: usize, reason: &'static str },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("material '{record}': invalid {field}: {message}")]
    InvalidRecord {
        record: String,
        field: String,
        message: String,
    },

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

/// Rejects NaN/infinite values and values below `min` (or at `min` when
/// `strict`).
pub(crate) fn check_min(name: &'static str, value: f64, min: f64, strict: bool) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::Domain {
            name,
            value,
            reason: "must be finite",
        });
    }
    if strict && value <= min {
        return Err(Error::Domain {
            name,
            value,
            reason: if min == 0.0 {
                "must be positive"
            } else {
                "below lower bound"
            },
        });
    }
    if !strict && value < min {
        return Err(Error::Domain {
            name,
            value,
            reason: if min == 0.0 {
                "must be non-negative"
            } else {
                "below lower bound"
            },
        });
    }
    Ok(value)
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    check_min(name, value, 0.0, true)
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    check_min(name, value, 0.0, false)
}

pub(crate) fn unit_interval(name: &'static str, value: f64) -> Result<f64> {
    non_negative(name, value)?;
    if value > 1.0 {
        return Err(Error::Domain {
            name,
            value,
            reason: "must lie in [0, 1]",
        });
    }
    Ok(value)
}
