//! Relaxed logarithmic barrier functions for soft-constraint rewards.
//!
//! A hard log-barrier is undefined for infeasible points. The relaxed
//! variant keeps the logarithm inside the feasible region and switches to
//! a quadratic extension within a relaxation distance `delta` of the
//! boundary, so the function (and its gradient) stay finite for every
//! input. That makes it usable as a reward term: constraint violations
//! are penalized with a steep but finite slope instead of blowing up.
//!
//! A soft constraint `d_lower <= C <= d_upper` contributes
//! `alpha * [B(C - d_lower; delta) + B(d_upper - C; delta)]` to the
//! reward; one-sided constraints simply omit the absent bound.

mod spec;

pub use spec::{ConstraintSample, ConstraintSpec, Sidedness};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BarrierError {
    #[error("relaxation distance delta must be > 0, got {0}")]
    InvalidDelta(f64),
    #[error("constraint weight alpha must be > 0, got {0}")]
    InvalidAlpha(f64),
    #[error("two-sided constraint `{name}` needs d_lower < d_upper, got [{lower}, {upper}]")]
    InvalidBounds {
        name: String,
        lower: f64,
        upper: f64,
    },
    #[error("constraint `{0}` evaluated to a non-finite value")]
    NonFiniteValue(String),
}

/// Relaxed log barrier `B(z; delta)` for the constraint `z >= 0`.
///
/// Equal to `ln z` for `z > delta`; for `z <= delta` it continues as the
/// quadratic `ln(delta) - [((z - 2*delta)/delta)^2 - 1] / 2`, which matches
/// the logarithm in value, first and second derivative at `z = delta` and
/// is finite for every finite `z`, including violations (`z < 0`).
pub fn relaxed_barrier(z: f64, delta: f64) -> Result<f64, BarrierError> {
    check_delta(delta)?;
    Ok(barrier_value(z, delta))
}

/// Derivative of [`relaxed_barrier`] with respect to `z`.
///
/// `1/z` on the logarithmic branch and `-(z - 2*delta)/delta^2` on the
/// quadratic branch; both branches evaluate to `1/delta` at `z = delta`.
pub fn relaxed_barrier_grad(z: f64, delta: f64) -> Result<f64, BarrierError> {
    check_delta(delta)?;
    Ok(barrier_grad(z, delta))
}

/// Sum of [`ConstraintSample::term`] over a set of evaluated constraints.
/// An empty set yields zero.
pub fn barrier_reward(samples: &[ConstraintSample<'_>]) -> f64 {
    samples.iter().map(|s| s.term()).sum()
}

fn check_delta(delta: f64) -> Result<(), BarrierError> {
    if delta > 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(BarrierError::InvalidDelta(delta))
    }
}

pub(crate) fn barrier_value(z: f64, delta: f64) -> f64 {
    debug_assert!(delta > 0.0);
    if z > delta {
        z.ln()
    } else {
        let u = (z - 2.0 * delta) / delta;
        delta.ln() - 0.5 * (u * u - 1.0)
    }
}

pub(crate) fn barrier_grad(z: f64, delta: f64) -> f64 {
    debug_assert!(delta > 0.0);
    if z > delta {
        1.0 / z
    } else {
        -(z - 2.0 * delta) / (delta * delta)
    }
}
