//! Constraint descriptions and per-transition samples.

use serde::{Deserialize, Serialize};

use crate::{barrier_value, BarrierError};

/// Which bounds of a constraint are active.
///
/// One-sided constraints drop the absent bound entirely; the dropped side
/// contributes exactly zero to the reward. (An alternative encoding places
/// the absent bound at an unreachable sentinel value, which leaves a small
/// residual term; see the tests for the numerical comparison.)
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sidedness {
    Both,
    LowerOnly,
    UpperOnly,
}

/// One soft constraint `d_lower <= C <= d_upper` with relaxation distance
/// `delta` and weight `alpha`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSpec {
    pub name: String,
    pub d_lower: f64,
    pub d_upper: f64,
    pub delta: f64,
    pub alpha: f64,
    pub one_sided: Sidedness,
}

impl ConstraintSpec {
    /// Default per-constraint weight.
    pub const DEFAULT_ALPHA: f64 = 0.1;

    pub fn two_sided(
        name: impl Into<String>,
        d_lower: f64,
        d_upper: f64,
        delta: f64,
        alpha: f64,
    ) -> Result<Self, BarrierError> {
        Self::new(name, d_lower, d_upper, delta, alpha, Sidedness::Both)
    }

    /// Constraint with only a lower bound (`C >= d_lower`).
    pub fn lower_only(
        name: impl Into<String>,
        d_lower: f64,
        delta: f64,
        alpha: f64,
    ) -> Result<Self, BarrierError> {
        Self::new(
            name,
            d_lower,
            f64::INFINITY,
            delta,
            alpha,
            Sidedness::LowerOnly,
        )
    }

    /// Constraint with only an upper bound (`C <= d_upper`).
    pub fn upper_only(
        name: impl Into<String>,
        d_upper: f64,
        delta: f64,
        alpha: f64,
    ) -> Result<Self, BarrierError> {
        Self::new(
            name,
            f64::NEG_INFINITY,
            d_upper,
            delta,
            alpha,
            Sidedness::UpperOnly,
        )
    }

    pub fn new(
        name: impl Into<String>,
        d_lower: f64,
        d_upper: f64,
        delta: f64,
        alpha: f64,
        one_sided: Sidedness,
    ) -> Result<Self, BarrierError> {
        let name = name.into();
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(BarrierError::InvalidDelta(delta));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(BarrierError::InvalidAlpha(alpha));
        }
        if one_sided == Sidedness::Both && !(d_lower < d_upper) {
            return Err(BarrierError::InvalidBounds {
                name,
                lower: d_lower,
                upper: d_upper,
            });
        }
        Ok(Self {
            name,
            d_lower,
            d_upper,
            delta,
            alpha,
            one_sided,
        })
    }

    /// Validates invariants of a spec built by direct field access or
    /// deserialization.
    pub fn validate(&self) -> Result<(), BarrierError> {
        Self::new(
            self.name.clone(),
            self.d_lower,
            self.d_upper,
            self.delta,
            self.alpha,
            self.one_sided,
        )
        .map(|_| ())
    }

    /// Width `d_upper - d_lower` for two-sided constraints.
    pub fn range(&self) -> Option<f64> {
        match self.one_sided {
            Sidedness::Both => Some(self.d_upper - self.d_lower),
            _ => None,
        }
    }

    /// Evaluates this constraint at `value`, pairing it into a sample.
    pub fn sample(&self, value: f64) -> ConstraintSample<'_> {
        ConstraintSample { spec: self, value }
    }
}

/// A constraint variable evaluated on one transition.
#[derive(Clone, Copy, Debug)]
pub struct ConstraintSample<'a> {
    pub spec: &'a ConstraintSpec,
    pub value: f64,
}

impl ConstraintSample<'_> {
    /// Weighted barrier term `alpha * [B(C - d_lower) + B(d_upper - C)]`,
    /// with the absent bound omitted for one-sided constraints.
    pub fn term(&self) -> f64 {
        let s = self.spec;
        let mut total = 0.0;
        if s.one_sided != Sidedness::UpperOnly {
            total += barrier_value(self.value - s.d_lower, s.delta);
        }
        if s.one_sided != Sidedness::LowerOnly {
            total += barrier_value(s.d_upper - self.value, s.delta);
        }
        s.alpha * total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barrier_reward;
    use approx::assert_relative_eq;

    fn spec(lower: f64, upper: f64, delta: f64, alpha: f64) -> ConstraintSpec {
        ConstraintSpec::two_sided("c", lower, upper, delta, alpha).unwrap()
    }

    #[test]
    fn midpoint_of_unit_bounds_is_zero() {
        // Both arguments equal 1, ln(1) = 0.
        let s = spec(-1.0, 1.0, 0.1, 0.1);
        assert_eq!(s.sample(0.0).term(), 0.0);
    }

    #[test]
    fn boundary_hand_value() {
        // 0.1 * (ln 2 + ln 0.1 - 1.5)
        let s = spec(-1.0, 1.0, 0.1, 0.1);
        assert_relative_eq!(s.sample(1.0).term(), -0.31094379124341005, max_relative = 1e-12);
    }

    #[test]
    fn lower_only_hand_value() {
        let s = ConstraintSpec::lower_only("gait", -0.6, 0.1, 0.1).unwrap();
        assert_relative_eq!(s.sample(0.5).term(), 0.1 * 1.1f64.ln(), max_relative = 1e-12);
    }

    #[test]
    fn reward_is_additive() {
        let s = spec(-1.0, 1.0, 0.1, 0.1);
        let one = s.sample(0.4);
        assert_eq!(barrier_reward(&[]), 0.0);
        assert_eq!(barrier_reward(&[one]), one.term());
        assert_relative_eq!(
            barrier_reward(&[one, one]),
            2.0 * one.term(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn constructor_rejects_invalid_specs() {
        assert!(ConstraintSpec::two_sided("c", 1.0, -1.0, 0.1, 0.1).is_err());
        assert!(ConstraintSpec::two_sided("c", -1.0, 1.0, 0.0, 0.1).is_err());
        assert!(ConstraintSpec::two_sided("c", -1.0, 1.0, 0.1, 0.0).is_err());
        assert!(ConstraintSpec::two_sided("c", -1.0, 1.0, 0.1, -2.0).is_err());
    }

    #[test]
    fn one_sided_matches_unreachable_bound_trick_near_satisfaction() {
        // The sentinel encoding (upper bound 2.0 for the gait variable,
        // 1.0 for clearance) leaves a residual alpha*ln(d_up - C). That
        // residual vanishes at full satisfaction (f = 1, l = 0) and stays
        // below 1e-2 nearby; further away the encodings legitimately part
        // ways (up to ~0.11 at f = -1), which is why the explicit enum is
        // the primary representation.
        let gait = ConstraintSpec::lower_only("f", -0.6, 0.1, 0.1).unwrap();
        let gait_trick = spec(-0.6, 2.0, 0.1, 0.1);
        for i in 0..=20 {
            let f = 0.9 + 0.005 * i as f64;
            let diff = (gait.sample(f).term() - gait_trick.sample(f).term()).abs();
            assert!(diff <= 1e-2, "gait residual {diff} at f={f}");
        }

        let clear = ConstraintSpec::lower_only("l", -0.08, 0.01, 0.1).unwrap();
        let clear_trick = spec(-0.08, 1.0, 0.01, 0.1);
        for i in 0..=20 {
            let l = -0.09 + 0.009 * i as f64;
            let diff = (clear.sample(l).term() - clear_trick.sample(l).term()).abs();
            assert!(diff <= 1e-2, "clearance residual {diff} at l={l}");
        }
    }
}
