//! Contact and foot-clearance constraint variables.

use serde::{Deserialize, Serialize};

use crate::{GaitError, GaitSchedule};

/// Foot clearance parameters: how high the foot must lift over the
/// surrounding terrain while swing is enforced.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClearanceSpec {
    /// Desired foot lift over the local terrain maximum (m).
    pub p_des: f64,
    /// Lower bound on the clearance constraint variable.
    pub d_clearance: f64,
    /// Radius of the terrain sampling window around the foot (m).
    pub sample_radius: f64,
}

impl Default for ClearanceSpec {
    fn default() -> Self {
        Self {
            p_des: 0.15,
            d_clearance: -0.08,
            sample_radius: 0.05,
        }
    }
}

/// Contact constraint variable: the cycle value `g` when the foot is in
/// contact and `-g` when it is not, so that stance during the positive
/// half-phase and swing during the negative half-phase both satisfy
/// `f >= d_gait`.
pub fn contact_constraint(g: f64, in_contact: bool) -> f64 {
    if in_contact {
        g
    } else {
        -g
    }
}

/// Clearance constraint variable: while swing is enforced
/// (`g <= d_gait`), the foot height minus the highest nearby terrain
/// sample plus the desired lift; zero otherwise.
pub fn clearance_constraint(
    g: f64,
    schedule: &GaitSchedule,
    foot_height: f64,
    terrain_samples: &[f64],
    spec: &ClearanceSpec,
) -> Result<f64, GaitError> {
    if g > schedule.d_gait {
        return Ok(0.0);
    }
    enforced_clearance(foot_height, terrain_samples, spec)
}

/// The first branch of the clearance variable, used unconditionally for a
/// tripod-lifted leg.
pub(crate) fn enforced_clearance(
    foot_height: f64,
    terrain_samples: &[f64],
    spec: &ClearanceSpec,
) -> Result<f64, GaitError> {
    let max = terrain_samples
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return Err(GaitError::EmptyTerrainSamples);
    }
    Ok(foot_height - (max + spec.p_des))
}
