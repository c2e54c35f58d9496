//! Task-mode overrides of the gait and clearance constraint variables.

use serde::{Deserialize, Serialize};

use crate::{ClearanceSpec, GaitError, NUM_LEGS};

/// Locomotion mode. Beyond plain gait tracking, modes rewrite the
/// constraint variables: stand-mode rewards keeping every foot planted,
/// tripod-mode keeps one leg permanently lifted, biped-mode restricts the
/// gait and clearance terms to the two supporting legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum GaitMode {
    Normal,
    Stand,
    Tripod { lifted_leg: usize },
    Biped { contact_legs: [usize; 2] },
}

/// Constraint variables after mode overrides, plus the per-leg activity
/// mask: inactive legs contribute no gait or clearance barrier terms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeAdjusted {
    pub f: [f64; NUM_LEGS],
    pub l: [f64; NUM_LEGS],
    pub active: [bool; NUM_LEGS],
}

/// Applies mode overrides to the raw constraint variables.
///
/// `terrain_max` holds the highest sampled terrain height around each
/// foot; it is needed for the tripod-lifted leg, whose clearance variable
/// follows the enforced-swing branch at every instant.
pub fn apply_mode_overrides(
    mode: GaitMode,
    f: [f64; NUM_LEGS],
    l: [f64; NUM_LEGS],
    contacts: [bool; NUM_LEGS],
    foot_heights: [f64; NUM_LEGS],
    terrain_max: [f64; NUM_LEGS],
    spec: &ClearanceSpec,
) -> Result<ModeAdjusted, GaitError> {
    let mut out = ModeAdjusted {
        f,
        l,
        active: [true; NUM_LEGS],
    };
    match mode {
        GaitMode::Normal => {}
        GaitMode::Stand => {
            for i in 0..NUM_LEGS {
                out.f[i] = if contacts[i] { 1.0 } else { -1.0 };
                out.l[i] = 0.0;
            }
        }
        GaitMode::Tripod { lifted_leg } => {
            if lifted_leg >= NUM_LEGS {
                return Err(GaitError::LegIndexOutOfRange(lifted_leg));
            }
            // The lifted leg is rewarded for staying off the ground and
            // for continuous lift over the surrounding terrain.
            out.f[lifted_leg] = if contacts[lifted_leg] { -1.0 } else { 1.0 };
            out.l[lifted_leg] = foot_heights[lifted_leg] - (terrain_max[lifted_leg] + spec.p_des);
        }
        GaitMode::Biped { contact_legs } => {
            for &leg in &contact_legs {
                if leg >= NUM_LEGS {
                    return Err(GaitError::LegIndexOutOfRange(leg));
                }
            }
            if contact_legs[0] == contact_legs[1] {
                return Err(GaitError::InvalidSchedule(
                    "biped contact legs must be distinct".into(),
                ));
            }
            out.active = [false; NUM_LEGS];
            for &leg in &contact_legs {
                out.active[leg] = true;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const NO_TERRAIN: [f64; 4] = [0.0; 4];

    fn apply(
        mode: GaitMode,
        f: [f64; 4],
        contacts: [bool; 4],
        heights: [f64; 4],
    ) -> ModeAdjusted {
        apply_mode_overrides(
            mode,
            f,
            [0.1, -0.1, 0.0, 0.05],
            contacts,
            heights,
            NO_TERRAIN,
            &ClearanceSpec::default(),
        )
        .unwrap()
    }

    #[test]
    fn normal_mode_is_identity() {
        let f = [0.3, -0.2, 0.9, -0.9];
        let out = apply(GaitMode::Normal, f, [true, false, true, false], [0.0; 4]);
        assert_eq!(out.f, f);
        assert_eq!(out.active, [true; 4]);
    }

    #[test]
    fn stand_mode_rewards_full_contact() {
        let out = apply(GaitMode::Stand, [0.3; 4], [true; 4], [0.0; 4]);
        assert_eq!(out.f, [1.0; 4]);
        assert_eq!(out.l, [0.0; 4]);
        assert_eq!(out.active, [true; 4]);

        let out = apply(GaitMode::Stand, [0.3; 4], [true, false, true, true], [0.0; 4]);
        assert_eq!(out.f, [1.0, -1.0, 1.0, 1.0]);
    }

    #[test]
    fn tripod_flips_lifted_leg_and_enforces_lift() {
        let mode = GaitMode::Tripod { lifted_leg: 3 };
        let out = apply(mode, [0.3; 4], [true, true, true, true], [0.0, 0.0, 0.0, 0.12]);
        assert_eq!(out.f[3], -1.0, "contacting lifted leg is penalized");
        assert!((out.l[3] - (0.12 - 0.15)).abs() < 1e-12);
        assert_eq!(out.f[0], 0.3, "other legs untouched");

        let out = apply(mode, [0.3; 4], [true, true, true, false], [0.0, 0.0, 0.0, 0.2]);
        assert_eq!(out.f[3], 1.0);
    }

    #[test]
    fn biped_masks_non_contact_legs() {
        let mode = GaitMode::Biped {
            contact_legs: [0, 1],
        };
        let out = apply(mode, [0.3; 4], [true; 4], [0.0; 4]);
        assert_eq!(out.active, [true, true, false, false]);
        assert_eq!(out.f, [0.3; 4], "variables themselves unchanged");
    }

    #[test]
    fn invalid_indices_rejected() {
        let err = apply_mode_overrides(
            GaitMode::Tripod { lifted_leg: 4 },
            [0.0; 4],
            [0.0; 4],
            [false; 4],
            [0.0; 4],
            NO_TERRAIN,
            &ClearanceSpec::default(),
        )
        .unwrap_err();
        assert_eq!(err, GaitError::LegIndexOutOfRange(4));

        assert!(apply_mode_overrides(
            GaitMode::Biped {
                contact_legs: [2, 2]
            },
            [0.0; 4],
            [0.0; 4],
            [false; 4],
            [0.0; 4],
            NO_TERRAIN,
            &ClearanceSpec::default(),
        )
        .is_err());
    }
}
