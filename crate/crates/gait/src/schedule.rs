//! Gait schedules: period decomposition, phase offsets, and presets.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{GaitError, NUM_LEGS};

/// Stride length heuristic constant for speed-dependent stance time (m).
pub const STRIDE_LENGTH: f64 = 0.63;
/// Command speed above which stance time shrinks as L/v (m/s).
pub const STANCE_ADAPT_THRESHOLD: f64 = 1.75;
/// Stance (and swing) time used below the adaptation threshold (s).
pub const DEFAULT_STANCE_TIME: f64 = 0.36;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaitPreset {
    Trot,
    TransverseGallop,
    RotaryGallop,
    Custom,
}

/// One preferred gait: how the period splits into stance and swing halves,
/// where each leg sits in the cycle, and how much timing slack `d_gait`
/// grants.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaitSchedule {
    /// Duration of the stance half-phase (s).
    pub stance_time: f64,
    /// Duration of the swing half-phase (s).
    pub swing_time: f64,
    /// Per-leg phase offsets in [0, 1), order (RH, LH, RF, LF).
    pub phase_offsets: [f64; NUM_LEGS],
    /// Lower bound on the contact constraint variable, in (-1, 0].
    pub d_gait: f64,
    pub preset: GaitPreset,
}

impl GaitSchedule {
    pub fn new(
        stance_time: f64,
        swing_time: f64,
        phase_offsets: [f64; NUM_LEGS],
        d_gait: f64,
        preset: GaitPreset,
    ) -> Result<Self, GaitError> {
        if !(stance_time > 0.0 && stance_time.is_finite()) {
            return Err(GaitError::InvalidSchedule(format!(
                "stance_time must be > 0, got {stance_time}"
            )));
        }
        if !(swing_time > 0.0 && swing_time.is_finite()) {
            return Err(GaitError::InvalidSchedule(format!(
                "swing_time must be > 0, got {swing_time}"
            )));
        }
        for (i, &phi) in phase_offsets.iter().enumerate() {
            if !(0.0..1.0).contains(&phi) {
                return Err(GaitError::InvalidSchedule(format!(
                    "phase offset {phi} for leg {i} outside [0, 1)"
                )));
            }
        }
        if !(d_gait > -1.0 && d_gait <= 0.0) {
            return Err(GaitError::InvalidSchedule(format!(
                "d_gait must lie in (-1, 0], got {d_gait}"
            )));
        }
        Ok(Self {
            stance_time,
            swing_time,
            phase_offsets,
            d_gait,
            preset,
        })
    }

    /// Full gait period `T = T_st + T_sw` (s).
    pub fn period(&self) -> f64 {
        self.stance_time + self.swing_time
    }
}

/// Stance time as a function of commanded speed: fixed below the
/// adaptation threshold, stride-length over speed above it. Continuous at
/// the threshold because `0.63 / 1.75 = 0.36`.
pub fn stance_time_for_speed(v_cmd: f64) -> Result<f64, GaitError> {
    stance_time_for_speed_with(v_cmd, STRIDE_LENGTH, STANCE_ADAPT_THRESHOLD, DEFAULT_STANCE_TIME)
}

pub fn stance_time_for_speed_with(
    v_cmd: f64,
    stride_length: f64,
    threshold: f64,
    default_stance: f64,
) -> Result<f64, GaitError> {
    if !(v_cmd > 0.0 && v_cmd.is_finite()) {
        return Err(GaitError::InvalidSpeed(v_cmd));
    }
    if v_cmd <= threshold {
        Ok(default_stance)
    } else {
        Ok(stride_length / v_cmd)
    }
}

/// Builds a preset schedule. `v_cmd` is required for the rotary gallop,
/// whose stance time adapts to the commanded speed.
pub fn make_gait(preset: GaitPreset, v_cmd: Option<f64>) -> Result<GaitSchedule, GaitError> {
    match preset {
        GaitPreset::Trot => GaitSchedule::new(
            0.36,
            0.36,
            [0.0, 0.5, 0.0, 0.5],
            -0.6,
            GaitPreset::Trot,
        ),
        GaitPreset::TransverseGallop => GaitSchedule::new(
            0.41,
            0.41,
            [0.0, 0.2, 0.5, 0.7],
            -0.3,
            GaitPreset::TransverseGallop,
        ),
        GaitPreset::RotaryGallop => {
            let v = v_cmd.ok_or(GaitError::MissingSpeed)?;
            let stance = stance_time_for_speed(v)?;
            let period = stance + DEFAULT_STANCE_TIME;
            let lead = 0.4 * stance / period;
            GaitSchedule::new(
                stance,
                DEFAULT_STANCE_TIME,
                [0.0, lead, 0.5 + lead, 0.5],
                -0.3,
                GaitPreset::RotaryGallop,
            )
        }
        GaitPreset::Custom => Err(GaitError::InvalidSchedule(
            "custom gaits are built with GaitSchedule::new".into(),
        )),
    }
}

/// Mandatory and maximum stance durations permitted by `d_gait`.
///
/// Contact is required while `g >= |d_gait|` and forbidden while
/// `g <= -|d_gait|`; in between either choice is penalty-free. Under the
/// warped phase that makes the mandatory stance
/// `(1 - 2*asin(|d|)/pi) * T_st` and the maximum stance
/// `T_st + (2*asin(|d|)/pi) * T_sw`.
pub fn stance_bounds(schedule: &GaitSchedule) -> (f64, f64) {
    let slack = 2.0 * schedule.d_gait.abs().asin() / PI;
    let mandatory = (1.0 - slack) * schedule.stance_time;
    let maximum = schedule.stance_time + slack * schedule.swing_time;
    (mandatory, maximum)
}
