//! Phase evolution and the per-leg cycle function.

use std::f64::consts::TAU;

use crate::GaitSchedule;

/// Normalized phase in [0, 1) that advances 0 -> 0.5 over the stance time
/// and 0.5 -> 1 over the swing time of each period.
///
/// With equal stance and swing times this is just `fract(t / T)`; unequal
/// times warp the sine's half-phases so each occupies its prescribed
/// duration.
pub fn warped_phase(t: f64, schedule: &GaitSchedule) -> f64 {
    let period = schedule.period();
    let u = t.rem_euclid(period);
    if u < schedule.stance_time {
        0.5 * u / schedule.stance_time
    } else {
        0.5 + 0.5 * (u - schedule.stance_time) / schedule.swing_time
    }
}

/// Gait cycle function `g_i(t) = sin(2*pi*(theta(t) + phi_i))` for one leg.
pub fn gait_phase(t: f64, schedule: &GaitSchedule, leg: usize) -> f64 {
    let theta = warped_phase(t, schedule);
    (TAU * (theta + schedule.phase_offsets[leg])).sin()
}

/// `(sin, cos)` of the shared cycle phase for the observation vector;
/// zeroed in stand-mode, where no cycle is tracked.
pub fn cyclic_observation(t: f64, schedule: &GaitSchedule, stand: bool) -> (f64, f64) {
    if stand {
        return (0.0, 0.0);
    }
    let angle = TAU * warped_phase(t, schedule);
    (angle.sin(), angle.cos())
}
