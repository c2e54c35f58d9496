//! Gait encoding for legged locomotion rewards.
//!
//! A preferred gait is described by a periodic phase signal per leg. Each
//! leg's cycle function `g_i(t) = sin(2*pi*(theta(t) + phi_i))` is positive
//! during the stance half-phase and negative during swing; a lower bound
//! `d_gait` on the derived contact constraint variable leaves a tunable
//! margin in which the policy may shift stance/swing boundaries without
//! penalty. Foot clearance is enforced only while swing is mandatory.
//!
//! Leg indexing follows (RH, LH, RF, LF) = (0, 1, 2, 3).

mod constraint;
mod mode;
mod phase;
mod schedule;
mod strides;

pub use constraint::{clearance_constraint, contact_constraint, ClearanceSpec};
pub use mode::{apply_mode_overrides, GaitMode, ModeAdjusted};
pub use phase::{cyclic_observation, gait_phase, warped_phase};
pub use schedule::{make_gait, stance_bounds, stance_time_for_speed, GaitPreset, GaitSchedule};
pub use strides::{contact_runs, debounce_contacts, ContactRun};

use thiserror::Error;

pub const NUM_LEGS: usize = 4;

/// Leg names in index order, used for log headers and reports.
pub const LEG_NAMES: [&str; NUM_LEGS] = ["RH", "LH", "RF", "LF"];

#[derive(Debug, Error, PartialEq)]
pub enum GaitError {
    #[error("invalid gait schedule: {0}")]
    InvalidSchedule(String),
    #[error("command speed must be > 0, got {0}")]
    InvalidSpeed(f64),
    #[error("gait preset requires a command speed")]
    MissingSpeed,
    #[error("terrain samples must be non-empty while swing is enforced")]
    EmptyTerrainSamples,
    #[error("leg index {0} out of range (4 legs)")]
    LegIndexOutOfRange(usize),
}
