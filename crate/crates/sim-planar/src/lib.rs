//! Sagittal-plane quadruped rigid-body simulator.
//!
//! The base is a rigid trunk with three degrees of freedom (x, z, pitch);
//! each of the four legs has an actuated hip-pitch and knee joint. Leg
//! link masses are lumped into the trunk for the base dynamics, while the
//! joints integrate their own effective inertias under PD actuation,
//! gravity, and contact forces mapped through the foot Jacobian. Ground
//! contact is a spring-damper normal force with Coulomb-clamped viscous
//! friction on a heightfield terrain.
//!
//! Integration is semi-implicit Euler at a fixed physics step:
//! velocities from forces first, then positions from the new velocities.
//! Everything is double precision and strictly deterministic.

mod contact;
mod kinematics;
mod model;
mod sim;
mod terrain;

pub use contact::ContactState;
pub use kinematics::{foot_kinematics, foot_positions, FootState};
pub use model::{JointLimits, RobotModel};
pub use sim::{check_termination, nominal_state, RobotState, Simulator};
pub use terrain::{sample_heights, Terrain};

use thiserror::Error;

pub const NUM_LEGS: usize = 4;
pub const NUM_JOINTS: usize = 8;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("simulation diverged to a non-finite state at t={t}")]
    Diverged { t: f64 },
    #[error("physics timestep must lie in (0, 0.005], got {0}")]
    InvalidTimestep(f64),
    #[error("joint targets must be finite")]
    NonFiniteTargets,
    #[error("invalid robot model: {0}")]
    InvalidModel(String),
}
