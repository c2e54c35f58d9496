//! Planar forward kinematics and foot Jacobians.
//!
//! Joint angles are measured relative to the body's "down" direction:
//! a zero hip and knee leaves the leg pointing straight down in the body
//! frame. Positive pitch rotates the body counterclockwise in the (x, z)
//! plane (nose up). Joints are stored hip-first per leg:
//! `q[2*leg]` = hip, `q[2*leg + 1]` = knee.

use crate::sim::RobotState;
use crate::{RobotModel, NUM_LEGS};

/// World-frame kinematic state of one foot.
#[derive(Clone, Copy, Debug, Default)]
pub struct FootState {
    pub pos: [f64; 2],
    pub vel: [f64; 2],
    pub knee_pos: [f64; 2],
    /// d(foot)/d(hip), d(foot)/d(knee): columns of the 2x2 Jacobian.
    pub jac_hip: [f64; 2],
    pub jac_knee: [f64; 2],
}

pub(crate) fn rotate(angle: f64, v: [f64; 2]) -> [f64; 2] {
    let (s, c) = angle.sin_cos();
    [v[0] * c - v[1] * s, v[0] * s + v[1] * c]
}

/// Full kinematics (positions, velocities, Jacobians) for all four feet.
pub fn foot_kinematics(state: &RobotState, model: &RobotModel) -> [FootState; NUM_LEGS] {
    let mut feet = [FootState::default(); NUM_LEGS];
    let pitch = state.pitch;
    let omega = state.pitch_rate;
    let lt = model.thigh_length;
    let lc = model.calf_length;

    for leg in 0..NUM_LEGS {
        let q_hip = state.q[2 * leg];
        let q_knee = state.q[2 * leg + 1];
        let qd_hip = state.qd[2 * leg];
        let qd_knee = state.qd[2 * leg + 1];

        let hip_body = [model.hip_offset_x(leg), 0.0];
        let hip_arm = rotate(pitch, hip_body);
        let hip = [state.base_pos[0] + hip_arm[0], state.base_pos[1] + hip_arm[1]];

        let a1 = q_hip + pitch;
        let a2 = q_hip + q_knee + pitch;
        let (s1, c1) = a1.sin_cos();
        let (s2, c2) = a2.sin_cos();

        let knee = [hip[0] + lt * s1, hip[1] - lt * c1];
        let foot = [knee[0] + lc * s2, knee[1] - lc * c2];

        // Velocity: base translation, base rotation of the whole chain,
        // and joint rates.
        let r_hip = [-hip_arm[1], hip_arm[0]];
        let rate1 = qd_hip + omega;
        let rate2 = qd_hip + qd_knee + omega;
        let vel = [
            state.base_vel[0] + omega * r_hip[0] + lt * rate1 * c1 + lc * rate2 * c2,
            state.base_vel[1] + omega * r_hip[1] + lt * rate1 * s1 + lc * rate2 * s2,
        ];

        feet[leg] = FootState {
            pos: foot,
            vel,
            knee_pos: knee,
            jac_hip: [lt * c1 + lc * c2, lt * s1 + lc * s2],
            jac_knee: [lc * c2, lc * s2],
        };
    }
    feet
}

/// Foot world positions only.
pub fn foot_positions(state: &RobotState, model: &RobotModel) -> [[f64; 2]; NUM_LEGS] {
    foot_kinematics(state, model).map(|f| f.pos)
}

/// Gravity torques on (hip, knee) of one leg from the lumped link masses.
pub(crate) fn gravity_torques(
    model: &RobotModel,
    pitch: f64,
    q_hip: f64,
    q_knee: f64,
) -> (f64, f64) {
    let g = model.gravity;
    let lt = model.thigh_length;
    let lc = model.calf_length;
    let s1 = (q_hip + pitch).sin();
    let s2 = (q_hip + q_knee + pitch).sin();
    let tau_hip = -g
        * (model.thigh_mass * 0.5 * lt * s1 + model.calf_mass * (lt * s1 + 0.5 * lc * s2));
    let tau_knee = -g * model.calf_mass * 0.5 * lc * s2;
    (tau_hip, tau_knee)
}

/// Gravitational potential energy of one leg's links, world frame.
pub(crate) fn leg_potential(
    model: &RobotModel,
    hip_z: f64,
    pitch: f64,
    q_hip: f64,
    q_knee: f64,
) -> f64 {
    let lt = model.thigh_length;
    let lc = model.calf_length;
    let c1 = (q_hip + pitch).cos();
    let c2 = (q_hip + q_knee + pitch).cos();
    let z_thigh = hip_z - 0.5 * lt * c1;
    let z_calf = hip_z - lt * c1 - 0.5 * lc * c2;
    model.gravity * (model.thigh_mass * z_thigh + model.calf_mass * z_calf)
}
