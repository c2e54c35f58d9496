//! The simulator: state, dynamics step, and termination detection.

use serde::{Deserialize, Serialize};

use crate::contact::foot_contact_force;
use crate::kinematics::{foot_kinematics, gravity_torques, leg_potential, rotate};
use crate::{ContactState, RobotModel, SimError, Terrain, NUM_JOINTS, NUM_LEGS};

/// Full planar rigid-body state. Joints are stored hip-first per leg in
/// (RH, LH, RF, LF) order: `q[2*leg]` = hip, `q[2*leg+1]` = knee.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RobotState {
    pub base_pos: [f64; 2],
    pub pitch: f64,
    pub base_vel: [f64; 2],
    pub pitch_rate: f64,
    pub q: [f64; NUM_JOINTS],
    pub qd: [f64; NUM_JOINTS],
    pub t: f64,
}

impl RobotState {
    pub fn is_finite(&self) -> bool {
        self.base_pos.iter().all(|v| v.is_finite())
            && self.pitch.is_finite()
            && self.base_vel.iter().all(|v| v.is_finite())
            && self.pitch_rate.is_finite()
            && self.q.iter().all(|v| v.is_finite())
            && self.qd.iter().all(|v| v.is_finite())
    }
}

/// Episode-ending contact: anything but calves and feet touching terrain.
pub fn check_termination(contact: &ContactState) -> bool {
    contact.illegal_contact
}

/// Single-owner simulator instance; independent instances can run on
/// separate workers.
#[derive(Clone, Debug)]
pub struct Simulator {
    model: RobotModel,
    terrain: Terrain,
    state: RobotState,
    fixed_base: bool,
}

impl Simulator {
    pub fn new(model: RobotModel, terrain: Terrain) -> Result<Self, SimError> {
        model.validate()?;
        let state = nominal_state(&model, &terrain);
        Ok(Self {
            model,
            terrain,
            state,
            fixed_base: false,
        })
    }

    pub fn model(&self) -> &RobotModel {
        &self.model
    }

    pub fn model_mut(&mut self) -> &mut RobotModel {
        &mut self.model
    }

    pub fn terrain(&self) -> &Terrain {
        &self.terrain
    }

    pub fn terrain_mut(&mut self) -> &mut Terrain {
        &mut self.terrain
    }

    pub fn state(&self) -> &RobotState {
        &self.state
    }

    pub fn set_state(&mut self, state: RobotState) {
        self.state = state;
    }

    /// Pins the base in place (test fixture for isolated leg dynamics).
    pub fn set_fixed_base(&mut self, fixed: bool) {
        self.fixed_base = fixed;
    }

    /// Resets to the nominal crouch over the terrain origin.
    pub fn reset_nominal(&mut self) {
        self.state = nominal_state(&self.model, &self.terrain);
    }

    /// PD torques toward `targets`, clamped to the actuator limit.
    pub fn pd_torques(&self, targets: &[f64; NUM_JOINTS]) -> [f64; NUM_JOINTS] {
        let mut tau = [0.0; NUM_JOINTS];
        for j in 0..NUM_JOINTS {
            let raw = self.model.kp * (targets[j] - self.state.q[j]) - self.model.kd * self.state.qd[j];
            tau[j] = raw.clamp(-self.model.torque_limit, self.model.torque_limit);
        }
        tau
    }

    /// One physics substep under PD position control.
    pub fn step(&mut self, targets: &[f64; NUM_JOINTS], dt: f64) -> Result<ContactState, SimError> {
        if targets.iter().any(|v| !v.is_finite()) {
            return Err(SimError::NonFiniteTargets);
        }
        let tau = self.pd_torques(targets);
        self.step_with_torques(&tau, dt)
    }

    /// One physics substep under raw actuator torques (clamped to the
    /// torque limit). Semi-implicit Euler: velocities first, positions
    /// from the updated velocities.
    pub fn step_with_torques(
        &mut self,
        torques: &[f64; NUM_JOINTS],
        dt: f64,
    ) -> Result<ContactState, SimError> {
        if !(dt > 0.0 && dt <= 0.005) {
            return Err(SimError::InvalidTimestep(dt));
        }
        let model = &self.model;
        let limit = model.torque_limit;
        let feet = foot_kinematics(&self.state, model);

        let mut contact = ContactState::default();
        let mut force_total = [0.0; 2];
        let mut torque_total = 0.0;
        let mut joint_acc = [0.0; NUM_JOINTS];

        for leg in 0..NUM_LEGS {
            let (f, touching) = foot_contact_force(model, &self.terrain, &feet[leg]);
            contact.in_contact[leg] = touching;
            contact.tangential_force[leg] = f[0];
            contact.normal_force[leg] = f[1];

            force_total[0] += f[0];
            force_total[1] += f[1];
            let r = [
                feet[leg].pos[0] - self.state.base_pos[0],
                feet[leg].pos[1] - self.state.base_pos[1],
            ];
            torque_total += r[0] * f[1] - r[1] * f[0];

            // Contact force reflected into the leg's joints.
            let jtf_hip = feet[leg].jac_hip[0] * f[0] + feet[leg].jac_hip[1] * f[1];
            let jtf_knee = feet[leg].jac_knee[0] * f[0] + feet[leg].jac_knee[1] * f[1];
            let (tau_g_hip, tau_g_knee) = gravity_torques(
                model,
                self.state.pitch,
                self.state.q[2 * leg],
                self.state.q[2 * leg + 1],
            );
            let tau_hip = torques[2 * leg].clamp(-limit, limit) + tau_g_hip + jtf_hip;
            let tau_knee = torques[2 * leg + 1].clamp(-limit, limit) + tau_g_knee + jtf_knee;
            joint_acc[2 * leg] = tau_hip / model.hip_inertia();
            joint_acc[2 * leg + 1] = tau_knee / model.knee_inertia();
        }

        // Velocities from forces.
        if self.fixed_base {
            self.state.base_vel = [0.0, 0.0];
            self.state.pitch_rate = 0.0;
        } else {
            let inv_m = 1.0 / model.body_mass;
            self.state.base_vel[0] += dt * force_total[0] * inv_m;
            self.state.base_vel[1] += dt * (force_total[1] * inv_m - model.gravity);
            self.state.pitch_rate += dt * torque_total / model.body_inertia;
        }
        for j in 0..NUM_JOINTS {
            self.state.qd[j] += dt * joint_acc[j];
        }

        // Positions from the updated velocities.
        self.state.base_pos[0] += dt * self.state.base_vel[0];
        self.state.base_pos[1] += dt * self.state.base_vel[1];
        self.state.pitch += dt * self.state.pitch_rate;
        for leg in 0..NUM_LEGS {
            let jl = &model.joint_limits;
            for (j, min, max) in [
                (2 * leg, jl.hip_min, jl.hip_max),
                (2 * leg + 1, jl.knee_min, jl.knee_max),
            ] {
                self.state.q[j] += dt * self.state.qd[j];
                // Hard mechanical stops.
                if self.state.q[j] < min {
                    self.state.q[j] = min;
                    self.state.qd[j] = self.state.qd[j].max(0.0);
                } else if self.state.q[j] > max {
                    self.state.q[j] = max;
                    self.state.qd[j] = self.state.qd[j].min(0.0);
                }
            }
        }
        self.state.t += dt;

        if !self.state.is_finite() {
            return Err(SimError::Diverged { t: self.state.t });
        }

        contact.illegal_contact = self.illegal_contact();
        Ok(contact)
    }

    /// Trunk or thigh touching the terrain in the current state.
    fn illegal_contact(&self) -> bool {
        const THIGH_RADIUS: f64 = 0.02;
        let model = &self.model;
        // Trunk checked at five points along the hip-to-hip segment.
        let half = 0.5 * model.body_length;
        for i in 0..5 {
            let xb = -half + i as f64 * (half / 2.0);
            let p = rotate(self.state.pitch, [xb, 0.0]);
            let x = self.state.base_pos[0] + p[0];
            let z = self.state.base_pos[1] + p[1];
            if z - model.body_radius <= self.terrain.height(x) {
                return true;
            }
        }
        // Mid-thigh points; knee and calf contact stays legal.
        let feet = foot_kinematics(&self.state, model);
        for leg in 0..NUM_LEGS {
            let hip_arm = rotate(self.state.pitch, [model.hip_offset_x(leg), 0.0]);
            let hip = [
                self.state.base_pos[0] + hip_arm[0],
                self.state.base_pos[1] + hip_arm[1],
            ];
            let mid = [
                0.5 * (hip[0] + feet[leg].knee_pos[0]),
                0.5 * (hip[1] + feet[leg].knee_pos[1]),
            ];
            if mid[1] - THIGH_RADIUS <= self.terrain.height(mid[0]) {
                return true;
            }
        }
        false
    }

    /// Total mechanical energy of the model: base kinetic and potential
    /// plus joint-space kinetic energy and leg-link potentials. Conserved
    /// (up to integrator drift) in passive, contact-free motion.
    pub fn mechanical_energy(&self) -> f64 {
        let m = &self.model;
        let s = &self.state;
        let mut e = 0.5 * m.body_mass * (s.base_vel[0] * s.base_vel[0] + s.base_vel[1] * s.base_vel[1])
            + 0.5 * m.body_inertia * s.pitch_rate * s.pitch_rate
            + m.body_mass * m.gravity * s.base_pos[1];
        for leg in 0..NUM_LEGS {
            let qd_hip = s.qd[2 * leg];
            let qd_knee = s.qd[2 * leg + 1];
            e += 0.5 * m.hip_inertia() * qd_hip * qd_hip
                + 0.5 * m.knee_inertia() * qd_knee * qd_knee;
            let hip_arm = rotate(s.pitch, [m.hip_offset_x(leg), 0.0]);
            e += leg_potential(
                m,
                s.base_pos[1] + hip_arm[1],
                s.pitch,
                s.q[2 * leg],
                s.q[2 * leg + 1],
            );
        }
        e
    }
}

/// Nominal crouched state above the terrain origin.
pub fn nominal_state(model: &RobotModel, terrain: &Terrain) -> RobotState {
    let mut q = [0.0; NUM_JOINTS];
    for leg in 0..NUM_LEGS {
        q[2 * leg] = model.nominal_hip[leg];
        q[2 * leg + 1] = model.nominal_knee[leg];
    }
    RobotState {
        base_pos: [0.0, terrain.height(0.0) + model.nominal_height],
        pitch: model.nominal_pitch,
        base_vel: [0.0, 0.0],
        pitch_rate: 0.0,
        q,
        qd: [0.0; NUM_JOINTS],
        t: 0.0,
    }
}
