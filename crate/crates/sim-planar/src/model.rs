//! Robot model parameters.

use serde::{Deserialize, Serialize};

use crate::SimError;

/// Mechanical joint range, enforced as hard stops by the integrator.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JointLimits {
    pub hip_min: f64,
    pub hip_max: f64,
    pub knee_min: f64,
    pub knee_max: f64,
}

impl Default for JointLimits {
    fn default() -> Self {
        Self {
            hip_min: -2.8,
            hip_max: 2.8,
            knee_min: 0.08,
            knee_max: 2.7,
        }
    }
}

/// Physical parameters of the planar quadruped.
///
/// Defaults describe a 45 kg machine with 0.35 m thigh and calf links.
/// Leg link masses are lumped into the trunk for base dynamics but still
/// generate gravity torques and effective inertias at the joints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RobotModel {
    /// Total mass carried by the base (trunk plus lumped legs), kg.
    pub body_mass: f64,
    /// Pitch-axis rotational inertia of the base, kg m^2.
    pub body_inertia: f64,
    /// Hip-to-hip distance along the trunk, m.
    pub body_length: f64,
    /// Vertical clearance radius of the trunk; trunk contact below this
    /// height over terrain is illegal.
    pub body_radius: f64,
    pub thigh_length: f64,
    pub calf_length: f64,
    /// Thigh link mass (per leg), kg.
    pub thigh_mass: f64,
    /// Calf link mass (per leg), kg.
    pub calf_mass: f64,
    /// PD proportional gain, N m / rad.
    pub kp: f64,
    /// PD derivative gain, N m s / rad.
    pub kd: f64,
    /// Actuator torque limit, N m.
    pub torque_limit: f64,
    /// Gravity, m/s^2.
    pub gravity: f64,
    /// Contact normal spring stiffness, N/m.
    pub contact_stiffness: f64,
    /// Contact normal damping, N s / m.
    pub contact_damping: f64,
    /// Tangential viscous gain before the friction-cone clamp, N s / m.
    pub tangential_damping: f64,
    pub joint_limits: JointLimits,
    /// Nominal joint posture (hip, knee) per leg, radians.
    pub nominal_hip: [f64; 4],
    pub nominal_knee: [f64; 4],
    /// Nominal base height over flat ground for resets, m.
    pub nominal_height: f64,
    /// Nominal base pitch for resets, rad.
    pub nominal_pitch: f64,
}

impl Default for RobotModel {
    fn default() -> Self {
        // Nominal crouch: foot directly below the hip at 0.59 m leg
        // extension (hip -0.5695, knee 1.1390 with 0.35 m links).
        let hip = -0.569_509_584_009_498_6;
        let knee = 1.139_019_168_018_997_2;
        Self {
            body_mass: 45.0,
            body_inertia: 2.1,
            body_length: 0.7,
            body_radius: 0.09,
            thigh_length: 0.35,
            calf_length: 0.35,
            thigh_mass: 1.5,
            calf_mass: 1.0,
            kp: 500.0,
            kd: 10.0,
            torque_limit: 120.0,
            gravity: 9.81,
            contact_stiffness: 2.0e4,
            contact_damping: 300.0,
            tangential_damping: 2.0e3,
            joint_limits: JointLimits::default(),
            nominal_hip: [hip; 4],
            nominal_knee: [knee; 4],
            nominal_height: 0.59,
            nominal_pitch: 0.0,
        }
    }
}

impl RobotModel {
    /// Effective rotational inertia of the hip joint (thigh plus calf
    /// swinging about the hip, straight-leg configuration).
    pub fn hip_inertia(&self) -> f64 {
        let lt = self.thigh_length;
        let lc = self.calf_length;
        self.thigh_mass * lt * lt / 3.0
            + self.calf_mass * (lt * lt + lt * lc + lc * lc / 3.0)
    }

    /// Effective rotational inertia of the knee joint (calf about the
    /// knee).
    pub fn knee_inertia(&self) -> f64 {
        self.calf_mass * self.calf_length * self.calf_length / 3.0
    }

    /// Hip x-offset in the body frame: front legs forward, hind legs
    /// backward. Legs are indexed (RH, LH, RF, LF).
    pub fn hip_offset_x(&self, leg: usize) -> f64 {
        if leg < 2 {
            -0.5 * self.body_length
        } else {
            0.5 * self.body_length
        }
    }

    /// True for the front pair (RF, LF).
    pub fn is_front(leg: usize) -> bool {
        leg >= 2
    }

    pub fn validate(&self) -> Result<(), SimError> {
        let positive = [
            ("body_mass", self.body_mass),
            ("body_inertia", self.body_inertia),
            ("body_length", self.body_length),
            ("thigh_length", self.thigh_length),
            ("calf_length", self.calf_length),
            ("thigh_mass", self.thigh_mass),
            ("calf_mass", self.calf_mass),
            ("kp", self.kp),
            ("torque_limit", self.torque_limit),
            ("contact_stiffness", self.contact_stiffness),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(SimError::InvalidModel(format!("{name} must be > 0, got {v}")));
            }
        }
        if self.kd < 0.0 || self.gravity < 0.0 {
            return Err(SimError::InvalidModel("kd and gravity must be >= 0".into()));
        }
        let jl = &self.joint_limits;
        if jl.hip_min >= jl.hip_max || jl.knee_min >= jl.knee_max {
            return Err(SimError::InvalidModel("joint limits must be ordered".into()));
        }
        Ok(())
    }
}
