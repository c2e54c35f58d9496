//! Spring-damper ground contact with Coulomb-clamped friction.

use crate::kinematics::FootState;
use crate::{RobotModel, Terrain, NUM_LEGS};

/// Per-foot contact snapshot for one physics step.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ContactState {
    pub in_contact: [bool; NUM_LEGS],
    /// Normal (vertical) force on each foot, N; zero out of contact.
    pub normal_force: [f64; NUM_LEGS],
    /// Tangential (horizontal) friction force on each foot, N.
    pub tangential_force: [f64; NUM_LEGS],
    /// Trunk or thigh touching the terrain.
    pub illegal_contact: bool,
}

/// Contact force `(fx, fz)` on one foot.
///
/// Normal: spring on penetration, damped by the foot's vertical speed,
/// clamped to be non-adhesive. Tangential: viscous resistance to sliding,
/// clamped to the friction cone `|ft| <= mu * N`.
pub(crate) fn foot_contact_force(
    model: &RobotModel,
    terrain: &Terrain,
    foot: &FootState,
) -> ([f64; 2], bool) {
    let ground = terrain.height(foot.pos[0]);
    let penetration = ground - foot.pos[1];
    if penetration <= 0.0 {
        return ([0.0, 0.0], false);
    }
    let normal =
        (model.contact_stiffness * penetration - model.contact_damping * foot.vel[1]).max(0.0);
    if normal == 0.0 {
        return ([0.0, 0.0], false);
    }
    let cone = terrain.friction() * normal;
    let tangential = (-model.tangential_damping * foot.vel[0]).clamp(-cone, cone);
    ([tangential, normal], true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn foot(pos: [f64; 2], vel: [f64; 2]) -> FootState {
        FootState {
            pos,
            vel,
            ..Default::default()
        }
    }

    #[test]
    fn no_force_above_ground() {
        let model = RobotModel::default();
        let terrain = Terrain::flat(0.7);
        let (f, touching) = foot_contact_force(&model, &terrain, &foot([0.0, 0.01], [0.0, -1.0]));
        assert_eq!(f, [0.0, 0.0]);
        assert!(!touching);
    }

    #[test]
    fn static_penetration_force() {
        let model = RobotModel::default();
        let terrain = Terrain::flat(0.7);
        let (f, touching) = foot_contact_force(&model, &terrain, &foot([0.0, -0.005], [0.0, 0.0]));
        assert!(touching);
        assert_eq!(f[1], 100.0);
        assert_eq!(f[0], 0.0);
    }

    #[test]
    fn separation_cannot_pull() {
        let model = RobotModel::default();
        let terrain = Terrain::flat(0.7);
        // Rapidly separating foot: damping would exceed the spring force.
        let (f, touching) = foot_contact_force(&model, &terrain, &foot([0.0, -0.001], [0.0, 1.0]));
        assert_eq!(f[1], 0.0);
        assert!(!touching);
    }

    #[test]
    fn friction_clamped_to_cone() {
        let model = RobotModel::default();
        let terrain = Terrain::flat(0.7);
        let (f, _) = foot_contact_force(&model, &terrain, &foot([0.0, -0.005], [2.0, 0.0]));
        assert_eq!(f[0], -0.7 * f[1]);
        let (f, _) = foot_contact_force(&model, &terrain, &foot([0.0, -0.005], [-0.001, 0.0]));
        assert_eq!(f[0], model.tangential_damping * 0.001);
    }
}
