//! Property tests for the relaxed barrier: continuity at the branch
//! switch, gradient/finite-difference agreement, monotonicity, and the
//! shape of the weighted constraint term.

use barrier_core::{relaxed_barrier, relaxed_barrier_grad, ConstraintSpec};
use proptest::prelude::*;

const DELTAS: [f64; 4] = [0.01, 0.1, 0.3, 2.0];

/// The two branch formulas, evaluated independently of the dispatch in
/// `relaxed_barrier`, for isolating the jump at the switch point.
fn log_branch(z: f64) -> f64 {
    z.ln()
}
fn quad_branch(z: f64, delta: f64) -> f64 {
    let u = (z - 2.0 * delta) / delta;
    delta.ln() - 0.5 * (u * u - 1.0)
}

#[test]
fn value_continuous_at_branch_switch() {
    // The raw two-sided difference B(d+e) - B(d-e) is dominated by the
    // slope 1/delta (~2e/delta, i.e. 2e-6 at delta=0.01), so the jump is
    // measured as the disagreement between the two branch formulas around
    // the switch point; a discontinuous definition would show up there.
    let eps = 1e-8;
    for &delta in &DELTAS {
        for z in [delta - eps, delta, delta + eps] {
            let jump = (log_branch(z) - quad_branch(z, delta)).abs();
            assert!(jump < 1e-6, "branch mismatch {jump} at z={z}, delta={delta}");
        }
        // And the two-sided difference itself shrinks at the slope rate.
        let above = relaxed_barrier(delta + eps, delta).unwrap();
        let below = relaxed_barrier(delta - eps, delta).unwrap();
        assert!((above - below).abs() <= 2.5 * eps / delta, "delta={delta}");
    }
}

#[test]
fn gradient_continuous_at_branch_switch() {
    let eps = 1e-8;
    for &delta in &DELTAS {
        let above = relaxed_barrier_grad(delta + eps, delta).unwrap();
        let below = relaxed_barrier_grad(delta - eps, delta).unwrap();
        assert!((above - below).abs() < 1e-5 / delta, "delta={delta}");
        // Both branches evaluate to 1/delta at the switch point.
        let at = relaxed_barrier_grad(delta, delta).unwrap();
        let expect = 1.0 / delta;
        assert!(
            ((at - expect) / expect).abs() < 1e-12,
            "grad at switch {at} vs {expect}"
        );
    }
}

#[test]
fn gradient_matches_central_finite_differences() {
    let h = 1e-6;
    for &delta in &DELTAS {
        for i in 0..=600 {
            let z = -3.0 + i as f64 * 0.01;
            let analytic = relaxed_barrier_grad(z, delta).unwrap();
            let plus = relaxed_barrier(z + h, delta).unwrap();
            let minus = relaxed_barrier(z - h, delta).unwrap();
            let numeric = (plus - minus) / (2.0 * h);
            let rel = (analytic - numeric).abs() / analytic.abs().max(1e-12);
            assert!(
                rel < 1e-5,
                "z={z} delta={delta}: analytic {analytic} vs fd {numeric} (rel {rel})"
            );
        }
    }
}

proptest! {
    #[test]
    fn strictly_increasing_in_z(
        z in -50.0f64..50.0,
        step in 1e-4f64..1.0,
        delta_idx in 0usize..4,
    ) {
        let delta = DELTAS[delta_idx];
        let lo = relaxed_barrier(z, delta).unwrap();
        let hi = relaxed_barrier(z + step, delta).unwrap();
        prop_assert!(hi > lo, "B({z})={lo} !< B({})={hi}", z + step);
    }

    #[test]
    fn smaller_delta_penalizes_violations_more(
        z in -10.0f64..-1e-3,
        d1 in 0.02f64..2.0,
        shrink in 0.05f64..0.95,
    ) {
        let d2 = d1 * shrink;
        let loose = relaxed_barrier(z, d1).unwrap();
        let tight = relaxed_barrier(z, d2).unwrap();
        prop_assert!(tight < loose, "B({z};{d2})={tight} !< B({z};{d1})={loose}");
    }
}

#[test]
fn constraint_term_peaks_inside_bounds_and_decays_outside() {
    let spec = ConstraintSpec::two_sided("c", -1.0, 1.0, 0.1, 0.1).unwrap();
    let term = |c: f64| spec.sample(c).term();

    // Interior maximum: scan a grid spanning well past both bounds.
    let grid: Vec<f64> = (0..=400).map(|i| -2.0 + i as f64 * 0.01).collect();
    let (argmax, _) = grid
        .iter()
        .map(|&c| (c, term(c)))
        .fold((f64::NAN, f64::NEG_INFINITY), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        });
    assert!(
        argmax > spec.d_lower && argmax < spec.d_upper,
        "peak at {argmax} lies outside the bounds"
    );

    // Monotone decay once C exits either bound.
    for i in 0..100 {
        let c = 1.0 + i as f64 * 0.05;
        assert!(term(c + 0.05) < term(c), "not decreasing above upper at {c}");
        assert!(term(-c - 0.05) < term(-c), "not decreasing below lower at {c}");
    }
}
