//! Seeded sample-based checks tying the classical construction together.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hamilton_jacobi::classical::{action_angle_bracket, moving_coordinates};
use crate::hamilton_jacobi::generating::GeneratingFunction;
use crate::params::{Representation, System, SystemParams};

/// In-domain time range for a generating function: away from every
/// prefactor singularity by a fixed margin.
fn time_range(gf: &GeneratingFunction) -> (f64, f64) {
    match (gf.params.system, gf.representation) {
        (System::Free, Representation::PositionQ) => (0.05, 2.5),
        (System::Free, Representation::MomentumP) => (0.0, 2.5),
        (System::Harmonic { omega }, Representation::PositionQ) => {
            (0.1 / omega, (std::f64::consts::PI - 0.1) / omega)
        }
        (System::Harmonic { omega }, Representation::MomentumP) => {
            (0.0, (std::f64::consts::FRAC_PI_2 - 0.1) / omega)
        }
    }
}

/// Max |HJ residual| over `count` seeded in-domain points.
pub fn hj_residual_check(gf: &GeneratingFunction, count: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (t_lo, t_hi) = time_range(gf);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let q = rng.gen_range(-3.0..3.0);
        let b = rng.gen_range(-3.0..3.0);
        let t = rng.gen_range(t_lo..t_hi);
        worst = worst.max(gf.hj_residual(q, b, t)?.abs());
    }
    Ok(worst)
}

/// Max relative gap between analytic F and the finite-difference
/// `(1/2m) d2W/dq2` over seeded in-domain times.
pub fn f_consistency_check(gf: &GeneratingFunction, count: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (t_lo, t_hi) = time_range(gf);
    // W is quadratic in q, so the second difference has no truncation error;
    // a coarse step just suppresses rounding noise
    let h = 1e-2;
    let m = gf.params.mass;
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let q = rng.gen_range(-2.0..2.0);
        let b = rng.gen_range(-2.0..2.0);
        let t = rng.gen_range(t_lo..t_hi);
        let fd = (gf.w(q + h, b, t)? - 2.0 * gf.w(q, b, t)? + gf.w(q - h, b, t)?) / (h * h);
        let analytic = gf.d2w_dq2(t)? / (2.0 * m);
        worst = worst.max((fd / (2.0 * m) - analytic).abs() / (1.0 + analytic.abs()));
    }
    Ok(worst)
}

/// Solve `f(x) = target` by Newton with a numerical derivative.
fn newton_solve(f: impl Fn(f64) -> Result<f64>, target: f64, x0: f64) -> Result<f64> {
    let mut x = x0;
    let h = 1e-6;
    for _ in 0..60 {
        let fx = f(x)? - target;
        if fx.abs() < 1e-13 {
            return Ok(x);
        }
        let d = (f(x + h)? - f(x - h)?) / (2.0 * h);
        x -= fx / d;
    }
    Ok(x)
}

/// Eliminate Q from W(q,Q,t) via `P = -dW/dQ` (Newton on the closed form)
/// and compare `W(q,Q*,t) + Q* P` against the closed-form W(q,P,t).
/// Returns the max residual over seeded (q, P, t).
pub fn legendre_transform_check(params: &SystemParams, count: usize, seed: u64) -> Result<f64> {
    let pos = GeneratingFunction::new(Representation::PositionQ, *params);
    let mom = GeneratingFunction::new(Representation::MomentumP, *params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // times valid for both forms
    let (a_lo, a_hi) = time_range(&pos);
    let (b_lo, b_hi) = time_range(&mom);
    let (t_lo, t_hi) = (a_lo.max(b_lo).max(0.05), a_hi.min(b_hi));
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let q = rng.gen_range(-2.0..2.0);
        let p_big = rng.gen_range(-2.0..2.0);
        let t = rng.gen_range(t_lo..t_hi);
        let q_star = newton_solve(|x| Ok(-pos.dw_db(q, x, t)?), p_big, 0.0)?;
        let lhs = pos.w(q, q_star, t)? + q_star * p_big;
        let rhs = mom.w(q, p_big, t)?;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// From `p = dW/dq`, `P = -dW/dQ`, recover Q(q,p,t) and P(q,p,t) and
/// compare against the closed-form comoving coordinates.
pub fn canonical_derivative_check(params: &SystemParams, count: usize, seed: u64) -> Result<f64> {
    let pos = GeneratingFunction::new(Representation::PositionQ, *params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (t_lo, t_hi) = time_range(&pos);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let q = rng.gen_range(-2.0..2.0);
        let p = rng.gen_range(-2.0..2.0);
        let t = rng.gen_range(t_lo.max(0.05)..t_hi);
        // invert p = dW/dq(q, Q, t) for Q (linear in Q, Newton converges fast)
        let q_star = newton_solve(|x| pos.dw_dq(q, x, t), p, q)?;
        let p_star = -pos.dw_db(q, q_star, t)?;
        let (qq, pp) = moving_coordinates(params, q, p, t);
        worst = worst.max((q_star - qq).abs()).max((p_star - pp).abs());
    }
    Ok(worst)
}

/// `max |{Q,P} - 1|` for the action-angle map over seeded points with
/// |p| >= p_floor; returns (residual, skipped-point count).
pub fn action_angle_bracket_check(
    params: &SystemParams,
    count: usize,
    seed: u64,
    h: f64,
    p_floor: f64,
) -> Result<(f64, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut skipped = 0usize;
    let mut accepted = 0usize;
    while accepted < count {
        let q: f64 = rng.gen_range(-2.0..2.0);
        let p: f64 = rng.gen_range(-2.0..2.0);
        if p.abs() < p_floor {
            skipped += 1;
            continue;
        }
        let t = rng.gen_range(0.0..2.0);
        let b = action_angle_bracket(params, q, p, t, h)?;
        worst = worst.max((b - 1.0).abs());
        accepted += 1;
    }
    Ok((worst, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerances;

    fn systems() -> Vec<SystemParams> {
        vec![
            SystemParams::free(1.0, 1.0).unwrap(),
            SystemParams::harmonic(1.0, 1.0, 1.0).unwrap(),
            SystemParams::harmonic(2.0, 0.5, 0.7).unwrap(),
        ]
    }

    #[test]
    fn hj_residual_vanishes_at_a_thousand_points() {
        for params in systems() {
            for rep in [Representation::PositionQ, Representation::MomentumP] {
                let gf = GeneratingFunction::new(rep, params);
                let r = hj_residual_check(&gf, 1000, 7).unwrap();
                assert!(r < tolerances::HJ_RESIDUAL, "{gf:?}: {r}");
            }
        }
    }

    #[test]
    fn f_matches_the_finite_difference_curvature() {
        for params in systems() {
            for rep in [Representation::PositionQ, Representation::MomentumP] {
                let gf = GeneratingFunction::new(rep, params);
                let r = f_consistency_check(&gf, 100, 11).unwrap();
                assert!(r < tolerances::F_CONSISTENCY, "{gf:?}: {r}");
            }
        }
    }

    #[test]
    fn legendre_transform_links_the_two_forms() {
        for params in systems() {
            let r = legendre_transform_check(&params, 100, 13).unwrap();
            assert!(r < tolerances::LEGENDRE, "{params:?}: {r}");
        }
    }

    #[test]
    fn generating_function_partials_recover_the_comoving_coordinates() {
        for params in systems() {
            let r = canonical_derivative_check(&params, 100, 17).unwrap();
            assert!(r < tolerances::CANONICAL_DERIVATIVE, "{params:?}: {r}");
        }
        // spot values: free (q,p,t) = (1,2,0.5) -> Q = 0, P = 2
        let free = SystemParams::free(1.0, 1.0).unwrap();
        let (qq, pp) = moving_coordinates(&free, 1.0, 2.0, 0.5);
        assert!(qq.abs() < 1e-14 && (pp - 2.0).abs() < 1e-14);
    }

    #[test]
    fn action_angle_map_is_canonical() {
        let params = SystemParams::harmonic(1.0, 1.0, 1.0).unwrap();
        let (r, _) = action_angle_bracket_check(
            &params,
            100,
            19,
            tolerances::BRACKET_FD_STEP,
            0.1,
        )
        .unwrap();
        assert!(r < tolerances::ACTION_ANGLE_BRACKET, "bracket residual {r}");
    }
}
