//! Classical trajectories, the comoving coordinates (Q, P), and the
//! action-angle map with its Poisson-bracket canonicity check.

use crate::error::{Error, Result};
use crate::params::{System, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub q: f64,
    pub p: f64,
    pub t: f64,
}

/// Analytic solution of Hamilton's equations from (q0, p0) at t = 0.
pub fn classical_trajectory(params: &SystemParams, q0: f64, p0: f64, t: f64) -> PhasePoint {
    let m = params.mass;
    match params.system {
        System::Free => PhasePoint { q: q0 + p0 * t / m, p: p0, t },
        System::Harmonic { omega } => {
            let (s, c) = (omega * t).sin_cos();
            PhasePoint {
                q: q0 * c + p0 / (m * omega) * s,
                p: -m * omega * q0 * s + p0 * c,
                t,
            }
        }
    }
}

/// Classic 4th-order Runge-Kutta integration of Hamilton's equations,
/// the independent oracle for the analytic trajectories.
pub fn rk4_trajectory(params: &SystemParams, q0: f64, p0: f64, t: f64, dt: f64) -> PhasePoint {
    let m = params.mass;
    let force = |q: f64| -> f64 {
        match params.system {
            System::Free => 0.0,
            System::Harmonic { omega } => -m * omega * omega * q,
        }
    };
    let n = (t.abs() / dt).ceil().max(1.0) as usize;
    let h = t / n as f64;
    let (mut q, mut p) = (q0, p0);
    for _ in 0..n {
        let (k1q, k1p) = (p / m, force(q));
        let (k2q, k2p) = ((p + 0.5 * h * k1p) / m, force(q + 0.5 * h * k1q));
        let (k3q, k3p) = ((p + 0.5 * h * k2p) / m, force(q + 0.5 * h * k2q));
        let (k4q, k4p) = ((p + h * k3p) / m, force(q + h * k3q));
        q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
    PhasePoint { q, p, t }
}

/// The comoving coordinates: classical counterparts of the transformed
/// operators. Q(q,p,0) = q, P(q,p,0) = p, and both are constants of motion.
pub fn moving_coordinates(params: &SystemParams, q: f64, p: f64, t: f64) -> (f64, f64) {
    let m = params.mass;
    match params.system {
        System::Free => (q - p * t / m, p),
        System::Harmonic { omega } => {
            let (s, c) = (omega * t).sin_cos();
            (q * c - p / (m * omega) * s, m * omega * q * s + p * c)
        }
    }
}

/// Max drift of (Q, P) from (q0, p0) along a trajectory; `integrated`
/// switches between the analytic orbit and the RK4 oracle.
pub fn frame_constancy_residual(
    params: &SystemParams,
    q0: f64,
    p0: f64,
    times: &[f64],
    integrated: Option<f64>,
) -> f64 {
    let mut worst: f64 = 0.0;
    for &t in times {
        let pt = match integrated {
            Some(dt) => rk4_trajectory(params, q0, p0, t, dt),
            None => classical_trajectory(params, q0, p0, t),
        };
        let (qq, pp) = moving_coordinates(params, pt.q, pt.p, t);
        worst = worst.max((qq - q0).abs()).max((pp - p0).abs());
    }
    worst
}

/// Relative energy drift along an RK4 orbit.
pub fn energy_drift(params: &SystemParams, q0: f64, p0: f64, times: &[f64], dt: f64) -> f64 {
    let e = |q: f64, p: f64| 0.5 * p * p / params.mass + params.potential(q);
    let e0 = e(q0, p0);
    let mut worst: f64 = 0.0;
    for &t in times {
        let pt = rk4_trajectory(params, q0, p0, t, dt);
        worst = worst.max((e(pt.q, pt.p) - e0).abs());
    }
    worst / e0.abs().max(1e-300)
}

/// Action-angle map for the oscillator: `Q = atan2(m w q, p)/w - t`,
/// `P = p^2/2m + m w^2 q^2 / 2` (the energy). Branch by the two-argument
/// arctangent; callers keep |p| away from 0 or track continuity themselves.
pub fn action_angle(params: &SystemParams, q: f64, p: f64, t: f64) -> Result<(f64, f64)> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("action-angle map needs an oscillator".into()))?;
    let m = params.mass;
    let qq = (m * omega * q).atan2(p) / omega - t;
    let pp = 0.5 * p * p / m + 0.5 * m * omega * omega * q * q;
    Ok((qq, pp))
}

/// `{Q, P}_{q,p}` for the action-angle map by central differences.
pub fn action_angle_bracket(params: &SystemParams, q: f64, p: f64, t: f64, h: f64) -> Result<f64> {
    let f = |q: f64, p: f64| action_angle(params, q, p, t);
    let dq_q = (f(q + h, p)?.0 - f(q - h, p)?.0) / (2.0 * h);
    let dq_p = (f(q, p + h)?.0 - f(q, p - h)?.0) / (2.0 * h);
    let dp_q = (f(q + h, p)?.1 - f(q - h, p)?.1) / (2.0 * h);
    let dp_p = (f(q, p + h)?.1 - f(q, p - h)?.1) / (2.0 * h);
    Ok(dq_q * dp_p - dq_p * dp_q)
}

/// Max drift of the action-angle (Q, P) along an orbit. The angle is
/// compared modulo its natural period `2 pi / w` to bridge branch crossings.
pub fn action_angle_constancy_residual(
    params: &SystemParams,
    q0: f64,
    p0: f64,
    times: &[f64],
) -> Result<f64> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("action-angle map needs an oscillator".into()))?;
    let period = 2.0 * std::f64::consts::PI / omega;
    let (qq0, pp0) = action_angle(params, q0, p0, 0.0)?;
    let mut worst: f64 = 0.0;
    for &t in times {
        let pt = classical_trajectory(params, q0, p0, t);
        let (qq, pp) = action_angle(params, pt.q, pt.p, t)?;
        let mut dq = (qq - qq0) % period;
        if dq > 0.5 * period {
            dq -= period;
        }
        if dq < -0.5 * period {
            dq += period;
        }
        worst = worst.max(dq.abs()).max((pp - pp0).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn ho() -> SystemParams {
        SystemParams::harmonic(1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn free_comoving_coordinate_is_the_launch_point() {
        let params = SystemParams::free(1.0, 1.0).unwrap();
        let pt = classical_trajectory(&params, 0.0, 1.0, 2.0);
        assert_eq!(pt.q, 2.0);
        let (qq, pp) = moving_coordinates(&params, pt.q, pt.p, 2.0);
        assert!(qq.abs() < 1e-14 && (pp - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rk4_tracks_the_analytic_orbit() {
        let params = ho();
        for t in [0.7, 2.0, 2.0 * PI] {
            let a = classical_trajectory(&params, 1.0, 0.0, t);
            let b = rk4_trajectory(&params, 1.0, 0.0, t, 1e-3);
            assert!((a.q - b.q).abs() < 1e-10 && (a.p - b.p).abs() < 1e-10);
        }
        let times: Vec<f64> = (1..=20).map(|j| 0.3 * j as f64).collect();
        assert!(energy_drift(&params, 1.0, 0.0, &times, 1e-3) < 1e-10);
    }

    #[test]
    fn comoving_coordinates_are_constants_of_motion() {
        let times: Vec<f64> = (1..=20).map(|j| 0.25 * j as f64).collect();
        for params in [SystemParams::free(2.0, 0.7).unwrap(), ho()] {
            let r = frame_constancy_residual(&params, 1.0, 0.4, &times, None);
            assert!(r < 1e-10, "analytic drift {r}");
            let r = frame_constancy_residual(&params, 1.0, 0.4, &times, Some(1e-3));
            assert!(r < 1e-8, "integrated drift {r}");
        }
    }

    #[test]
    fn action_angle_values_and_bracket() {
        let params = ho();
        let (_, pp) = action_angle(&params, 1.0, 1.0, 0.0).unwrap();
        assert!((pp - 1.0).abs() < 1e-14);
        let b = action_angle_bracket(&params, 1.0, 1.0, 0.0, 1e-5).unwrap();
        assert!((b - 1.0).abs() < 1e-6, "bracket {b}");
        // quarter period from (1,0): q=0, p=-1; angle keeps P = 1/2
        let pt = classical_trajectory(&params, 1.0, 0.0, FRAC_PI_2);
        let (_, pp) = action_angle(&params, pt.q, pt.p, FRAC_PI_2).unwrap();
        assert!((pp - 0.5).abs() < 1e-14);
    }

    #[test]
    fn action_angle_is_constant_along_orbits() {
        let params = ho();
        let times: Vec<f64> = (1..=40).map(|j| 0.2 * j as f64).collect();
        let r = action_angle_constancy_residual(&params, 1.0, 0.0, &times).unwrap();
        assert!(r < 1e-8, "drift {r}");
    }
}
