//! Closed-form transformation kernels and moving-basis states.
//!
//! Phase convention: every square root is the principal branch, so the free
//! prefactor carries `1/sqrt(i) = e^{-i pi/4}` for t > 0, and the oscillator
//! position kernel is only evaluated on the caustic-free window
//! `omega t in (0, pi)` where `sin(omega t) > 0` keeps the branch continuous.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kernels::special::ho_eigenfunction;
use crate::params::{Representation, System, SystemParams};

/// Which kernel to evaluate: the system and the second index's representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    pub representation: Representation,
    pub params: SystemParams,
}

impl KernelSpec {
    pub fn position(params: SystemParams) -> Self {
        Self { representation: Representation::PositionQ, params }
    }

    pub fn momentum(params: SystemParams) -> Self {
        Self { representation: Representation::MomentumP, params }
    }

    /// Err when the prefactor is singular or the branch leaves its window.
    pub fn check_time(&self, t: f64) -> Result<()> {
        match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) => {
                if t == 0.0 {
                    return Err(Error::SingularTime {
                        t,
                        reason: "free-particle position kernel has a 1/sqrt(t) prefactor".into(),
                    });
                }
            }
            (System::Harmonic { omega }, Representation::PositionQ) => {
                let wt = omega * t;
                if wt <= 0.0 || wt >= PI {
                    return Err(Error::SingularTime {
                        t,
                        reason: format!(
                            "oscillator position kernel needs omega*t in (0, pi), got {wt}"
                        ),
                    });
                }
            }
            (System::Free, Representation::MomentumP) => {}
            (System::Harmonic { omega }, Representation::MomentumP) => {
                if (omega * t).cos().abs() < 1e-12 {
                    return Err(Error::SingularTime {
                        t,
                        reason: "oscillator momentum kernel has a 1/sqrt(cos) prefactor".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Transformation function `<q | Q; t>` (PositionQ) or `<q | P; t>`
/// (MomentumP) as a closed form.
pub fn kernel(spec: &KernelSpec, q: f64, b: f64, t: f64) -> Result<C64> {
    spec.check_time(t)?;
    let m = spec.params.mass;
    let hbar = spec.params.hbar;
    let i = C64::new(0.0, 1.0);
    Ok(match (spec.params.system, spec.representation) {
        (System::Free, Representation::PositionQ) => {
            let pref = (C64::new(m, 0.0) / (C64::new(0.0, 2.0 * PI * hbar * t))).sqrt();
            let d = q - b;
            pref * (i * (m / (2.0 * t)) * d * d / hbar).exp()
        }
        (System::Harmonic { omega }, Representation::PositionQ) => {
            let s = (omega * t).sin();
            let c = (omega * t).cos();
            let pref = (C64::new(m * omega, 0.0) / C64::new(0.0, 2.0 * PI * hbar * s)).sqrt();
            let w = (m * omega / s) * (0.5 * (q * q + b * b) * c - q * b);
            pref * (i * w / hbar).exp()
        }
        (System::Free, Representation::MomentumP) => {
            let pref = C64::new((2.0 * PI * hbar).powf(-0.5), 0.0);
            pref * (i * (q * b - b * b * t / (2.0 * m)) / hbar).exp()
        }
        (System::Harmonic { omega }, Representation::MomentumP) => {
            let c = (omega * t).cos();
            let tn = (omega * t).tan();
            let pref = C64::new(2.0 * PI * hbar * c, 0.0).sqrt().inv();
            let w = q * b / c - (0.5 * m * omega * omega * q * q + b * b / (2.0 * m)) * tn / omega;
            pref * (i * w / hbar).exp()
        }
    })
}

/// `<Q; t | p>` for the free particle: a plane wave whose only time
/// dependence is the kinetic phase `e^{i p^2 t / 2 m hbar}`.
pub fn moving_momentum_state(params: &SystemParams, q_moving: f64, p: f64, t: f64) -> Result<C64> {
    if params.is_harmonic() {
        return Err(Error::Unsupported(
            "moving momentum state is only available for the free particle".into(),
        ));
    }
    let hbar = params.hbar;
    let phase = (q_moving * p + p * p * t / (2.0 * params.mass)) / hbar;
    Ok(C64::new((2.0 * PI * hbar).powf(-0.5), 0.0) * (C64::new(0.0, 1.0) * phase).exp())
}

/// `<Q; t | n>`: the static oscillator eigenfunction of Q times the
/// eigenphase `e^{i (n + 1/2) omega t}`.
pub fn moving_number_state(params: &SystemParams, q_moving: f64, n: usize, t: f64) -> Result<C64> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("number states need an oscillator".into()))?;
    let phase = (n as f64 + 0.5) * omega * t;
    Ok(C64::new(0.0, phase).exp() * ho_eigenfunction(params, q_moving, n)?)
}

/// `<Q; t | z>` for a coherent state with annihilation-operator eigenvalue z.
pub fn moving_coherent_state(params: &SystemParams, q_moving: f64, z: C64, t: f64) -> Result<C64> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("coherent states need an oscillator".into()))?;
    let m = params.mass;
    let hbar = params.hbar;
    let pref = (m * omega / (PI * hbar)).powf(0.25);
    let rot = (C64::new(0.0, omega * t)).exp();
    let exponent = C64::new(-m * omega * q_moving * q_moving / (2.0 * hbar), 0.0)
        + z * rot * (2.0 * q_moving * (m * omega / (2.0 * hbar)).sqrt())
        - z * z * rot * rot * 0.5
        - z.norm_sqr() * 0.5
        + C64::new(0.0, 0.5 * omega * t);
    Ok(pref * exponent.exp())
}

/// Coherent state by the truncated number-basis sum
/// `e^{-|z|^2/2} sum_n z^n / sqrt(n!) <Q;t|n>`; terms are dropped once their
/// magnitude falls below 1e-14 of the running scale.
pub fn coherent_state_sum(params: &SystemParams, q_moving: f64, z: C64, t: f64) -> Result<C64> {
    let mut total = C64::new(0.0, 0.0);
    let mut coeff = C64::new((-0.5 * z.norm_sqr()).exp(), 0.0);
    for n in 0..200usize {
        if n > 0 {
            coeff *= z / (n as f64).sqrt();
        }
        total += coeff * moving_number_state(params, q_moving, n, t)?;
        if n as f64 > 2.0 * z.norm() * z.norm() + 10.0 && coeff.norm() < 1e-14 {
            break;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_free() -> SystemParams {
        SystemParams::free(1.0, 1.0).unwrap()
    }

    fn unit_harmonic() -> SystemParams {
        SystemParams::harmonic(1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn free_coincident_points_give_the_branch_phase() {
        let spec = KernelSpec::position(unit_free());
        let v = kernel(&spec, 0.7, 0.7, 1.0).unwrap();
        let expect = (2.0 * PI).powf(-0.5) * C64::new(0.0, -PI / 4.0).exp();
        assert!((v - expect).norm() < 1e-14, "{v}");
        // numerically: 0.28209 - 0.28209 i
        assert!((v.re - 0.2820947917738781).abs() < 1e-12);
        assert!((v.im + 0.2820947917738781).abs() < 1e-12);
    }

    #[test]
    fn harmonic_quarter_period_reduces_to_the_prefactor() {
        let spec = KernelSpec::position(unit_harmonic());
        let expect = (2.0 * PI).powf(-0.5) * C64::new(0.0, -PI / 4.0).exp();
        let v = kernel(&spec, 0.0, 1.3, PI / 2.0).unwrap();
        // cos(wt) = 0 kills the quadratic terms; q = 0 kills the cross term
        assert!((v - expect).norm() < 1e-12);
        let v2 = kernel(&spec, -0.4, 0.0, PI / 2.0).unwrap();
        assert!((v2 - expect).norm() < 1e-12);
    }

    #[test]
    fn harmonic_kernel_tends_to_the_free_kernel_as_omega_vanishes() {
        let free = KernelSpec::position(unit_free());
        let soft = KernelSpec::position(SystemParams::harmonic(1.0, 1e-4, 1.0).unwrap());
        for (q, qq) in [(0.3, -0.2), (1.0, 1.0), (-2.0, 0.5)] {
            let a = kernel(&free, q, qq, 0.5).unwrap();
            let b = kernel(&soft, q, qq, 0.5).unwrap();
            assert!((a - b).norm() < 1e-8, "({q},{qq}): {}", (a - b).norm());
        }
    }

    #[test]
    fn singular_times_are_rejected() {
        assert!(matches!(
            kernel(&KernelSpec::position(unit_free()), 0.0, 0.0, 0.0),
            Err(Error::SingularTime { .. })
        ));
        assert!(matches!(
            kernel(&KernelSpec::position(unit_harmonic()), 0.0, 0.0, PI),
            Err(Error::SingularTime { .. })
        ));
        assert!(matches!(
            kernel(&KernelSpec::momentum(unit_harmonic()), 0.0, 0.0, PI / 2.0),
            Err(Error::SingularTime { .. })
        ));
        // free momentum kernel has no singular times
        assert!(kernel(&KernelSpec::momentum(unit_free()), 1.0, 2.0, 0.0).is_ok());
    }

    #[test]
    fn prefactor_phase_is_fixed_on_the_caustic_window() {
        // at q = Q = 0 the action vanishes and only the prefactor branch
        // remains; it must sit at -pi/4 across the whole window
        let spec = KernelSpec::position(unit_harmonic());
        for j in 1..200 {
            let t = PI * j as f64 / 200.0;
            let arg = kernel(&spec, 0.0, 0.0, t).unwrap().arg();
            assert!((arg + PI / 4.0).abs() < 1e-12, "branch phase {arg} at t = {t}");
        }
        // same branch as the free prefactor approached from t > 0
        let free = KernelSpec::position(unit_free());
        for t in [1.0, 0.1, 1e-3, 1e-6] {
            let arg = kernel(&free, 0.3, 0.3, t).unwrap().arg();
            assert!((arg + PI / 4.0).abs() < 1e-12, "free branch phase {arg} at t = {t}");
        }
    }

    #[test]
    fn momentum_state_is_a_pure_phase_and_reduces_to_a_plane_wave() {
        let params = unit_free();
        for (q, p, t) in [(0.0, 1.0, 0.3), (2.0, -0.7, 1.5), (-1.0, 0.0, 0.0)] {
            let v = moving_momentum_state(&params, q, p, t).unwrap();
            assert!((v.norm() - (2.0 * PI).powf(-0.5)).abs() < 1e-14);
        }
        let v0 = moving_momentum_state(&params, 1.2, 0.8, 0.0).unwrap();
        let plane = C64::new((2.0 * PI).powf(-0.5), 0.0) * (C64::new(0.0, 1.2 * 0.8)).exp();
        assert!((v0 - plane).norm() < 1e-14);
        assert!(moving_momentum_state(&unit_harmonic(), 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn number_state_peak_and_eigenphase() {
        let params = unit_harmonic();
        let v = moving_number_state(&params, 0.0, 0, 0.0).unwrap();
        assert!((v.re - PI.powf(-0.25)).abs() < 1e-14);
        assert!(v.im.abs() < 1e-14);
        for n in 0..=6usize {
            let t = 0.9;
            let a = moving_number_state(&params, 0.7, n, t).unwrap();
            let b = moving_number_state(&params, 0.7, n, 0.0).unwrap();
            let expect = C64::new(0.0, (n as f64 + 0.5) * t).exp();
            assert!((a / b - expect).norm() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn coherent_state_reduces_to_vacuum_and_matches_the_sum() {
        let params = unit_harmonic();
        let t = 0.6;
        for q in [-1.0, 0.0, 0.8] {
            let vac = moving_coherent_state(&params, q, C64::new(0.0, 0.0), t).unwrap();
            let n0 = moving_number_state(&params, q, 0, t).unwrap();
            assert!((vac - n0).norm() < 1e-14);
        }
        // real z at t = 0
        for q in [-2.0, 0.0, 1.5] {
            let a = moving_coherent_state(&params, q, C64::new(1.3, 0.0), 0.0).unwrap();
            let b = coherent_state_sum(&params, q, C64::new(1.3, 0.0), 0.0).unwrap();
            assert!((a - b).norm() < 1e-8, "q = {q}: {}", (a - b).norm());
        }
    }

    #[test]
    fn non_unit_constants_keep_the_closed_forms_consistent() {
        let params = SystemParams::harmonic(2.0, 0.5, 0.7).unwrap();
        let t = 0.8;
        for q in [-1.0, 0.4, 2.0] {
            let a = moving_coherent_state(&params, q, C64::new(0.9, -0.4), t).unwrap();
            let b = coherent_state_sum(&params, q, C64::new(0.9, -0.4), t).unwrap();
            assert!((a - b).norm() < 1e-8, "q = {q}: {}", (a - b).norm());
        }
    }
}
