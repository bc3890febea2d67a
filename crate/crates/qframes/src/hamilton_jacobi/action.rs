//! The complex action `S = W + i hbar int F dt` and the semiclassical
//! wavefunction `psi = exp(i S / hbar)`.
//!
//! `F = (1/2m) d2W/dq2` is q-independent because W is quadratic in q; its
//! time integral has a closed form for all four generating functions:
//! `ln sqrt(t)`, `ln sqrt(sin wt)`, `0`, `ln sqrt(cos wt)`. The constant of
//! integration is the one that makes `psi` proportional to the closed-form
//! kernel; the proportionality constant is reported, never absorbed.

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::hamilton_jacobi::generating::GeneratingFunction;
use crate::params::{Representation, System};

#[derive(Debug, Clone, Copy)]
pub struct QuantumAction {
    pub base: GeneratingFunction,
}

impl QuantumAction {
    pub fn new(base: GeneratingFunction) -> Self {
        Self { base }
    }

    /// `F(t) = (1/2m) d2W/dq2`.
    pub fn f_value(&self, t: f64) -> Result<f64> {
        Ok(self.base.d2w_dq2(t)? / (2.0 * self.base.params.mass))
    }

    /// Closed form of `int F dt` (integration constant fixed as above).
    pub fn f_integral(&self, t: f64) -> Result<f64> {
        self.base.check_time(t)?;
        Ok(match (self.base.params.system, self.base.representation) {
            (System::Free, Representation::PositionQ) => t.sqrt().ln(),
            (System::Harmonic { omega }, Representation::PositionQ) => {
                (omega * t).sin().sqrt().ln()
            }
            (System::Free, Representation::MomentumP) => 0.0,
            (System::Harmonic { omega }, Representation::MomentumP) => {
                (omega * t).cos().sqrt().ln()
            }
        })
    }

    /// `S(q, b, t) = W + i hbar int F dt`.
    pub fn action(&self, q: f64, b: f64, t: f64) -> Result<C64> {
        Ok(C64::new(
            self.base.w(q, b, t)?,
            self.base.params.hbar * self.f_integral(t)?,
        ))
    }

    /// `psi = exp(i S / hbar)`; the imaginary part of S becomes the real
    /// damping prefactor `exp(-int F dt)` (1/sqrt(t) and relatives).
    pub fn semiclassical_wavefunction(&self, q: f64, b: f64, t: f64) -> Result<C64> {
        let s = self.action(q, b, t)?;
        Ok((C64::new(0.0, 1.0) * s / self.base.params.hbar).exp())
    }

    /// Relative residual of `i hbar d(psi)/dt + (hbar^2/2m) d2(psi)/dq2 - V psi`
    /// by central differences with step h.
    pub fn se_residual(&self, q: f64, b: f64, t: f64, h: f64) -> Result<f64> {
        let hbar = self.base.params.hbar;
        let m = self.base.params.mass;
        let psi = self.semiclassical_wavefunction(q, b, t)?;
        let dt = (self.semiclassical_wavefunction(q, b, t + h)?
            - self.semiclassical_wavefunction(q, b, t - h)?)
            / (2.0 * h);
        let dqq = (self.semiclassical_wavefunction(q + h, b, t)? - psi * 2.0
            + self.semiclassical_wavefunction(q - h, b, t)?)
            / (h * h);
        let r = C64::new(0.0, hbar) * dt + dqq * (hbar * hbar / (2.0 * m))
            - psi * self.base.params.potential(q);
        Ok(r.norm() / psi.norm())
    }
}

/// Ratio kernel / psi over sample points: returns the constant (first ratio)
/// and the max relative spread. Constancy is the semiclassical statement
/// that exp(iS/hbar) is the kernel "except for the arbitrary constant".
pub fn kernel_proportionality(
    action: &QuantumAction,
    samples: &[(f64, f64, f64)],
) -> Result<(C64, f64)> {
    let spec = crate::kernels::KernelSpec {
        representation: action.base.representation,
        params: action.base.params,
    };
    let mut constant = C64::new(0.0, 0.0);
    let mut worst: f64 = 0.0;
    for (i, &(q, b, t)) in samples.iter().enumerate() {
        let ratio =
            crate::kernels::kernel(&spec, q, b, t)? / action.semiclassical_wavefunction(q, b, t)?;
        if i == 0 {
            constant = ratio;
        } else {
            worst = worst.max((ratio - constant).norm() / constant.norm());
        }
    }
    Ok((constant, worst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::SystemParams;
    use std::f64::consts::PI;

    fn action(system_harmonic: bool, rep: Representation) -> QuantumAction {
        let params = if system_harmonic {
            SystemParams::harmonic(1.0, 1.0, 1.0).unwrap()
        } else {
            SystemParams::free(1.0, 1.0).unwrap()
        };
        QuantumAction::new(GeneratingFunction::new(rep, params))
    }

    #[test]
    fn f_values_match_the_log_derivatives() {
        let a = action(false, Representation::PositionQ);
        assert!((a.f_value(2.0).unwrap() - 0.25).abs() < 1e-14);
        let a = action(false, Representation::MomentumP);
        for t in [0.1, 1.0, 7.3] {
            assert_eq!(a.f_value(t).unwrap(), 0.0);
            assert_eq!(a.f_integral(t).unwrap(), 0.0);
        }
        let a = action(true, Representation::PositionQ);
        assert!(a.f_value(PI / 2.0).unwrap().abs() < 1e-14); // (w/2) cot = 0 there
        let a = action(true, Representation::MomentumP);
        assert!((a.f_value(PI / 4.0).unwrap() + 0.5).abs() < 1e-14); // -(w/2) tan = -1/2
    }

    #[test]
    fn f_is_the_time_derivative_of_its_integral() {
        let h = 1e-6;
        for a in [
            action(false, Representation::PositionQ),
            action(true, Representation::PositionQ),
            action(true, Representation::MomentumP),
        ] {
            for t in [0.3, 0.7, 1.1] {
                let num = (a.f_integral(t + h).unwrap() - a.f_integral(t - h).unwrap()) / (2.0 * h);
                assert!((num - a.f_value(t).unwrap()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn semiclassical_psi_solves_the_schrodinger_equation() {
        let h = 1e-3;
        for a in [
            action(false, Representation::PositionQ),
            action(true, Representation::PositionQ),
            action(false, Representation::MomentumP),
            action(true, Representation::MomentumP),
        ] {
            let r = a.se_residual(1.0, 0.4, 0.8, h).unwrap();
            assert!(r < 1e-5, "{:?}: {r}", a.base);
            let r2 = a.se_residual(1.0, 0.4, 0.8, h / 2.0).unwrap();
            assert!(r2 < 0.3 * r, "no h^2 decay: {r} -> {r2}");
        }
    }

    #[test]
    fn psi_is_proportional_to_the_kernel() {
        let samples = [(0.5, -0.2, 0.4), (1.0, 1.0, 0.9), (-1.5, 0.3, 1.3)];
        // Free qQ: constant is sqrt(m / 2 pi i hbar)
        let a = action(false, Representation::PositionQ);
        let (c, spread) = kernel_proportionality(&a, &samples).unwrap();
        assert!(spread < 1e-10);
        let expect = (C64::new(1.0, 0.0) / C64::new(0.0, 2.0 * PI)).sqrt();
        assert!((c - expect).norm() < 1e-12);
        // both qP forms: constant is (2 pi hbar)^{-1/2}
        for harmonic in [false, true] {
            let a = action(harmonic, Representation::MomentumP);
            let (c, spread) = kernel_proportionality(&a, &samples).unwrap();
            assert!(spread < 1e-10);
            assert!((c - C64::new((2.0 * PI).powf(-0.5), 0.0)).norm() < 1e-12);
        }
    }
}
