//! The four classical generating functions W and their analytic partials.
//!
//! Type-1 sign convention throughout: `p = dW/dq`, `P = -dW/dQ` (for the
//! (q,P) forms the second slot is P and `Q = dW/dP`). This is the unique
//! convention under which the generating functions reproduce the
//! closed-form transformed coordinates; `canonical_derivative_check`
//! verifies exactly that.

use crate::error::{Error, Result};
use crate::params::{Representation, System, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratingFunction {
    pub representation: Representation,
    pub params: SystemParams,
}

impl GeneratingFunction {
    pub fn new(representation: Representation, params: SystemParams) -> Self {
        Self { representation, params }
    }

    /// Err where a prefactor of the associated kernel is singular: t = 0
    /// (Free qQ), sin wt = 0 (Harmonic qQ), cos wt = 0 (Harmonic qP).
    pub fn check_time(&self, t: f64) -> Result<()> {
        match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) if t == 0.0 => Err(Error::SingularTime {
                t,
                reason: "free qQ generating function has 1/t".into(),
            }),
            (System::Harmonic { omega }, Representation::PositionQ)
                if (omega * t).sin().abs() < 1e-12 =>
            {
                Err(Error::SingularTime {
                    t,
                    reason: "harmonic qQ generating function has 1/sin(wt)".into(),
                })
            }
            (System::Harmonic { omega }, Representation::MomentumP)
                if (omega * t).cos().abs() < 1e-12 =>
            {
                Err(Error::SingularTime {
                    t,
                    reason: "harmonic qP generating function has tan(wt)".into(),
                })
            }
            _ => Ok(()),
        }
    }

    /// W(q, b, t) where b is Q (PositionQ) or P (MomentumP).
    pub fn w(&self, q: f64, b: f64, t: f64) -> Result<f64> {
        self.check_time(t)?;
        let m = self.params.mass;
        Ok(match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) => 0.5 * m * (q - b) * (q - b) / t,
            (System::Harmonic { omega }, Representation::PositionQ) => {
                let (s, c) = (omega * t).sin_cos();
                m * omega / s * (0.5 * (q * q + b * b) * c - q * b)
            }
            (System::Free, Representation::MomentumP) => q * b - 0.5 * b * b * t / m,
            (System::Harmonic { omega }, Representation::MomentumP) => {
                let u = omega * t;
                q * b / u.cos()
                    - (0.5 * m * omega * omega * q * q + 0.5 * b * b / m) * u.tan() / omega
            }
        })
    }

    /// dW/dq = p.
    pub fn dw_dq(&self, q: f64, b: f64, t: f64) -> Result<f64> {
        self.check_time(t)?;
        let m = self.params.mass;
        Ok(match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) => m * (q - b) / t,
            (System::Harmonic { omega }, Representation::PositionQ) => {
                let (s, c) = (omega * t).sin_cos();
                m * omega / s * (q * c - b)
            }
            (System::Free, Representation::MomentumP) => b,
            (System::Harmonic { omega }, Representation::MomentumP) => {
                let u = omega * t;
                b / u.cos() - m * omega * q * u.tan()
            }
        })
    }

    /// dW/db: equals -P for PositionQ forms, +Q for MomentumP forms.
    pub fn dw_db(&self, q: f64, b: f64, t: f64) -> Result<f64> {
        self.check_time(t)?;
        let m = self.params.mass;
        Ok(match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) => -m * (q - b) / t,
            (System::Harmonic { omega }, Representation::PositionQ) => {
                let (s, c) = (omega * t).sin_cos();
                m * omega / s * (b * c - q)
            }
            (System::Free, Representation::MomentumP) => q - b * t / m,
            (System::Harmonic { omega }, Representation::MomentumP) => {
                let u = omega * t;
                q / u.cos() - b * u.tan() / (m * omega)
            }
        })
    }

    /// dW/dt.
    pub fn dw_dt(&self, q: f64, b: f64, t: f64) -> Result<f64> {
        self.check_time(t)?;
        let m = self.params.mass;
        Ok(match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) => -0.5 * m * (q - b) * (q - b) / (t * t),
            (System::Harmonic { omega }, Representation::PositionQ) => {
                let (s, c) = (omega * t).sin_cos();
                -m * omega * omega / (s * s) * (0.5 * (q * q + b * b) - q * b * c)
            }
            (System::Free, Representation::MomentumP) => -0.5 * b * b / m,
            (System::Harmonic { omega }, Representation::MomentumP) => {
                let (s, c) = (omega * t).sin_cos();
                omega * q * b * s / (c * c)
                    - (0.5 * m * omega * omega * q * q + 0.5 * b * b / m) / (c * c)
            }
        })
    }

    /// d2W/dq2; q-independent because every W is quadratic in q.
    pub fn d2w_dq2(&self, t: f64) -> Result<f64> {
        self.check_time(t)?;
        let m = self.params.mass;
        Ok(match (self.params.system, self.representation) {
            (System::Free, Representation::PositionQ) => m / t,
            (System::Harmonic { omega }, Representation::PositionQ) => {
                let (s, c) = (omega * t).sin_cos();
                m * omega * c / s
            }
            (System::Free, Representation::MomentumP) => 0.0,
            (System::Harmonic { omega }, Representation::MomentumP) => {
                -m * omega * (omega * t).tan()
            }
        })
    }

    /// Hamilton-Jacobi residual `(1/2m)(dW/dq)^2 + V(q) + dW/dt`;
    /// analytically zero for all four forms.
    pub fn hj_residual(&self, q: f64, b: f64, t: f64) -> Result<f64> {
        let p = self.dw_dq(q, b, t)?;
        Ok(0.5 * p * p / self.params.mass + self.params.potential(q) + self.dw_dt(q, b, t)?)
    }
}
