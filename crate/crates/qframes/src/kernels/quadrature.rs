//! Quadrature oracles: plain trapezoid for decaying integrands and a
//! regulated scheme for pure-phase (Fresnel-type) integrands.
//!
//! The regulated integral damps with `exp(-eps (x - x*)^2)` centered at the
//! stationary point `x*`, evaluates a geometric ladder of eps values on one
//! set of samples, and extrapolates eps -> 0 by Neville's algorithm. The
//! ladder is scaled by the phase curvature `alpha` so the extrapolation
//! nodes stay inside the disk where `I(eps)` is analytic; the window width
//! keeps the damping at the truncation edge below ~2e-9.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Trapezoid rule for a decaying integrand on [a, b].
pub fn trapezoid<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, n: usize) -> C64 {
    let h = (b - a) / (n - 1) as f64;
    let mut s = (f(a) + f(b)) * 0.5;
    for i in 1..n - 1 {
        s += f(a + h * i as f64);
    }
    s * h
}

/// Geometric ladder of damping strengths, in units of the curvature.
const EPS_LADDER: [f64; 8] = [
    0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125, 0.00390625,
];
/// `eps_min * L^2`, fixing the damping left at the truncation edge (e^-20).
const EDGE_EXPONENT: f64 = 20.0;
/// Samples per shortest local oscillation period at the window edge.
const SAMPLES_PER_PERIOD: f64 = 16.0;

/// Integral over the real line of a pure-phase integrand whose phase is
/// locally `alpha (x - center)^2` near its stationary point `center`.
/// `alpha` only sets scales (window width, step, eps ladder); it need not be
/// exact, but should be within a factor of a few of the true curvature.
pub fn oscillatory_integral<F: Fn(f64) -> C64>(f: F, center: f64, alpha: f64) -> Result<C64> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "phase curvature must be positive and finite, got {alpha}"
        )));
    }
    let eps_min = EPS_LADDER[EPS_LADDER.len() - 1] * alpha;
    let half_width = (EDGE_EXPONENT / eps_min).sqrt();
    // edge oscillation wavelength ~ pi / (alpha L); resolve it generously
    let n = (2.0 * SAMPLES_PER_PERIOD * alpha * half_width * half_width
        / std::f64::consts::PI)
        .ceil() as usize
        + 1;
    let h = 2.0 * half_width / (n - 1) as f64;

    let mut damped = [C64::new(0.0, 0.0); EPS_LADDER.len()];
    for i in 0..n {
        let x = center - half_width + h * i as f64;
        let g = f(x);
        let u2 = (x - center) * (x - center);
        for (j, &c) in EPS_LADDER.iter().enumerate() {
            damped[j] += g * (-c * alpha * u2).exp();
        }
    }
    for v in &mut damped {
        *v *= h;
    }
    let eps: Vec<f64> = EPS_LADDER.iter().map(|c| c * alpha).collect();
    Ok(neville_at_zero(&eps, &damped))
}

/// Polynomial extrapolation of samples (x_i, y_i) to x = 0.
fn neville_at_zero(xs: &[f64], ys: &[C64]) -> C64 {
    let n = xs.len();
    let mut p = ys.to_vec();
    for k in 1..n {
        for i in 0..n - k {
            p[i] = (p[i] * xs[i + k] - p[i + 1] * xs[i]) / (xs[i + k] - xs[i]);
        }
    }
    p[0]
}
