//! Hermite polynomials and oscillator eigenfunctions.

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Physicists' Hermite polynomial `H_n` by the three-term recurrence.
pub fn hermite(n: usize, xi: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0 * xi,
        _ => {
            let (mut prev, mut cur) = (1.0, 2.0 * xi);
            for k in 1..n {
                let next = 2.0 * xi * cur - 2.0 * (k as f64) * prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Normalized oscillator eigenfunction `<q|n>` for the given mass, frequency
/// and hbar. Uses the recurrence on the *normalized* functions
/// `u_{n+1} = xi sqrt(2/(n+1)) u_n - sqrt(n/(n+1)) u_{n-1}`
/// so that `2^n n!` never appears and n up to a few hundred stays finite.
pub fn ho_eigenfunction(params: &SystemParams, q: f64, n: usize) -> Result<f64> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("oscillator eigenfunction needs omega".into()))?;
    let scale = params.mass * omega / params.hbar;
    let xi = scale.sqrt() * q;
    let u0 = (scale / std::f64::consts::PI).powf(0.25) * (-0.5 * xi * xi).exp();
    if n == 0 {
        return Ok(u0);
    }
    let mut prev = u0;
    let mut cur = std::f64::consts::SQRT_2 * xi * u0;
    for k in 1..n {
        let kf = k as f64;
        let next = xi * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
