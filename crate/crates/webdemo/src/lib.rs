//! Thin wasm exports over the closed-form kernels and moving basis states.
//! Everything returns flat `f64` buffers that the page draws directly onto
//! a canvas; no state lives on this side.

use num_complex::Complex64 as C64;
use wasm_bindgen::prelude::*;

use qframes::kernels::{kernel, moving_coherent_state, moving_number_state, KernelSpec};
use qframes::SystemParams;

fn params(system: &str, omega: f64) -> Result<SystemParams, String> {
    let p = match system {
        "free" => SystemParams::free(1.0, 1.0),
        "harmonic" => SystemParams::harmonic(1.0, omega, 1.0),
        other => return Err(format!("unknown system '{other}'")),
    };
    p.map_err(|e| e.to_string())
}

/// `K(q, Q; t)` on an `n x n` grid over `[-extent, extent]^2`, interleaved
/// as `re, im` in row-major order (`q` is the row).
#[wasm_bindgen]
pub fn kernel_heatmap(
    system: &str,
    omega: f64,
    t: f64,
    n: usize,
    extent: f64,
) -> Result<Vec<f64>, String> {
    let spec = KernelSpec::position(params(system, omega)?);
    spec.check_time(t).map_err(|e| e.to_string())?;
    let step = 2.0 * extent / (n - 1) as f64;
    let mut out = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        let q = -extent + step * i as f64;
        for j in 0..n {
            let big_q = -extent + step * j as f64;
            let v = kernel(&spec, q, big_q, t).map_err(|e| e.to_string())?;
            out.push(v.re);
            out.push(v.im);
        }
    }
    Ok(out)
}

/// `<Q; t | n>` sampled at `points` positions over `[-extent, extent]`,
/// interleaved as `re, im`.
#[wasm_bindgen]
pub fn number_state_profile(
    omega: f64,
    n: usize,
    t: f64,
    points: usize,
    extent: f64,
) -> Result<Vec<f64>, String> {
    let p = params("harmonic", omega)?;
    let step = 2.0 * extent / (points - 1) as f64;
    let mut out = Vec::with_capacity(2 * points);
    for i in 0..points {
        let q = -extent + step * i as f64;
        let v = moving_number_state(&p, q, n, t).map_err(|e| e.to_string())?;
        out.push(v.re);
        out.push(v.im);
    }
    Ok(out)
}

/// `<Q; t | z>` for `z = z_re + i z_im`, interleaved as `re, im`. The packet
/// center orbits at the classical frequency, which is the visual point.
#[wasm_bindgen]
pub fn coherent_state_profile(
    omega: f64,
    z_re: f64,
    z_im: f64,
    t: f64,
    points: usize,
    extent: f64,
) -> Result<Vec<f64>, String> {
    let p = params("harmonic", omega)?;
    let z = C64::new(z_re, z_im);
    let step = 2.0 * extent / (points - 1) as f64;
    let mut out = Vec::with_capacity(2 * points);
    for i in 0..points {
        let q = -extent + step * i as f64;
        let v =
            moving_coherent_state(&p, q, z, t).map_err(|e| e.to_string())?;
        out.push(v.re);
        out.push(v.im);
    }
    Ok(out)
}
