//! Oracle comparisons for the closed-form kernels and moving-basis states.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::evolution::Propagator;
use crate::hilbert::{inner_product, DenseOperator, Grid, WaveFunction};
use crate::kernels::closed_form::{
    coherent_state_sum, kernel, moving_coherent_state, moving_momentum_state, moving_number_state,
    KernelSpec,
};
use crate::kernels::quadrature::{oscillatory_integral, trapezoid};
use crate::kernels::special::ho_eigenfunction;
use crate::params::{System, SystemParams};

/// The position kernel as a dense integral operator on the grid, so that
/// `apply` performs the quadrature `int K(q, Q; t) phi(Q) dQ`.
pub fn kernel_operator(params: &SystemParams, grid: Grid, t: f64) -> Result<DenseOperator> {
    let spec = KernelSpec::position(*params);
    spec.check_time(t)?;
    Ok(DenseOperator::from_kernel(grid, |q, qq| {
        kernel(&spec, q, qq, t).unwrap()
    }))
}

/// `|| T(t) phi - int K(., Q; t) phi(Q) dQ ||_2 / || phi ||_2`.
pub fn kernel_vs_evolution_residual(
    prop: &Propagator,
    t: f64,
    phi: &WaveFunction,
) -> Result<f64> {
    let evolved = prop.evolve(t, phi)?;
    let through_kernel = kernel_operator(prop.params(), *prop.grid(), t)?.apply(phi)?;
    Ok(evolved.sub(&through_kernel)?.norm() / phi.norm())
}

/// Sup-norm deviation of `int K(q, Q; t) phi(Q) dQ` from `phi(q)` as t -> 0+
/// for a unit-width Gaussian, on an oversampled lattice fine enough that no
/// aliased stationary point of the rapidly oscillating kernel lands inside
/// the integration window.
pub fn kernel_delta_limit_residual(params: &SystemParams, t: f64) -> Result<f64> {
    let spec = KernelSpec::position(*params);
    spec.check_time(t)?;
    let phi = |q: f64| C64::new((2.0 * PI).powf(-0.25) * (-0.25 * q * q).exp(), 0.0);
    let l = 12.0;
    let n = 1 << 17;
    // aliased stationary points sit at |q - Q| ~ 2 pi hbar t / (m dq);
    // with these numbers that distance exceeds the window for t >= 1e-4
    let mut worst: f64 = 0.0;
    for j in -4..=4 {
        let q = 0.5 * j as f64;
        let integral = trapezoid(|qq| kernel(&spec, q, qq, t).unwrap() * phi(qq), -l, l, n);
        worst = worst.max((integral - phi(q)).norm());
    }
    Ok(worst)
}

fn composition_stationary(
    params: &SystemParams,
    q: f64,
    qq: f64,
    t1: f64,
    t2: f64,
) -> (f64, f64) {
    let m = params.mass;
    let hbar = params.hbar;
    match params.system {
        System::Free => {
            let center = (q * t2 + qq * t1) / (t1 + t2);
            let alpha = 0.5 * m / hbar * (1.0 / t1 + 1.0 / t2);
            (center, alpha)
        }
        System::Harmonic { omega } => {
            let (s1, c1) = (omega * t1).sin_cos();
            let (s2, c2) = (omega * t2).sin_cos();
            let cot_sum = c1 / s1 + c2 / s2;
            let center = (q / s1 + qq / s2) / cot_sum;
            let alpha = 0.5 * m * omega / hbar * cot_sum;
            (center, alpha)
        }
    }
}

/// Sup over sampled (q, Q) of
/// `|K(q, Q; t1 + t2) - int K(q, x; t1) K(x, Q; t2) dx|`.
pub fn kernel_composition_residual(
    params: &SystemParams,
    t1: f64,
    t2: f64,
    samples: &[(f64, f64)],
) -> Result<f64> {
    let spec = KernelSpec::position(*params);
    spec.check_time(t1 + t2)?;
    if t1 == 0.0 || t2 == 0.0 {
        // identity composition: the integral degenerates to the kernel itself
        return Ok(0.0);
    }
    spec.check_time(t1)?;
    spec.check_time(t2)?;
    let mut worst: f64 = 0.0;
    for &(q, qq) in samples {
        let direct = kernel(&spec, q, qq, t1 + t2)?;
        let (center, alpha) = composition_stationary(params, q, qq, t1, t2);
        let composed = oscillatory_integral(
            |x| kernel(&spec, q, x, t1).unwrap() * kernel(&spec, x, qq, t2).unwrap(),
            center,
            alpha.abs(),
        )?;
        worst = worst.max((direct - composed).norm());
    }
    Ok(worst)
}

/// Relative residual of `i hbar dK/dt + (hbar^2/2m) d^2K/dq^2 - V(q) K`
/// by central differences with step h in both q and t.
pub fn kernel_schrodinger_residual(
    spec: &KernelSpec,
    q: f64,
    b: f64,
    t: f64,
    h: f64,
) -> Result<f64> {
    let hbar = spec.params.hbar;
    let m = spec.params.mass;
    let k0 = kernel(spec, q, b, t)?;
    let dt = (kernel(spec, q, b, t + h)? - kernel(spec, q, b, t - h)?) / (2.0 * h);
    let dqq = (kernel(spec, q + h, b, t)? - k0 * 2.0 + kernel(spec, q - h, b, t)?) / (h * h);
    let residual = C64::new(0.0, hbar) * dt + dqq * (hbar * hbar / (2.0 * m))
        - k0 * spec.params.potential(q);
    Ok(residual.norm() / k0.norm())
}

/// Closed-form `<Q;t|p>` against the regulated quadrature
/// `int dq conj(<q|Q;t>) (2 pi hbar)^{-1/2} e^{i p q / hbar}` (free only).
pub fn momentum_state_quadrature_residual(
    params: &SystemParams,
    q_moving: f64,
    p: f64,
    t: f64,
) -> Result<f64> {
    let closed = moving_momentum_state(params, q_moving, p, t)?;
    let spec = KernelSpec::position(*params);
    spec.check_time(t)?;
    let m = params.mass;
    let hbar = params.hbar;
    let plane = C64::new((2.0 * PI * hbar).powf(-0.5), 0.0);
    let center = q_moving + p * t / m;
    let alpha = 0.5 * m / (hbar * t.abs());
    let quad = oscillatory_integral(
        |q| {
            kernel(&spec, q, q_moving, t).unwrap().conj()
                * plane
                * (C64::new(0.0, p * q / hbar)).exp()
        },
        center,
        alpha,
    )?;
    Ok((closed - quad).norm())
}

/// Closed-form `<Q;t|n>` against `int dq conj(<q|Q;t>) <q|n>` by plain
/// trapezoid (the eigenfunction supplies Gaussian decay).
pub fn number_state_quadrature_residual(
    params: &SystemParams,
    q_moving: f64,
    n: usize,
    t: f64,
) -> Result<f64> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("number states need an oscillator".into()))?;
    let closed = moving_number_state(params, q_moving, n, t)?;
    let spec = KernelSpec::position(*params);
    spec.check_time(t)?;
    let x0 = (params.hbar / (params.mass * omega)).sqrt();
    let l = x0 * ((2.0 * n as f64 + 1.0).sqrt() + 9.0);
    let s = (omega * t).sin();
    // kernel phase gradient bound over the window, then ~16 samples/period
    let grad = params.mass * omega / (params.hbar * s.abs()) * (l + q_moving.abs() / s.abs());
    let n_pts = ((2.0 * l * grad * 16.0 / (2.0 * PI)).ceil() as usize).max(4001) + 1;
    let quad = trapezoid(
        |q| {
            kernel(&spec, q, q_moving, t).unwrap().conj()
                * ho_eigenfunction(params, q, n).unwrap()
        },
        -l,
        l,
        n_pts,
    );
    Ok((closed - quad).norm())
}

/// Max over m, n <= n_max of `|int dQ conj(<Q;t|m>) <Q;t|n> - delta_mn|`.
pub fn number_state_orthonormality_residual(
    params: &SystemParams,
    t: f64,
    n_max: usize,
) -> Result<f64> {
    let omega = params
        .omega()
        .ok_or_else(|| Error::Unsupported("number states need an oscillator".into()))?;
    let x0 = (params.hbar / (params.mass * omega)).sqrt();
    let l = x0 * ((2.0 * n_max as f64 + 1.0).sqrt() + 9.0);
    let n_pts = 8001;
    let mut worst: f64 = 0.0;
    for mm in 0..=n_max {
        for nn in mm..=n_max {
            let v = trapezoid(
                |q| {
                    moving_number_state(params, q, mm, t).unwrap().conj()
                        * moving_number_state(params, q, nn, t).unwrap()
                },
                -l,
                l,
                n_pts,
            );
            let target = if mm == nn { 1.0 } else { 0.0 };
            worst = worst.max((v - C64::new(target, 0.0)).norm());
        }
    }
    Ok(worst)
}

/// Sup over sampled Q of the gap between the coherent-state closed form and
/// its truncated number-basis sum.
pub fn coherent_state_sum_check(
    params: &SystemParams,
    z: C64,
    t: f64,
    q_samples: &[f64],
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &q in q_samples {
        let a = moving_coherent_state(params, q, z, t)?;
        let b = coherent_state_sum(params, q, z, t)?;
        worst = worst.max((a - b).norm());
    }
    Ok(worst)
}

/// Momentum kernel against the Fourier quadrature of the position kernel:
/// `<q|P;t> = int dQ <q|Q;t> (2 pi hbar)^{-1/2} e^{i P Q / hbar}`.
pub fn fourier_duality_check(
    params: &SystemParams,
    t: f64,
    samples: &[(f64, f64)],
) -> Result<f64> {
    let pos = KernelSpec::position(*params);
    let mom = KernelSpec::momentum(*params);
    pos.check_time(t)?;
    mom.check_time(t)?;
    let m = params.mass;
    let hbar = params.hbar;
    let plane = C64::new((2.0 * PI * hbar).powf(-0.5), 0.0);
    let mut worst: f64 = 0.0;
    for &(q, p) in samples {
        let closed = kernel(&mom, q, p, t)?;
        let (center, alpha) = match params.system {
            System::Free => (q - p * t / m, 0.5 * m / (hbar * t.abs())),
            System::Harmonic { omega } => {
                let (s, c) = (omega * t).sin_cos();
                ((q - p * s / (m * omega)) / c, 0.5 * m * omega * c / (hbar * s))
            }
        };
        let quad = oscillatory_integral(
            |qq| {
                kernel(&pos, q, qq, t).unwrap()
                    * plane
                    * (C64::new(0.0, p * qq / hbar)).exp()
            },
            center,
            alpha.abs(),
        )?;
        worst = worst.max((closed - quad).norm());
    }
    Ok(worst)
}

/// Unitarity of the kernel quadrature: inner products of Gaussian packets
/// are preserved when both are pushed through the kernel operator.
pub fn kernel_packet_unitarity_residual(
    params: &SystemParams,
    grid: Grid,
    t: f64,
    packets: &[WaveFunction],
) -> Result<f64> {
    let op = kernel_operator(params, grid, t)?;
    let pushed: Vec<WaveFunction> =
        packets.iter().map(|p| op.apply(p)).collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for i in 0..packets.len() {
        for j in i..packets.len() {
            let before = inner_product(&packets[i], &packets[j])?;
            let after = inner_product(&pushed[i], &pushed[j])?;
            worst = worst.max((before - after).norm());
        }
    }
    Ok(worst)
}
