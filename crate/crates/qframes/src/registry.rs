//! Named check registry consumed by the CLI.
//!
//! Each registered check turns a [`CheckContext`] into a list of outcomes:
//! one report per parameter combination it covers, or a skip notice when
//! the combination is out of domain (wrong system, singular time). Checks
//! never error on singular times — filtering with a notice keeps t-sweeps
//! usable near caustics.

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::evolution::{
    closed_form_operator_residual, commutator_residual, group_law_residual,
    heisenberg_duality_residual, time_independence_residual, transformed_hamiltonian_residual,
    unitarity_residual, DerivativeMode, InteriorSubspace, Propagator,
};
use crate::hamilton_jacobi::{
    action_angle_bracket_check, action_angle_constancy_residual, canonical_derivative_check,
    f_consistency_check, frame_constancy_residual, hj_residual_check, kernel_proportionality,
    legendre_transform_check, GeneratingFunction, QuantumAction,
};
use crate::hilbert::{DeltaKind, Grid, WaveFunction};
use crate::kernels::{
    coherent_state_sum_check, fourier_duality_check, kernel_composition_residual,
    kernel_delta_limit_residual, kernel_packet_unitarity_residual, kernel_schrodinger_residual,
    kernel_vs_evolution_residual, momentum_state_quadrature_residual,
    number_state_orthonormality_residual, number_state_quadrature_residual, KernelSpec,
};
use crate::params::{Representation, System, SystemParams};
use crate::report::{CheckOutcome, CheckReport};
use crate::tolerances as tol;

/// Shared state for one verification run. The propagator (Hamiltonian
/// eigendecomposition) is built once on first use and reused.
pub struct CheckContext {
    pub params: SystemParams,
    pub grid: Grid,
    pub times: Vec<f64>,
    pub seed: u64,
    propagator: Option<Propagator>,
}

impl CheckContext {
    pub fn new(params: SystemParams, grid: Grid, times: Vec<f64>, seed: u64) -> Self {
        Self { params, grid, times, seed, propagator: None }
    }

    pub fn propagator(&mut self) -> Result<&Propagator> {
        if self.propagator.is_none() {
            self.propagator = Some(Propagator::new(self.params, self.grid)?);
        }
        Ok(self.propagator.as_ref().unwrap())
    }

    fn interior_packets(&self) -> Result<Vec<WaveFunction>> {
        [(0.0, 0.0), (2.0, 0.5), (-3.0, -1.0), (1.0, 1.5), (-1.5, 0.8)]
            .iter()
            .map(|&(q0, p0)| {
                WaveFunction::gaussian_packet(self.grid, q0, p0, 1.0, self.params.hbar)
            })
            .collect()
    }

    fn subspace(&mut self) -> Result<InteriorSubspace> {
        let t_max = self.times.iter().fold(0.0_f64, |a, &t| a.max(t.abs())).max(0.5);
        let params = self.params;
        let grid = self.grid;
        let eigen = self.propagator()?.eigen();
        InteriorSubspace::for_system(&params, &grid, eigen, t_max)
    }
}

type Runner = fn(&mut CheckContext) -> Result<Vec<CheckOutcome>>;

/// A named check with a human-readable identity anchor.
pub struct RegisteredCheck {
    pub name: &'static str,
    pub module: &'static str,
    pub anchor: &'static str,
    pub runner: Runner,
}

fn report(ctx: &CheckContext, name: &str, residual: f64, tolerance: f64) -> CheckReport {
    CheckReport::new(name, &ctx.params, residual, tolerance)
        .with_meta("grid", format!("{},{},{}", ctx.grid.q_min(), ctx.grid.q_max(), ctx.grid.n()))
        .with_meta("seed", ctx.seed)
}

/// Skip notice when a check needs the position kernel at a time where its
/// prefactor is singular.
fn skip_if_singular(
    spec: &KernelSpec,
    t: f64,
    name: &str,
    out: &mut Vec<CheckOutcome>,
) -> bool {
    if let Err(e) = spec.check_time(t) {
        out.push(CheckOutcome::skipped(name, e.to_string()));
        return true;
    }
    false
}

fn run_unitarity(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let r = unitarity_residual(ctx.propagator()?, t)?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.unitarity", r, tol::UNITARITY).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_group_law(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let r = group_law_residual(ctx.propagator()?, 0.4 * t, 0.6 * t)?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.group_law", r, tol::GROUP_LAW).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_commutator(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let packets = ctx.interior_packets()?;
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let frame = ctx.propagator()?.frame(t);
        let r = commutator_residual(&frame, &packets)?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.commutator", r, tol::COMMUTATOR_WEAK)
                .with_meta("t", t)
                .with_meta("packets", packets.len()),
        ));
    }
    Ok(out)
}

fn run_closed_form_operators(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let sub = ctx.subspace()?;
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let frame = ctx.propagator()?.frame(t);
        let r = closed_form_operator_residual(&frame, &sub)?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.closed_form_operators", r, tol::CLOSED_FORM_OPERATORS)
                .with_meta("t", t)
                .with_meta("subspace_dim", sub.dim()),
        ));
    }
    Ok(out)
}

fn run_transformed_hamiltonian_analytic(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let sub = ctx.subspace()?;
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let r = transformed_hamiltonian_residual(
            ctx.propagator()?,
            t,
            DerivativeMode::Analytic,
            &sub,
        )?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.transformed_hamiltonian_analytic", r, tol::TRANSFORMED_H_ANALYTIC)
                .with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_transformed_hamiltonian_fd(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let sub = ctx.subspace()?;
    let times = ctx.times.clone();
    let dt = tol::TRANSFORMED_H_FD_DT;
    let mut out = Vec::new();
    for t in times {
        let r = transformed_hamiltonian_residual(
            ctx.propagator()?,
            t,
            DerivativeMode::FiniteDifference { dt },
            &sub,
        )?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.transformed_hamiltonian_fd", r, tol::TRANSFORMED_H_FD)
                .with_meta("t", t)
                .with_meta("dt", dt),
        ));
    }
    Ok(out)
}

fn run_time_independence(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let psi = WaveFunction::gaussian_packet(ctx.grid, 1.0, 0.5, 1.0, ctx.params.hbar)?;
    let times = ctx.times.clone();
    let r = time_independence_residual(ctx.propagator()?, &psi, &times)?;
    Ok(vec![CheckOutcome::Report(
        report(ctx, "evolution.time_independence", r, tol::TIME_INDEPENDENCE)
            .with_meta("times", format!("{times:?}")),
    )])
}

fn run_moving_base_eigen(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let q_half = ctx.grid.q_min().abs().min(ctx.grid.q_max());
    let qs: Vec<f64> = (-5..5).map(|j| (j as f64 + 0.5) * 0.06 * q_half).collect();
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let frame = ctx.propagator()?.frame(t);
        let mut worst: f64 = 0.0;
        for &q in &qs {
            worst = worst.max(frame.base_state_eigen_residual(q, DeltaKind::Raw)?);
        }
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.moving_base_eigen", worst, tol::MOVING_BASE_EIGEN)
                .with_meta("t", t)
                .with_meta("points", qs.len()),
        ));
    }
    Ok(out)
}

fn run_heisenberg_duality(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        let r = heisenberg_duality_residual(ctx.propagator()?, t)?;
        out.push(CheckOutcome::Report(
            report(ctx, "evolution.heisenberg_duality", r, tol::HEISENBERG_DUALITY)
                .with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_kernel_vs_evolution(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.kernel_vs_evolution";
    let spec = KernelSpec::position(ctx.params);
    let phi = WaveFunction::gaussian_packet(ctx.grid, 0.0, 0.0, 1.0, ctx.params.hbar)?;
    let times = ctx.times.clone();
    let mut out = Vec::new();
    for t in times {
        if skip_if_singular(&spec, t, name, &mut out) {
            continue;
        }
        let r = kernel_vs_evolution_residual(ctx.propagator()?, t, &phi)?;
        out.push(CheckOutcome::Report(
            report(ctx, name, r, tol::KERNEL_VS_EVOLUTION).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_kernel_delta_limit(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.delta_limit";
    if ctx.params.is_harmonic() {
        // the same limit holds, but the free form is the clean statement
        return Ok(vec![CheckOutcome::skipped(name, "evaluated on the free system only")]);
    }
    let t = tol::KERNEL_DELTA_LIMIT_T;
    let r = kernel_delta_limit_residual(&ctx.params, t)?;
    Ok(vec![CheckOutcome::Report(
        report(ctx, name, r, tol::KERNEL_DELTA_LIMIT).with_meta("t", t),
    )])
}

fn run_kernel_composition(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.composition";
    let spec = KernelSpec::position(ctx.params);
    let samples = [(0.0, 0.0), (1.0, -0.5), (-1.3, 0.4), (2.0, 2.0)];
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        let (t1, t2) = (0.45 * t, 0.55 * t);
        if skip_if_singular(&spec, t, name, &mut out)
            || skip_if_singular(&spec, t1, name, &mut out)
            || skip_if_singular(&spec, t2, name, &mut out)
        {
            continue;
        }
        let r = kernel_composition_residual(&ctx.params, t1, t2, &samples)?;
        out.push(CheckOutcome::Report(
            report(ctx, name, r, tol::KERNEL_COMPOSITION)
                .with_meta("t1", t1)
                .with_meta("t2", t2),
        ));
    }
    Ok(out)
}

fn run_kernel_schrodinger(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.schrodinger_residual";
    let spec = KernelSpec::position(ctx.params);
    let h = tol::PDE_FD_STEP;
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        // stay a few FD steps away from the singular set
        if skip_if_singular(&spec, t, name, &mut out)
            || skip_if_singular(&spec, t - 2.0 * h, name, &mut out)
            || skip_if_singular(&spec, t + 2.0 * h, name, &mut out)
        {
            continue;
        }
        // keep |q - b| ~ t so dW/dt = -m(q-b)^2/2t^2 stays O(1), and scale
        // the step with t because the 1/sqrt(t) prefactor contributes a
        // third time-derivative ~ t^-3 to the h^2 truncation term
        let points = [(1.0, 1.0 - 0.5 * t), (0.5, 0.5 - 0.4 * t), (-1.2, -1.2 + 0.3 * t)];
        let h_eff = h * t.abs().min(1.0);
        let mut worst: f64 = 0.0;
        for &(q, b) in &points {
            worst = worst.max(kernel_schrodinger_residual(&spec, q, b, t, h_eff)?);
        }
        out.push(CheckOutcome::Report(
            report(ctx, name, worst, tol::KERNEL_SE_RESIDUAL)
                .with_meta("t", t)
                .with_meta("h", h_eff),
        ));
    }
    Ok(out)
}

fn run_momentum_state(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.momentum_state_quadrature";
    if ctx.params.is_harmonic() {
        return Ok(vec![CheckOutcome::skipped(
            name,
            "the plane-wave moving momentum state exists for the free system only",
        )]);
    }
    let spec = KernelSpec::position(ctx.params);
    let points = [(0.0, 1.0), (1.5, -0.8), (-2.0, 0.3)];
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        if skip_if_singular(&spec, t, name, &mut out) {
            continue;
        }
        let mut worst: f64 = 0.0;
        for &(q, p) in &points {
            worst = worst.max(momentum_state_quadrature_residual(&ctx.params, q, p, t)?);
        }
        out.push(CheckOutcome::Report(
            report(ctx, name, worst, tol::MOMENTUM_STATE_QUAD).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_number_state_quadrature(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.number_state_quadrature";
    if !ctx.params.is_harmonic() {
        return Ok(vec![CheckOutcome::skipped(name, "number states need an oscillator")]);
    }
    let spec = KernelSpec::position(ctx.params);
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        if skip_if_singular(&spec, t, name, &mut out) {
            continue;
        }
        let mut worst: f64 = 0.0;
        for n in 0..=10usize {
            worst = worst.max(number_state_quadrature_residual(&ctx.params, 0.8, n, t)?);
        }
        out.push(CheckOutcome::Report(
            report(ctx, name, worst, tol::NUMBER_STATE_QUAD)
                .with_meta("t", t)
                .with_meta("n_max", 10),
        ));
    }
    Ok(out)
}

fn run_number_state_orthonormality(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.number_state_orthonormality";
    if !ctx.params.is_harmonic() {
        return Ok(vec![CheckOutcome::skipped(name, "number states need an oscillator")]);
    }
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        let r = number_state_orthonormality_residual(&ctx.params, t, 10)?;
        out.push(CheckOutcome::Report(
            report(ctx, name, r, tol::NUMBER_STATE_ORTHO)
                .with_meta("t", t)
                .with_meta("n_max", 10),
        ));
    }
    Ok(out)
}

fn run_coherent_state(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.coherent_state_sum";
    if !ctx.params.is_harmonic() {
        return Ok(vec![CheckOutcome::skipped(name, "coherent states need an oscillator")]);
    }
    let qs = [-2.0, -0.7, 0.0, 0.9, 2.2];
    let zs = [C64::new(2.0, 0.0), C64::new(1.2, -1.1), C64::new(-0.5, 0.5)];
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        let mut worst: f64 = 0.0;
        for &z in &zs {
            worst = worst.max(coherent_state_sum_check(&ctx.params, z, t, &qs)?);
        }
        out.push(CheckOutcome::Report(
            report(ctx, name, worst, tol::COHERENT_SUM).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_fourier_duality(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.fourier_duality";
    let pos = KernelSpec::position(ctx.params);
    let mom = KernelSpec::momentum(ctx.params);
    let samples = [(0.5, 1.0), (0.0, 0.0), (-1.0, 0.7), (1.5, -1.2)];
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        if skip_if_singular(&pos, t, name, &mut out) || skip_if_singular(&mom, t, name, &mut out)
        {
            continue;
        }
        let r = fourier_duality_check(&ctx.params, t, &samples)?;
        out.push(CheckOutcome::Report(
            report(ctx, name, r, tol::FOURIER_DUALITY).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn run_packet_unitarity(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "kernels.packet_unitarity";
    let spec = KernelSpec::position(ctx.params);
    let packets = ctx.interior_packets()?;
    let mut out = Vec::new();
    for t in ctx.times.clone() {
        if skip_if_singular(&spec, t, name, &mut out) {
            continue;
        }
        let r = kernel_packet_unitarity_residual(&ctx.params, ctx.grid, t, &packets)?;
        out.push(CheckOutcome::Report(
            report(ctx, name, r, tol::KERNEL_PACKET_UNITARITY).with_meta("t", t),
        ));
    }
    Ok(out)
}

fn both_representations(
    ctx: &CheckContext,
    name: &'static str,
    tolerance: f64,
    f: impl Fn(&GeneratingFunction) -> Result<f64>,
) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for rep in [Representation::PositionQ, Representation::MomentumP] {
        let gf = GeneratingFunction::new(rep, ctx.params);
        let r = f(&gf)?;
        out.push(CheckOutcome::Report(
            report(ctx, name, r, tolerance).with_meta("representation", format!("{rep:?}")),
        ));
    }
    Ok(out)
}

fn run_hj_residual(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let seed = ctx.seed;
    both_representations(ctx, "hj.residual", tol::HJ_RESIDUAL, |gf| {
        hj_residual_check(gf, 1000, seed)
    })
}

fn run_f_consistency(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let seed = ctx.seed;
    both_representations(ctx, "hj.f_consistency", tol::F_CONSISTENCY, |gf| {
        f_consistency_check(gf, 100, seed)
    })
}

fn run_semiclassical_se(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let h = tol::PDE_FD_STEP;
    both_representations(ctx, "hj.semiclassical_schrodinger", tol::SEMICLASSICAL_SE, |gf| {
        let action = QuantumAction::new(*gf);
        // the h^2 truncation tracks the third time-derivative of the phase:
        // the qQ actions blow up as t -> 0 and the harmonic qP action blows
        // up as wt -> pi/2, so the two forms sample opposite ends of the
        // window; harmonic times are phases, rescaled by 1/w
        let points: &[(f64, f64, f64)] = match gf.representation {
            Representation::PositionQ => &[(1.0, 0.0, 0.8), (0.5, -0.3, 0.9), (-1.2, 0.9, 1.1)],
            Representation::MomentumP => &[(1.0, 0.0, 0.8), (0.5, -0.3, 0.5), (-1.0, 0.8, 0.6)],
        };
        let tscale = match gf.params.system {
            System::Harmonic { omega } => 1.0 / omega,
            System::Free => 1.0,
        };
        let mut worst: f64 = 0.0;
        for &(q, b, t) in points {
            worst = worst.max(action.se_residual(q, b, t * tscale, h)?);
        }
        Ok(worst)
    })
}

fn run_kernel_proportionality(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    both_representations(
        ctx,
        "hj.kernel_proportionality",
        tol::KERNEL_PROPORTIONALITY,
        |gf| {
            let action = QuantumAction::new(*gf);
            let tscale = match gf.params.system {
                System::Harmonic { omega } => 1.0 / omega,
                System::Free => 1.0,
            };
            let samples = [
                (0.5, -0.2, 0.4 * tscale),
                (1.0, 1.0, 0.9 * tscale),
                (-1.5, 0.3, 1.3 * tscale),
            ];
            let (_, spread) = kernel_proportionality(&action, &samples)?;
            Ok(spread)
        },
    )
}

fn run_legendre(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let r = legendre_transform_check(&ctx.params, 100, ctx.seed)?;
    Ok(vec![CheckOutcome::Report(
        report(ctx, "hj.legendre_transform", r, tol::LEGENDRE).with_meta("points", 100),
    )])
}

fn run_canonical_derivative(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let r = canonical_derivative_check(&ctx.params, 100, ctx.seed)?;
    Ok(vec![CheckOutcome::Report(
        report(ctx, "hj.canonical_derivative", r, tol::CANONICAL_DERIVATIVE)
            .with_meta("points", 100),
    )])
}

fn run_frame_constancy(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let times: Vec<f64> = (1..=20).map(|j| 0.25 * j as f64).collect();
    let analytic = frame_constancy_residual(&ctx.params, 1.0, 0.4, &times, None);
    let integrated =
        frame_constancy_residual(&ctx.params, 1.0, 0.4, &times, Some(tol::RK4_STEP));
    Ok(vec![
        CheckOutcome::Report(
            report(ctx, "hj.frame_constancy", analytic, tol::FRAME_CONSTANCY_ANALYTIC)
                .with_meta("orbit", "analytic"),
        ),
        CheckOutcome::Report(
            report(ctx, "hj.frame_constancy", integrated, tol::FRAME_CONSTANCY)
                .with_meta("orbit", "rk4")
                .with_meta("dt", tol::RK4_STEP),
        ),
    ])
}

fn run_action_angle(ctx: &mut CheckContext) -> Result<Vec<CheckOutcome>> {
    let name = "hj.action_angle";
    if !ctx.params.is_harmonic() {
        return Ok(vec![CheckOutcome::skipped(name, "action-angle map needs an oscillator")]);
    }
    let (bracket, skipped) =
        action_angle_bracket_check(&ctx.params, 100, ctx.seed, tol::BRACKET_FD_STEP, 0.1)?;
    let times: Vec<f64> = (1..=40).map(|j| 0.2 * j as f64).collect();
    let constancy = action_angle_constancy_residual(&ctx.params, 1.0, 0.0, &times)?;
    Ok(vec![
        CheckOutcome::Report(
            report(ctx, name, bracket, tol::ACTION_ANGLE_BRACKET)
                .with_meta("kind", "poisson_bracket")
                .with_meta("p_floor", 0.1)
                .with_meta("points_skipped", skipped),
        ),
        CheckOutcome::Report(
            report(ctx, name, constancy, tol::FRAME_CONSTANCY).with_meta("kind", "constancy"),
        ),
    ])
}

/// Every registered check, in a stable order.
pub fn all_checks() -> Vec<RegisteredCheck> {
    vec![
        RegisteredCheck {
            name: "evolution.unitarity",
            module: "evolution",
            anchor: "T(t) is unitary: T(t)^dag T(t) = 1",
            runner: run_unitarity,
        },
        RegisteredCheck {
            name: "evolution.group_law",
            module: "evolution",
            anchor: "T(t1) T(t2) = T(t1 + t2)",
            runner: run_group_law,
        },
        RegisteredCheck {
            name: "evolution.commutator",
            module: "evolution",
            anchor: "[Q(t), P(t)] = i hbar on interior states",
            runner: run_commutator,
        },
        RegisteredCheck {
            name: "evolution.closed_form_operators",
            module: "evolution",
            anchor: "T q T^dag and T p T^dag equal their closed-form linear combinations",
            runner: run_closed_form_operators,
        },
        RegisteredCheck {
            name: "evolution.transformed_hamiltonian_analytic",
            module: "evolution",
            anchor: "K = T^dag H T + i hbar (dT^dag/dt) T vanishes (analytic derivative)",
            runner: run_transformed_hamiltonian_analytic,
        },
        RegisteredCheck {
            name: "evolution.transformed_hamiltonian_fd",
            module: "evolution",
            anchor: "K = T^dag H T + i hbar (dT^dag/dt) T vanishes (central differences)",
            runner: run_transformed_hamiltonian_fd,
        },
        RegisteredCheck {
            name: "evolution.time_independence",
            module: "evolution",
            anchor: "moving-frame wavefunction Psi(Q,t) does not depend on t",
            runner: run_time_independence,
        },
        RegisteredCheck {
            name: "evolution.moving_base_eigen",
            module: "evolution",
            anchor: "|Q;t> = T|Q> is an eigenvector of Q(t) with eigenvalue Q",
            runner: run_moving_base_eigen,
        },
        RegisteredCheck {
            name: "evolution.heisenberg_duality",
            module: "evolution",
            anchor: "T^dag(t) q T(t) equals the moving-frame Q at -t",
            runner: run_heisenberg_duality,
        },
        RegisteredCheck {
            name: "kernels.kernel_vs_evolution",
            module: "kernels",
            anchor: "<q|Q;t> applied by quadrature equals dense exp(-iHt/hbar)",
            runner: run_kernel_vs_evolution,
        },
        RegisteredCheck {
            name: "kernels.delta_limit",
            module: "kernels",
            anchor: "int K(q,Q;t) phi(Q) dQ -> phi(q) as t -> 0+",
            runner: run_kernel_delta_limit,
        },
        RegisteredCheck {
            name: "kernels.composition",
            module: "kernels",
            anchor: "K(t1 + t2) = int K(t1) K(t2), the semigroup property",
            runner: run_kernel_composition,
        },
        RegisteredCheck {
            name: "kernels.schrodinger_residual",
            module: "kernels",
            anchor: "i hbar dK/dt = -(hbar^2/2m) d2K/dq2 + V(q) K",
            runner: run_kernel_schrodinger,
        },
        RegisteredCheck {
            name: "kernels.momentum_state_quadrature",
            module: "kernels",
            anchor: "<Q;t|p> equals int dq conj(<q|Q;t>) <q|p>",
            runner: run_momentum_state,
        },
        RegisteredCheck {
            name: "kernels.number_state_quadrature",
            module: "kernels",
            anchor: "<Q;t|n> equals int dq conj(<q|Q;t>) <q|n>",
            runner: run_number_state_quadrature,
        },
        RegisteredCheck {
            name: "kernels.number_state_orthonormality",
            module: "kernels",
            anchor: "int dQ conj(<Q;t|m>) <Q;t|n> = delta_mn at every t",
            runner: run_number_state_orthonormality,
        },
        RegisteredCheck {
            name: "kernels.coherent_state_sum",
            module: "kernels",
            anchor: "<Q;t|z> closed form equals its number-basis expansion",
            runner: run_coherent_state,
        },
        RegisteredCheck {
            name: "kernels.fourier_duality",
            module: "kernels",
            anchor: "<q|P;t> is the Fourier transform of <q|Q;t> over Q",
            runner: run_fourier_duality,
        },
        RegisteredCheck {
            name: "kernels.packet_unitarity",
            module: "kernels",
            anchor: "kernel quadrature preserves inner products of packets",
            runner: run_packet_unitarity,
        },
        RegisteredCheck {
            name: "hj.residual",
            module: "hamilton_jacobi",
            anchor: "(1/2m)(dW/dq)^2 + V(q) + dW/dt = 0 for all four W",
            runner: run_hj_residual,
        },
        RegisteredCheck {
            name: "hj.f_consistency",
            module: "hamilton_jacobi",
            anchor: "F(t) = (1/2m) d2W/dq2, analytic vs finite differences",
            runner: run_f_consistency,
        },
        RegisteredCheck {
            name: "hj.semiclassical_schrodinger",
            module: "hamilton_jacobi",
            anchor: "psi = exp(iS/hbar) with S = W + i hbar int F dt solves the SE",
            runner: run_semiclassical_se,
        },
        RegisteredCheck {
            name: "hj.kernel_proportionality",
            module: "hamilton_jacobi",
            anchor: "exp(iS/hbar) is the kernel up to a constant factor",
            runner: run_kernel_proportionality,
        },
        RegisteredCheck {
            name: "hj.legendre_transform",
            module: "hamilton_jacobi",
            anchor: "W(q,P,t) = W(q,Q,t) + QP after eliminating Q via P = -dW/dQ",
            runner: run_legendre,
        },
        RegisteredCheck {
            name: "hj.canonical_derivative",
            module: "hamilton_jacobi",
            anchor: "p = dW/dq, P = -dW/dQ reproduce the comoving coordinates",
            runner: run_canonical_derivative,
        },
        RegisteredCheck {
            name: "hj.frame_constancy",
            module: "hamilton_jacobi",
            anchor: "Q(q(t),p(t),t) and P(q(t),p(t),t) are constants of motion",
            runner: run_frame_constancy,
        },
        RegisteredCheck {
            name: "hj.action_angle",
            module: "hamilton_jacobi",
            anchor: "{Q, P} = 1 for Q = atan2(m w q, p)/w - t, P = energy",
            runner: run_action_angle,
        },
    ]
}
