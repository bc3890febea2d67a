//! Residual computations for the moving frame.

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::evolution::{InteriorSubspace, MovingFrame, Propagator};
use crate::hilbert::{momentum_operator, position_operator, DenseOperator, Grid, WaveFunction};
use crate::params::{System, SystemParams};

/// Closed-form transformed position: `q - (t/m) p` for the free particle,
/// `q cos(wt) - (p / m w) sin(wt)` for the oscillator.
pub fn closed_form_q(params: &SystemParams, grid: Grid, t: f64) -> DenseOperator {
    let q = position_operator(grid);
    let p = momentum_operator(grid, params.hbar);
    match params.system {
        System::Free => {
            let re = |x: f64| C64::new(x, 0.0);
            q.add(&p.scaled(re(-t / params.mass))).unwrap()
        }
        System::Harmonic { omega } => {
            let (s, c) = (omega * t).sin_cos();
            q.scaled(C64::new(c, 0.0))
                .add(&p.scaled(C64::new(-s / (params.mass * omega), 0.0)))
                .unwrap()
        }
    }
}

/// Closed-form transformed momentum: `p` for the free particle,
/// `m w q sin(wt) + p cos(wt)` for the oscillator.
pub fn closed_form_p(params: &SystemParams, grid: Grid, t: f64) -> DenseOperator {
    let q = position_operator(grid);
    let p = momentum_operator(grid, params.hbar);
    match params.system {
        System::Free => p,
        System::Harmonic { omega } => {
            let (s, c) = (omega * t).sin_cos();
            q.scaled(C64::new(params.mass * omega * s, 0.0))
                .add(&p.scaled(C64::new(c, 0.0)))
                .unwrap()
        }
    }
}

/// Interior-subspace Frobenius distance between the numerically transformed
/// operators and their closed forms; the larger of the Q and P distances.
pub fn closed_form_operator_residual(frame: &MovingFrame, sub: &InteriorSubspace) -> Result<f64> {
    let params = frame.params();
    let grid = *frame.grid();
    let dq = frame.q_moving().sub(&closed_form_q(params, grid, frame.t()))?;
    let dp = frame.p_moving().sub(&closed_form_p(params, grid, frame.t()))?;
    let rq = sub.restricted_frobenius(&dq)?;
    let rp = sub.restricted_frobenius(&dp)?;
    Ok(rq.max(rp))
}

/// Max over test states of `|<psi|[Q(t), P(t)]|psi> - i hbar|`.
pub fn commutator_residual(frame: &MovingFrame, states: &[WaveFunction]) -> Result<f64> {
    let comm = frame.q_moving().commutator(frame.p_moving())?;
    let target = C64::new(0.0, frame.params().hbar);
    let mut worst: f64 = 0.0;
    for psi in states {
        let e = comm.expectation(psi)?;
        worst = worst.max((e - target).norm());
    }
    Ok(worst)
}

/// How the time derivative of `T^dagger` is obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivativeMode {
    /// `d/dt T^dagger = (i/hbar) H T^dagger`, exact for time-independent H.
    Analytic,
    /// Central differences of the matrix exponential.
    FiniteDifference { dt: f64 },
}

/// Residual of the transformed Hamiltonian
/// `K(t) = T^dagger H T + i hbar (d/dt T^dagger) T`,
/// restricted to the interior subspace and normalized by the restricted
/// Frobenius norm of H (which sets the scale of both terms).
pub fn transformed_hamiltonian_residual(
    prop: &Propagator,
    t: f64,
    mode: DerivativeMode,
    sub: &InteriorSubspace,
) -> Result<f64> {
    let hbar = prop.params().hbar;
    let h = prop.hamiltonian_op();
    let t_op = prop.evolution_operator(t);
    let t_dag = t_op.adjoint();
    let dtdag = match mode {
        DerivativeMode::Analytic => h.compose(&t_dag)?.scaled(C64::new(0.0, 1.0 / hbar)),
        DerivativeMode::FiniteDifference { dt } => {
            let plus = prop.evolution_operator(t + dt).adjoint();
            let minus = prop.evolution_operator(t - dt).adjoint();
            plus.sub(&minus)?.scaled(C64::new(1.0 / (2.0 * dt), 0.0))
        }
    };
    let k = t_dag
        .compose(h)?
        .compose(&t_op)?
        .add(&dtdag.compose(&t_op)?.scaled(C64::new(0.0, hbar)))?;
    let num = sub.restricted_frobenius(&k)?;
    let den = sub.restricted_frobenius(h)?;
    Ok(num / den)
}

/// `max_t || Psi(.,t) - Psi(.,0) ||_2` where `Psi(.,t) = T^dagger(t) T(t) psi`.
pub fn time_independence_residual(
    prop: &Propagator,
    psi_initial: &WaveFunction,
    times: &[f64],
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &t in times {
        let frame = prop.frame(t);
        let moving = frame.moving_wavefunction(psi_initial)?;
        worst = worst.max(moving.sub(psi_initial)?.norm());
    }
    Ok(worst)
}

/// `|| T(t1) T(t2) - T(t1 + t2) ||_F`.
pub fn group_law_residual(prop: &Propagator, t1: f64, t2: f64) -> Result<f64> {
    let a = prop.evolution_operator(t1);
    let b = prop.evolution_operator(t2);
    let ab = a.compose(&b)?;
    let c = prop.evolution_operator(t1 + t2);
    Ok(ab.sub(&c)?.frobenius_norm())
}

/// `|| T^dagger T - 1 ||_F` at time t.
pub fn unitarity_residual(prop: &Propagator, t: f64) -> Result<f64> {
    let t_op = prop.evolution_operator(t);
    let prod = t_op.adjoint().compose(&t_op)?;
    let id = DenseOperator::identity(*prop.grid());
    Ok(prod.sub(&id)?.frobenius_norm())
}

/// Heisenberg duality: `T^dagger(t) q T(t)` equals the moving-frame Q at -t.
pub fn heisenberg_duality_residual(prop: &Propagator, t: f64) -> Result<f64> {
    let t_op = prop.evolution_operator(t);
    let heisenberg = t_op
        .adjoint()
        .compose(prop.position_op())?
        .compose(&t_op)?;
    let frame = prop.frame(-t);
    Ok(heisenberg.sub(frame.q_moving())?.frobenius_norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::make_frame;
    use crate::hilbert::DeltaKind;
    use crate::tolerances;

    fn free_params() -> SystemParams {
        SystemParams::free(1.0, 1.0).unwrap()
    }

    fn harmonic_params() -> SystemParams {
        SystemParams::harmonic(1.0, 1.0, 1.0).unwrap()
    }

    fn grid() -> Grid {
        Grid::new(-28.0, 28.0, 384).unwrap()
    }

    fn interior_packets(grid: Grid) -> Vec<WaveFunction> {
        [(0.0, 0.0), (2.0, 0.5), (-3.0, -1.0), (1.0, 1.5), (-1.5, 0.8)]
            .iter()
            .map(|&(q0, p0)| WaveFunction::gaussian_packet(grid, q0, p0, 1.0, 1.0).unwrap())
            .collect()
    }

    #[test]
    fn frame_at_time_zero_is_static() {
        let frame = make_frame(free_params(), grid(), 0.0).unwrap();
        let q = position_operator(grid());
        let p = momentum_operator(grid(), 1.0);
        assert!(frame.q_moving().sub(&q).unwrap().frobenius_norm() < 1e-10);
        assert!(frame.p_moving().sub(&p).unwrap().frobenius_norm() < 1e-10);
    }

    #[test]
    fn free_momentum_is_conserved() {
        let prop = Propagator::new(free_params(), grid()).unwrap();
        let frame = prop.frame(0.8);
        let p = momentum_operator(grid(), 1.0);
        assert!(frame.p_moving().sub(&p).unwrap().frobenius_norm() < 1e-9);
    }

    #[test]
    fn quarter_period_swaps_q_and_p_on_interior_states() {
        let params = harmonic_params();
        let g = grid();
        let prop = Propagator::new(params, g).unwrap();
        let frame = prop.frame(std::f64::consts::FRAC_PI_2);
        // Q(pi/2) ~ -p, P(pi/2) ~ q on interior packets
        let p = momentum_operator(g, 1.0);
        let q = position_operator(g);
        for psi in interior_packets(g) {
            let a = frame.q_moving().expectation(&psi).unwrap();
            let b = p.expectation(&psi).unwrap();
            assert!((a + b).norm() < 1e-8);
            let c = frame.p_moving().expectation(&psi).unwrap();
            let d = q.expectation(&psi).unwrap();
            assert!((c - d).norm() < 1e-8);
        }
    }

    #[test]
    fn closed_form_operators_free() {
        let params = free_params();
        let g = grid();
        let prop = Propagator::new(params, g).unwrap();
        let sub = InteriorSubspace::free_interior(&params, &g, 0.5).unwrap();
        let frame = prop.frame(0.5);
        let r = closed_form_operator_residual(&frame, &sub).unwrap();
        assert!(r < tolerances::CLOSED_FORM_OPERATORS, "residual {r}");
        // t = 0 distance vanishes
        let frame0 = prop.frame(0.0);
        let r0 = closed_form_operator_residual(&frame0, &sub).unwrap();
        assert!(r0 < 1e-10, "residual {r0}");
    }

    #[test]
    fn closed_form_operators_harmonic_half_period() {
        let params = harmonic_params();
        let g = grid();
        let prop = Propagator::new(params, g).unwrap();
        let sub = InteriorSubspace::harmonic_interior(&params, &g, prop.eigen()).unwrap();
        // wt = pi: Q = -q, P = -p
        let frame = prop.frame(std::f64::consts::PI);
        let r = closed_form_operator_residual(&frame, &sub).unwrap();
        assert!(r < tolerances::CLOSED_FORM_OPERATORS, "residual {r}");
    }

    #[test]
    fn commutator_preserved_in_the_frame() {
        let g = grid();
        let packets = interior_packets(g);
        for (params, t) in [(free_params(), 1.0), (harmonic_params(), 0.4)] {
            let prop = Propagator::new(params, g).unwrap();
            let frame = prop.frame(t);
            let r = commutator_residual(&frame, &packets).unwrap();
            assert!(r < tolerances::COMMUTATOR_WEAK, "residual {r} at t={t}");
        }
    }

    #[test]
    fn transformed_hamiltonian_vanishes() {
        let g = grid();
        for params in [free_params(), harmonic_params()] {
            let prop = Propagator::new(params, g).unwrap();
            let sub =
                InteriorSubspace::for_system(&params, &g, prop.eigen(), 0.5).unwrap();
            let ra = transformed_hamiltonian_residual(&prop, 0.5, DerivativeMode::Analytic, &sub)
                .unwrap();
            assert!(ra < tolerances::TRANSFORMED_H_ANALYTIC, "analytic residual {ra}");
            let dt = tolerances::TRANSFORMED_H_FD_DT;
            let rf = transformed_hamiltonian_residual(
                &prop,
                0.5,
                DerivativeMode::FiniteDifference { dt },
                &sub,
            )
            .unwrap();
            assert!(rf < tolerances::TRANSFORMED_H_FD, "fd residual {rf}");
            // O(dt^2): halving dt should shrink the residual ~4x (allow slack)
            let rf_half = transformed_hamiltonian_residual(
                &prop,
                0.5,
                DerivativeMode::FiniteDifference { dt: dt / 2.0 },
                &sub,
            )
            .unwrap();
            assert!(rf_half < rf / 3.0, "no dt^2 scaling: {rf} -> {rf_half}");
        }
    }

    #[test]
    fn moving_states_are_time_independent() {
        let g = grid();
        let psi = WaveFunction::gaussian_packet(g, 1.0, 0.5, 1.0, 1.0).unwrap();
        for (params, times) in [
            (free_params(), vec![0.2, 0.5, 1.0]),
            (harmonic_params(), vec![0.3, 0.9]),
        ] {
            let prop = Propagator::new(params, g).unwrap();
            let r = time_independence_residual(&prop, &psi, &times).unwrap();
            assert!(r < tolerances::TIME_INDEPENDENCE, "residual {r}");
        }
    }

    #[test]
    fn group_law_and_unitarity() {
        let prop = Propagator::new(harmonic_params(), grid()).unwrap();
        assert!(group_law_residual(&prop, 0.3, 0.4).unwrap() < tolerances::GROUP_LAW);
        assert!(unitarity_residual(&prop, 0.7).unwrap() < tolerances::UNITARITY);
    }

    #[test]
    fn heisenberg_runs_opposite_to_the_frame() {
        for params in [free_params(), harmonic_params()] {
            let prop = Propagator::new(params, grid()).unwrap();
            let r = heisenberg_duality_residual(&prop, 0.6).unwrap();
            assert!(r < tolerances::HEISENBERG_DUALITY, "residual {r}");
        }
    }

    #[test]
    fn moving_base_state_solves_the_eigen_relation() {
        let g = grid();
        let prop = Propagator::new(free_params(), g).unwrap();
        let frame = prop.frame(0.5);
        // Raw lattice deltas are exact eigenvectors of q, hence of Q(t).
        for q in [-6.0, -3.0, -1.0, 0.0, 0.5, 1.5, 2.5, 4.0, 5.5, 7.0] {
            let r = frame.base_state_eigen_residual(q, DeltaKind::Raw).unwrap();
            assert!(r < tolerances::MOVING_BASE_EIGEN, "residual {r} at Q={q}");
        }
        // t = 0: the base state is the delta itself
        let kind = DeltaKind::default_smoothed(&g);
        let frame0 = prop.frame(0.0);
        let d = WaveFunction::delta(g, 1.0, kind).unwrap();
        let s = frame0.moving_base_state(1.0, kind).unwrap();
        assert!(s.sub(&d).unwrap().norm() < 1e-10);
    }

    #[test]
    fn moving_base_overlaps_are_unitarily_invariant() {
        let g = grid();
        let prop = Propagator::new(harmonic_params(), g).unwrap();
        let frame = prop.frame(0.7);
        let kind = DeltaKind::default_smoothed(&g);
        let a0 = WaveFunction::delta(g, 0.5, kind).unwrap();
        let b0 = WaveFunction::delta(g, 1.1, kind).unwrap();
        let at = frame.moving_base_state(0.5, kind).unwrap();
        let bt = frame.moving_base_state(1.1, kind).unwrap();
        let before = crate::hilbert::inner_product(&a0, &b0).unwrap();
        let after = crate::hilbert::inner_product(&at, &bt).unwrap();
        assert!((before - after).norm() < 1e-9);
    }
}
