//! Dense operators on a grid.
//!
//! Two storage conventions coexist and are tracked by an explicit flag:
//! diagonal/matrix-type operators act as `mat * amp`, while kernel-type
//! operators discretize an integral kernel and act as `mat * amp * dq`.
//! `compose`/`apply` consult the flag so the dq weight is never applied
//! twice or dropped.

use faer::{Col, Mat};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hilbert::{Grid, WaveFunction};
use crate::params::SystemParams;

#[derive(Debug, Clone)]
pub struct DenseOperator {
    grid: Grid,
    mat: Mat<C64>,
    kernel_weighted: bool,
}

impl DenseOperator {
    pub fn new(grid: Grid, mat: Mat<C64>, kernel_weighted: bool) -> Result<Self> {
        if mat.nrows() != grid.n() || mat.ncols() != grid.n() {
            return Err(Error::GridMismatch);
        }
        Ok(Self { grid, mat, kernel_weighted })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn mat(&self) -> &Mat<C64> {
        &self.mat
    }

    pub fn kernel_weighted(&self) -> bool {
        self.kernel_weighted
    }

    pub fn identity(grid: Grid) -> Self {
        let mat = Mat::from_fn(grid.n(), grid.n(), |i, j| {
            if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        });
        Self { grid, mat, kernel_weighted: false }
    }

    pub fn diagonal(grid: Grid, f: impl Fn(f64) -> C64) -> Self {
        let mat = Mat::from_fn(grid.n(), grid.n(), |i, j| {
            if i == j { f(grid.point(i)) } else { C64::new(0.0, 0.0) }
        });
        Self { grid, mat, kernel_weighted: false }
    }

    /// Discretize an integral kernel `K(q, q')`; the operator acts as
    /// `sum_j K(q_i, q_j) psi_j dq`.
    pub fn from_kernel(grid: Grid, f: impl Fn(f64, f64) -> C64) -> Self {
        let mat = Mat::from_fn(grid.n(), grid.n(), |i, j| f(grid.point(i), grid.point(j)));
        Self { grid, mat, kernel_weighted: true }
    }

    pub fn apply(&self, psi: &WaveFunction) -> Result<WaveFunction> {
        if *psi.grid() != self.grid {
            return Err(Error::GridMismatch);
        }
        let mut out: Col<C64> = &self.mat * psi.amp();
        if self.kernel_weighted {
            let dq = C64::new(self.grid.dq(), 0.0);
            for j in 0..out.nrows() {
                out[j] *= dq;
            }
        }
        WaveFunction::from_amplitudes(self.grid, out)
    }

    /// The operator `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let mut mat = &self.mat * &other.mat;
        let kernel_weighted = self.kernel_weighted || other.kernel_weighted;
        if self.kernel_weighted && other.kernel_weighted {
            let dq = C64::new(self.grid.dq(), 0.0);
            for j in 0..mat.ncols() {
                for i in 0..mat.nrows() {
                    mat[(i, j)] *= dq;
                }
            }
        }
        Ok(Self { grid: self.grid, mat, kernel_weighted })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        ab.sub(&ba)
    }

    pub fn adjoint(&self) -> Self {
        Self {
            grid: self.grid,
            mat: self.mat.adjoint().to_owned(),
            kernel_weighted: self.kernel_weighted,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.grid != other.grid || self.kernel_weighted != other.kernel_weighted {
            return Err(Error::GridMismatch);
        }
        let mat = Mat::from_fn(self.mat.nrows(), self.mat.ncols(), |i, j| {
            f(self.mat[(i, j)], other.mat[(i, j)])
        });
        Ok(Self { grid: self.grid, mat, kernel_weighted: self.kernel_weighted })
    }

    pub fn scaled(&self, c: C64) -> Self {
        let mat = Mat::from_fn(self.mat.nrows(), self.mat.ncols(), |i, j| self.mat[(i, j)] * c);
        Self { grid: self.grid, mat, kernel_weighted: self.kernel_weighted }
    }

    /// `<psi| A |psi>`.
    pub fn expectation(&self, psi: &WaveFunction) -> Result<C64> {
        let a_psi = self.apply(psi)?;
        crate::hilbert::inner_product(psi, &a_psi)
    }

    /// Max-norm deviation from `A = A^dagger`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.mat.nrows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..=i {
                let d = (self.mat[(i, j)] - self.mat[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.norm_l2()
    }

    /// Replace the matrix by its Hermitian part; cleans up roundoff in
    /// constructions that are Hermitian by design.
    pub(crate) fn symmetrize(&mut self) {
        let n = self.mat.nrows();
        for i in 0..n {
            for j in 0..i {
                let avg = 0.5 * (self.mat[(i, j)] + self.mat[(j, i)].conj());
                self.mat[(i, j)] = avg;
                self.mat[(j, i)] = avg.conj();
            }
            let d = self.mat[(i, i)];
            self.mat[(i, i)] = C64::new(d.re, 0.0);
        }
    }
}

/// The position operator, diagonal with entries `q_j`.
pub fn position_operator(grid: Grid) -> DenseOperator {
    DenseOperator::diagonal(grid, |q| C64::new(q, 0.0))
}

/// Unitary DFT matrix in FFT ordering, `W[l, j] = exp(-i k_l q_j) / sqrt(n)`
/// up to a column phase that cancels in `W^dagger D W` sandwiches.
fn dft_matrix(grid: &Grid) -> Mat<C64> {
    let n = grid.n();
    let norm = 1.0 / (n as f64).sqrt();
    Mat::from_fn(n, n, |l, j| {
        let theta = -2.0 * std::f64::consts::PI * (l as f64) * (j as f64) / n as f64;
        C64::new(0.0, theta).exp() * norm
    })
}

/// Sandwich `W^dagger diag(d) W` for a real spectral symbol `d(k)`.
fn spectral_operator(grid: &Grid, symbol: impl Fn(f64) -> f64) -> DenseOperator {
    let w = dft_matrix(grid);
    let k = grid.wavenumbers();
    let n = grid.n();
    let dw = Mat::from_fn(n, n, |l, j| w[(l, j)] * C64::new(symbol(k[l]), 0.0));
    let mat = w.adjoint() * &dw;
    let mut op = DenseOperator { grid: *grid, mat, kernel_weighted: false };
    op.symmetrize();
    op
}

/// The momentum operator `-i hbar d/dq` realized as the exact spectral
/// derivative of the periodic discretization.
pub fn momentum_operator(grid: Grid, hbar: f64) -> DenseOperator {
    spectral_operator(&grid, |k| hbar * k)
}

/// `p^2/2m`, plus `m w^2 q^2 / 2` for the oscillator.
pub fn hamiltonian(params: &SystemParams, grid: Grid) -> DenseOperator {
    let m = params.mass;
    let hbar = params.hbar;
    let mut h = spectral_operator(&grid, |k| hbar * hbar * k * k / (2.0 * m));
    if let Some(omega) = params.omega() {
        let v = DenseOperator::diagonal(grid, |q| C64::new(0.5 * m * omega * omega * q * q, 0.0));
        h = h.add(&v).expect("same grid");
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{inner_product, DeltaKind};

    fn grid() -> Grid {
        Grid::new(-20.0, 20.0, 256).unwrap()
    }

    #[test]
    fn position_on_delta_is_eigenvalue() {
        let g = grid();
        let q_op = position_operator(g);
        let j = g.nearest_index(3.0).unwrap();
        let d = WaveFunction::delta(g, g.point(j), DeltaKind::Raw).unwrap();
        let qd = q_op.apply(&d).unwrap();
        let expected = d.scaled(C64::new(g.point(j), 0.0));
        assert!(qd.sub(&expected).unwrap().norm() < 1e-12);
        let e = q_op.expectation(&d).unwrap() / inner_product(&d, &d).unwrap();
        assert!((e.re - g.point(j)).abs() < 1e-12);
    }

    #[test]
    fn position_expectation_of_centered_packet() {
        let g = grid();
        let psi = WaveFunction::gaussian_packet(g, 2.0, 0.0, 1.0, 1.0).unwrap();
        let q_op = position_operator(g);
        let e = q_op.expectation(&psi).unwrap();
        assert!((e.re - 2.0).abs() < 1e-10);
        // variance
        let q2 = q_op.compose(&q_op).unwrap();
        let e2 = q2.expectation(&psi).unwrap();
        assert!((e2.re - e.re * e.re - 1.0).abs() < 1e-9);
    }

    #[test]
    fn momentum_is_exact_on_fourier_modes() {
        let g = grid();
        let k = g.wavenumbers()[5];
        let psi = WaveFunction::from_fn(g, |q| C64::new(0.0, k * q).exp());
        let p = momentum_operator(g, 1.0);
        let p_psi = p.apply(&psi).unwrap();
        let expected = psi.scaled(C64::new(k, 0.0));
        assert!(p_psi.sub(&expected).unwrap().norm() / psi.norm() < 1e-10);
    }

    #[test]
    fn momentum_expectation_of_boosted_packet() {
        let g = grid();
        let p = momentum_operator(g, 1.0);
        let real_packet = WaveFunction::gaussian_packet(g, 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(p.expectation(&real_packet).unwrap().norm() < 1e-10);
        let boosted = WaveFunction::gaussian_packet(g, 0.0, 1.5, 1.0, 1.0).unwrap();
        let e = p.expectation(&boosted).unwrap();
        assert!((e.re - 1.5).abs() < 1e-9);
        assert!(e.im.abs() < 1e-10);
    }

    #[test]
    fn operators_are_hermitian() {
        let g = grid();
        assert!(position_operator(g).hermiticity_deviation() < 1e-10);
        assert!(momentum_operator(g, 1.0).hermiticity_deviation() < 1e-10);
        let params = SystemParams::harmonic(1.0, 1.0, 1.0).unwrap();
        assert!(hamiltonian(&params, g).hermiticity_deviation() < 1e-10);
    }

    #[test]
    fn free_hamiltonian_on_plane_wave() {
        let g = grid();
        let params = SystemParams::free(1.0, 1.0).unwrap();
        let h = hamiltonian(&params, g);
        let k = g.wavenumbers()[9];
        let psi = WaveFunction::from_fn(g, |q| C64::new(0.0, k * q).exp());
        let h_psi = h.apply(&psi).unwrap();
        let expected = psi.scaled(C64::new(0.5 * k * k, 0.0));
        assert!(h_psi.sub(&expected).unwrap().norm() / psi.norm() < 1e-10);
    }

    #[test]
    fn oscillator_ground_state_energy() {
        let g = grid();
        let params = SystemParams::harmonic(1.0, 1.0, 1.0).unwrap();
        let h = hamiltonian(&params, g);
        // analytic ground state, sigma^2 = hbar/(2 m w) = 1/2
        let psi = WaveFunction::gaussian_packet(g, 0.0, 0.0, (0.5_f64).sqrt(), 1.0).unwrap();
        let e = h.expectation(&psi).unwrap();
        assert!((e.re - 0.5).abs() < 1e-10);
    }

    #[test]
    fn commutator_of_operator_with_itself_vanishes() {
        let g = grid();
        let q_op = position_operator(g);
        let c = q_op.commutator(&q_op).unwrap();
        assert!(c.frobenius_norm() < 1e-14);
    }

    #[test]
    fn canonical_commutator_on_interior_packet() {
        let g = grid();
        let q_op = position_operator(g);
        let p_op = momentum_operator(g, 1.0);
        let c = q_op.commutator(&p_op).unwrap();
        let psi = WaveFunction::gaussian_packet(g, 0.0, 0.5, 1.0, 1.0).unwrap();
        let e = c.expectation(&psi).unwrap();
        assert!((e - C64::new(0.0, 1.0)).norm() < 1e-8);
    }

    #[test]
    fn kernel_weighted_composition_keeps_dq_bookkeeping() {
        let g = grid();
        // A Gaussian smoothing kernel applied twice equals a wider one.
        let w = 0.5_f64;
        let smooth = |width: f64| {
            DenseOperator::from_kernel(g, move |q, qp| {
                let norm = 1.0 / (width * (2.0 * std::f64::consts::PI).sqrt());
                C64::new(norm * (-(q - qp).powi(2) / (2.0 * width * width)).exp(), 0.0)
            })
        };
        let once = smooth(w);
        let twice = once.compose(&once).unwrap();
        assert!(twice.kernel_weighted());
        let wider = smooth(w * (2.0_f64).sqrt());
        let psi = WaveFunction::gaussian_packet(g, 0.0, 0.0, 1.0, 1.0).unwrap();
        let a = twice.apply(&psi).unwrap();
        let b = wider.apply(&psi).unwrap();
        assert!(a.sub(&b).unwrap().norm() < 1e-9);
    }
}
