//! Interior phase-space subspaces for operator-norm checks.
//!
//! Truncated lattice operators satisfy continuum identities only on states
//! that stay away from both the spatial boundary and the spectral edge —
//! and keep doing so while evolved. Plane-wave modes wrap around the
//! periodic boundary and feel the sawtooth jump of the position operator,
//! so a pure Fourier-mode projector does not work even for the free
//! particle. Instead the subspace is spanned by low-lying eigenvectors of
//! a confining reference oscillator (the system's own Hamiltonian in the
//! harmonic case), which are localized in position and momentum at once.

use faer::Mat;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hilbert::{hamiltonian, DenseOperator, Grid, HermitianEigen};
use crate::params::SystemParams;

/// Fraction of the grid-faithful spectrum retained in the subspace.
const INTERIOR_FRACTION: f64 = 0.6;
/// Fraction of the grid's position/momentum capacity a state may occupy.
const CAPACITY_MARGIN: f64 = 0.8;

#[derive(Debug, Clone)]
pub struct InteriorSubspace {
    grid: Grid,
    /// n x m matrix with orthonormal columns.
    basis: Mat<C64>,
}

impl InteriorSubspace {
    /// Span of the lowest `count` eigenvectors of a decomposition.
    pub fn from_lowest(eigen: &HermitianEigen, count: usize) -> Result<Self> {
        let n = eigen.grid().n();
        if count == 0 || count > n {
            return Err(Error::InvalidParams(format!(
                "subspace dimension {count} out of range for grid of {n} points"
            )));
        }
        let basis = Mat::from_fn(n, count, |i, j| eigen.vectors()[(i, j)]);
        Ok(Self { grid: *eigen.grid(), basis })
    }

    /// Interior subspace for the oscillator: the lowest 60% of the
    /// Hamiltonian eigenvectors that the grid represents faithfully, i.e.
    /// whose classical turning points in q and p sit well inside the grid.
    pub fn harmonic_interior(params: &SystemParams, grid: &Grid, eigen: &HermitianEigen) -> Result<Self> {
        let omega = params
            .omega()
            .ok_or_else(|| Error::Unsupported("harmonic_interior needs an oscillator".into()))?;
        let m = params.mass;
        let hbar = params.hbar;
        let q_cap = CAPACITY_MARGIN * grid.q_min().abs().min(grid.q_max());
        let p_cap = CAPACITY_MARGIN * hbar * grid.k_max();
        let e_cap = (0.5 * m * omega * omega * q_cap * q_cap).min(p_cap * p_cap / (2.0 * m));
        let faithful = eigen.values().iter().filter(|&&e| e < e_cap).count();
        let count = ((faithful as f64 * INTERIOR_FRACTION) as usize).max(1);
        Self::from_lowest(eigen, count)
    }

    /// Interior subspace for the free particle: low-lying eigenvectors of a
    /// reference oscillator whose phase-space extent, after free evolution
    /// up to `t_max`, still fits inside the grid.
    pub fn free_interior(params: &SystemParams, grid: &Grid, t_max: f64) -> Result<Self> {
        let m = params.mass;
        let hbar = params.hbar;
        let q_half = grid.q_min().abs().min(grid.q_max());
        // Balance position and momentum extents: x0^2 = q_half / k_max.
        let omega_ref = hbar * grid.k_max() / (m * q_half);
        let x0 = (hbar / (m * omega_ref)).sqrt();
        let t_max = t_max.abs();
        // sqrt(2M+1) * x0 * (1 + omega_ref * t) <= margin * q_half  and
        // sqrt(2M+1) * hbar / x0 <= margin * hbar * k_max
        let r_q = CAPACITY_MARGIN * q_half / (x0 * (1.0 + omega_ref * t_max));
        let r_p = CAPACITY_MARGIN * grid.k_max() * x0;
        let r = r_q.min(r_p);
        let count = (((r * r - 1.0) / 2.0) as usize).max(1);
        let reference = SystemParams::harmonic(m, omega_ref, hbar)?;
        let eigen = HermitianEigen::new(&hamiltonian(&reference, *grid))?;
        Self::from_lowest(&eigen, count)
    }

    /// Build the subspace appropriate for the system.
    pub fn for_system(
        params: &SystemParams,
        grid: &Grid,
        eigen: &HermitianEigen,
        t_max: f64,
    ) -> Result<Self> {
        if params.is_harmonic() {
            Self::harmonic_interior(params, grid, eigen)
        } else {
            Self::free_interior(params, grid, t_max)
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn basis(&self) -> &Mat<C64> {
        &self.basis
    }

    /// Frobenius norm of `B^dagger A B`, the restriction of `A` to the
    /// subspace.
    pub fn restricted_frobenius(&self, op: &DenseOperator) -> Result<f64> {
        if *op.grid() != self.grid {
            return Err(Error::GridMismatch);
        }
        let ab = op.mat() * &self.basis;
        let restricted = self.basis.adjoint() * &ab;
        Ok(restricted.norm_l2())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::position_operator;

    #[test]
    fn harmonic_subspace_stays_inside_grid_capacity() {
        let grid = Grid::new(-20.0, 20.0, 256).unwrap();
        let params = SystemParams::harmonic(1.0, 1.0, 1.0).unwrap();
        let eigen = HermitianEigen::new(&hamiltonian(&params, grid)).unwrap();
        let sub = InteriorSubspace::harmonic_interior(&params, &grid, &eigen).unwrap();
        assert!(sub.dim() > 10);
        // highest retained state still has turning point within 80% of grid
        let e_top = eigen.values()[sub.dim() - 1];
        assert!((2.0 * e_top).sqrt() <= 0.8 * 20.0 + 1e-9);
    }

    #[test]
    fn restriction_of_identity_has_sqrt_m_norm() {
        let grid = Grid::new(-20.0, 20.0, 128).unwrap();
        let params = SystemParams::harmonic(1.0, 1.0, 1.0).unwrap();
        let eigen = HermitianEigen::new(&hamiltonian(&params, grid)).unwrap();
        let sub = InteriorSubspace::from_lowest(&eigen, 10).unwrap();
        let id = DenseOperator::identity(grid);
        let norm = sub.restricted_frobenius(&id).unwrap();
        assert!((norm - (10.0_f64).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn free_subspace_is_spatially_interior() {
        let grid = Grid::new(-25.0, 25.0, 256).unwrap();
        let params = SystemParams::free(1.0, 1.0).unwrap();
        let sub = InteriorSubspace::free_interior(&params, &grid, 1.0).unwrap();
        assert!(sub.dim() > 5);
        // the projected position operator is bounded by the interior margin
        let q_op = position_operator(grid);
        let norm = sub.restricted_frobenius(&q_op).unwrap();
        assert!(norm / (sub.dim() as f64).sqrt() < 0.8 * 25.0);
    }
}
