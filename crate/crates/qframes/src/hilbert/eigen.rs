//! Hermitian eigendecomposition and unitary matrix exponentials.

use faer::{Col, Mat, Side};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hilbert::{DenseOperator, Grid, WaveFunction};

/// Cached eigendecomposition `H = V diag(values) V^dagger` of a Hermitian
/// operator. Building the decomposition is the expensive step; every
/// `exp(-i theta H)` afterwards costs two matrix products.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    grid: Grid,
    values: Vec<f64>,
    vectors: Mat<C64>,
}

impl HermitianEigen {
    pub fn new(op: &DenseOperator) -> Result<Self> {
        let scale = op.frobenius_norm().max(1.0);
        let dev = op.hermiticity_deviation();
        if dev > 1e-10 * scale {
            return Err(Error::NonHermitian(dev));
        }
        let eig = op
            .mat()
            .self_adjoint_eigen(Side::Lower)
            .map_err(|e| Error::InvalidParams(format!("eigendecomposition failed: {e:?}")))?;
        let n = op.grid().n();
        let values = (0..n).map(|i| eig.S()[i].re).collect();
        Ok(Self {
            grid: *op.grid(),
            values,
            vectors: eig.U().to_owned(),
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Eigenvalues in nondecreasing order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Orthonormal eigenvectors as matrix columns (lattice convention:
    /// entries are raw amplitudes, `sum |v_j|^2 = 1` without the dq weight).
    pub fn vectors(&self) -> &Mat<C64> {
        &self.vectors
    }

    /// `exp(-i theta H)` as a dense unitary.
    pub fn unitary_exp(&self, theta: f64) -> DenseOperator {
        let n = self.grid.n();
        let phased = Mat::from_fn(n, n, |i, j| {
            self.vectors[(i, j)] * C64::new(0.0, -theta * self.values[j]).exp()
        });
        let mat = &phased * self.vectors.adjoint();
        DenseOperator::new(self.grid, mat, false).expect("square by construction")
    }

    /// Apply `exp(-i theta H)` to a state without forming the matrix.
    pub fn apply_exp(&self, theta: f64, psi: &WaveFunction) -> Result<WaveFunction> {
        if psi.grid() != &self.grid {
            return Err(Error::GridMismatch);
        }
        let mut coeffs: Col<C64> = self.vectors.adjoint() * psi.amp();
        for j in 0..coeffs.nrows() {
            coeffs[j] *= C64::new(0.0, -theta * self.values[j]).exp();
        }
        let amp = &self.vectors * &coeffs;
        WaveFunction::from_amplitudes(self.grid, amp)
    }
}

/// `exp(-i theta H)` for a Hermitian `H`, via eigendecomposition.
///
/// For repeated exponentials of the same operator, build a
/// [`HermitianEigen`] once and call [`HermitianEigen::unitary_exp`].
pub fn matrix_exponential_unitary(h: &DenseOperator, theta: f64) -> Result<DenseOperator> {
    Ok(HermitianEigen::new(h)?.unitary_exp(theta))
}
