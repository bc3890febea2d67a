//! States on a grid, with continuum normalization `sum |amp|^2 dq = 1`.

use faer::Col;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::hilbert::Grid;

/// How a position eigenstate |Q> is realized on the lattice.
///
/// The raw delta puts amplitude `1/dq` on the nearest grid point; the
/// smoothed delta is a unit-integral Gaussian of the given width. Kernel
/// comparisons use the smoothed form to avoid UV artifacts, eigen-residual
/// checks accept either.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeltaKind {
    Raw,
    Smoothed { width: f64 },
}

impl DeltaKind {
    /// The default smoothing width, three lattice spacings.
    pub fn default_smoothed(grid: &Grid) -> Self {
        DeltaKind::Smoothed { width: 3.0 * grid.dq() }
    }
}

#[derive(Debug, Clone)]
pub struct WaveFunction {
    grid: Grid,
    amp: Col<C64>,
}

impl WaveFunction {
    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> C64) -> Self {
        let amp = Col::from_fn(grid.n(), |j| f(grid.point(j)));
        Self { grid, amp }
    }

    pub fn from_amplitudes(grid: Grid, amp: Col<C64>) -> Result<Self> {
        if amp.nrows() != grid.n() {
            return Err(Error::GridMismatch);
        }
        Ok(Self { grid, amp })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn amp(&self) -> &Col<C64> {
        &self.amp
    }

    pub fn amp_mut(&mut self) -> &mut Col<C64> {
        &mut self.amp
    }

    /// L2 norm with the dq weight: `sqrt(sum |amp|^2 dq)`.
    pub fn norm(&self) -> f64 {
        self.amp.norm_l2() * self.grid.dq().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        let amp = Col::from_fn(self.amp.nrows(), |j| self.amp[j] / n);
        Self { grid: self.grid, amp }
    }

    pub fn scaled(&self, c: C64) -> Self {
        let amp = Col::from_fn(self.amp.nrows(), |j| self.amp[j] * c);
        Self { grid: self.grid, amp }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let amp = Col::from_fn(self.amp.nrows(), |j| self.amp[j] - other.amp[j]);
        Ok(Self { grid: self.grid, amp })
    }

    /// Normalized Gaussian packet `exp(-(q-q0)^2/(4 sigma^2) + i p0 q / hbar)`.
    ///
    /// Checks that rely on continuum identities expect the support to stay
    /// at least `5 sigma` away from the grid boundary; see
    /// [`WaveFunction::gaussian_is_interior`].
    pub fn gaussian_packet(grid: Grid, q0: f64, p0: f64, sigma: f64, hbar: f64) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(Error::InvalidParams(format!("sigma must be positive, got {sigma}")));
        }
        let psi = Self::from_fn(grid, |q| {
            let envelope = (-(q - q0).powi(2) / (4.0 * sigma * sigma)).exp();
            let phase = C64::new(0.0, p0 * q / hbar).exp();
            phase * envelope
        });
        Ok(psi.normalized())
    }

    /// Whether a packet at `q0` with width `sigma` is supported at least
    /// `5 sigma` inside the grid.
    pub fn gaussian_is_interior(grid: &Grid, q0: f64, sigma: f64) -> bool {
        q0 - 5.0 * sigma >= grid.q_min() && q0 + 5.0 * sigma <= grid.q_max()
    }

    /// Lattice realization of a position eigenstate |Q>.
    pub fn delta(grid: Grid, q: f64, kind: DeltaKind) -> Result<Self> {
        if !grid.contains(q) {
            return Err(Error::OutsideGrid(q));
        }
        match kind {
            DeltaKind::Raw => {
                let j = grid.nearest_index(q)?;
                let mut amp = Col::<C64>::zeros(grid.n());
                amp[j] = C64::new(1.0 / grid.dq(), 0.0);
                Ok(Self { grid, amp })
            }
            DeltaKind::Smoothed { width } => {
                let norm = 1.0 / (width * (2.0 * std::f64::consts::PI).sqrt());
                Ok(Self::from_fn(grid, |x| {
                    C64::new(norm * (-(x - q).powi(2) / (2.0 * width * width)).exp(), 0.0)
                }))
            }
        }
    }
}

/// `<bra|ket> = sum conj(bra_j) ket_j dq`.
pub fn inner_product(bra: &WaveFunction, ket: &WaveFunction) -> Result<C64> {
    if bra.grid != ket.grid {
        return Err(Error::GridMismatch);
    }
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..bra.amp.nrows() {
        acc += bra.amp[j].conj() * ket.amp[j];
    }
    Ok(acc * bra.grid.dq())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::new(-20.0, 20.0, 512).unwrap()
    }

    #[test]
    fn gaussian_packet_is_normalized() {
        let psi = WaveFunction::gaussian_packet(grid(), 0.0, 1.5, 1.0, 1.0).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-10);
        let ip = inner_product(&psi, &psi).unwrap();
        assert!((ip.re - 1.0).abs() < 1e-10);
        assert!(ip.im.abs() < 1e-12);
    }

    #[test]
    fn even_and_odd_states_are_orthogonal() {
        let g = grid();
        let even = WaveFunction::from_fn(g, |q| C64::new((-q * q / 4.0).exp(), 0.0));
        let odd = WaveFunction::from_fn(g, |q| C64::new(q * (-q * q / 4.0).exp(), 0.0));
        let ip = inner_product(&even, &odd).unwrap();
        assert!(ip.norm() < 1e-12);
    }

    #[test]
    fn analytic_gaussian_overlap() {
        // Packets shaped exp(-q^2/2), i.e. sigma = 1/sqrt(2) in the
        // exp(-(q-q0)^2/4 sigma^2) convention, displaced by 5:
        // <g(0)|g(5)> = exp(-d^2 / (8 sigma^2)) = exp(-25/4).
        let g = grid();
        let s = 0.5_f64.sqrt();
        let a = WaveFunction::gaussian_packet(g, 0.0, 0.0, s, 1.0).unwrap();
        let b = WaveFunction::gaussian_packet(g, 5.0, 0.0, s, 1.0).unwrap();
        let ip = inner_product(&a, &b).unwrap();
        assert!((ip.re - (-25.0_f64 / 4.0).exp()).abs() < 1e-10);
        assert!(ip.im.abs() < 1e-12);
    }

    #[test]
    fn conjugate_symmetry() {
        let g = grid();
        let a = WaveFunction::gaussian_packet(g, -1.0, 0.7, 1.0, 1.0).unwrap();
        let b = WaveFunction::gaussian_packet(g, 2.0, -0.3, 1.3, 1.0).unwrap();
        let ab = inner_product(&a, &b).unwrap();
        let ba = inner_product(&b, &a).unwrap();
        assert!((ab - ba.conj()).norm() < 1e-14);
    }

    #[test]
    fn raw_delta_normalization() {
        let g = grid();
        let d = WaveFunction::delta(g, 0.5, DeltaKind::Raw).unwrap();
        let ip = inner_product(&d, &d).unwrap();
        assert!((ip.re - 1.0 / g.dq()).abs() < 1e-9);
    }

    #[test]
    fn smoothed_delta_has_unit_integral() {
        let g = grid();
        let d = WaveFunction::delta(g, 0.5, DeltaKind::default_smoothed(&g)).unwrap();
        let total: C64 = (0..g.n()).map(|j| d.amp()[j]).sum();
        assert!((total.re * g.dq() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn grid_mismatch_is_rejected() {
        let a = WaveFunction::gaussian_packet(grid(), 0.0, 0.0, 1.0, 1.0).unwrap();
        let other = Grid::new(-20.0, 20.0, 256).unwrap();
        let b = WaveFunction::gaussian_packet(other, 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(matches!(inner_product(&a, &b), Err(Error::GridMismatch)));
    }

    #[test]
    fn delta_outside_grid_is_rejected() {
        assert!(matches!(
            WaveFunction::delta(grid(), 30.0, DeltaKind::Raw),
            Err(Error::OutsideGrid(_))
        ));
    }
}
