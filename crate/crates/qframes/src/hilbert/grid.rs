//! Uniform 1-D spatial lattice.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A uniform grid of `n` points covering `[q_min, q_max]` inclusive,
/// with spacing `dq = (q_max - q_min)/(n - 1)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Grid {
    q_min: f64,
    q_max: f64,
    n: usize,
    dq: f64,
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.q_min == other.q_min && self.q_max == other.q_max && self.n == other.n
    }
}

impl Grid {
    pub fn new(q_min: f64, q_max: f64, n: usize) -> Result<Self> {
        if !(q_min < q_max) {
            return Err(Error::InvalidRange(q_min, q_max));
        }
        if n < 8 {
            return Err(Error::TooFewPoints(n));
        }
        let dq = (q_max - q_min) / (n - 1) as f64;
        Ok(Self { q_min, q_max, n, dq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dq(&self) -> f64 {
        self.dq
    }

    pub fn q_min(&self) -> f64 {
        self.q_min
    }

    pub fn q_max(&self) -> f64 {
        self.q_max
    }

    /// The j-th lattice point, `q_min + j*dq`.
    pub fn point(&self, j: usize) -> f64 {
        debug_assert!(j < self.n);
        self.q_min + j as f64 * self.dq
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.point(j)).collect()
    }

    pub fn contains(&self, q: f64) -> bool {
        q >= self.q_min && q <= self.q_max
    }

    pub fn nearest_index(&self, q: f64) -> Result<usize> {
        if !self.contains(q) {
            return Err(Error::OutsideGrid(q));
        }
        let j = ((q - self.q_min) / self.dq).round() as usize;
        Ok(j.min(self.n - 1))
    }

    /// Angular wavenumbers of the discrete Fourier modes, in FFT ordering:
    /// `k_l = 2*pi*l / (n*dq)` with `l = 0, 1, ..., n/2-1, -n/2, ..., -1`.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let n = self.n as i64;
        let dk = 2.0 * std::f64::consts::PI / (self.n as f64 * self.dq);
        (0..n)
            .map(|l| {
                let l_signed = if l < (n + 1) / 2 { l } else { l - n };
                l_signed as f64 * dk
            })
            .collect()
    }

    /// Largest wavenumber magnitude resolvable on the grid.
    pub fn k_max(&self) -> f64 {
        std::f64::consts::PI / self.dq
    }
}
