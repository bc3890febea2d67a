//! Numerical study of quantum time evolution in a co-moving operator frame.
//!
//! The library builds the unitary `T(t) = exp(-i H t / hbar)` for the free
//! particle and the harmonic oscillator, transforms position and momentum
//! through it, and cross-checks the resulting closed-form propagator kernels,
//! moving-basis states, and their classical generating-function counterparts
//! against independent dense-matrix and quadrature oracles.
//!
//! Modules:
//! - [`hilbert`]: grids, states, dense operators, spectral momentum,
//!   Hermitian matrix exponentials.
//! - [`evolution`]: the moving frame `Q(t) = T q T^dagger`, vanishing
//!   transformed Hamiltonian, frame-independent wavefunctions.
//! - [`kernels`]: closed-form transformation kernels and moving-basis
//!   representations of momentum, number, and coherent states.
//! - [`hamilton_jacobi`]: generating functions, Hamilton-Jacobi residuals,
//!   semiclassical wavefunctions, canonical-transformation checks.
//! - [`registry`]: the named check suite consumed by the CLI.

pub mod error;
#[cfg(feature = "dense")]
pub mod evolution;
pub mod hamilton_jacobi;
#[cfg(feature = "dense")]
pub mod hilbert;
pub mod kernels;
pub mod params;
#[cfg(feature = "dense")]
pub mod registry;
pub mod report;
pub mod tolerances;

pub use error::{Error, Result};
pub use params::{Representation, System, SystemParams};
