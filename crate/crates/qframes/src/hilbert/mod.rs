//! Discretized 1-D Hilbert-space substrate: grids, states, dense operators,
//! inner products, spectral momentum, and Hermitian matrix exponentials.

mod eigen;
mod grid;
mod operator;
mod state;

pub use eigen::{matrix_exponential_unitary, HermitianEigen};
pub use grid::Grid;
pub use operator::{hamiltonian, momentum_operator, position_operator, DenseOperator};
pub use state::{inner_product, DeltaKind, WaveFunction};
