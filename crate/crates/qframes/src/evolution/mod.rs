//! The moving operator frame: `T(t)`, the transformed canonical pair
//! `Q(t) = T q T^dagger`, `P(t) = T p T^dagger`, moving base states, and the
//! checks that the transformed Hamiltonian vanishes and moving-frame
//! wavefunctions are time independent.

mod checks;
mod propagator;
mod subspace;

pub use checks::{
    closed_form_operator_residual, closed_form_p, closed_form_q, commutator_residual,
    group_law_residual, heisenberg_duality_residual, time_independence_residual,
    transformed_hamiltonian_residual, unitarity_residual, DerivativeMode,
};
pub use propagator::{make_frame, MovingFrame, Propagator};
pub use subspace::InteriorSubspace;
