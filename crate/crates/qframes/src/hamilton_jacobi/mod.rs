//! Classical side of the correspondence: generating functions, the
//! Hamilton-Jacobi residual, the complex action `S = W + i hbar int F dt`
//! whose exponential is the kernel up to a constant, classical
//! trajectories, and the action-angle canonicity check.

mod action;
mod checks;
mod classical;
mod generating;

pub use action::{kernel_proportionality, QuantumAction};
pub use checks::{
    action_angle_bracket_check, canonical_derivative_check, f_consistency_check,
    hj_residual_check, legendre_transform_check,
};
pub use classical::{
    action_angle, action_angle_bracket, action_angle_constancy_residual, classical_trajectory,
    energy_drift, frame_constancy_residual, moving_coordinates, rk4_trajectory, PhasePoint,
};
pub use generating::GeneratingFunction;
