//! Closed-form transformation kernels (`<q|Q;t>`, `<q|P;t>`), moving-basis
//! momentum/number/coherent states, and the quadrature oracles that verify
//! each closed form independently.

#[cfg(feature = "dense")]
mod checks;
mod closed_form;
mod quadrature;
mod special;

#[cfg(feature = "dense")]
pub use checks::{
    coherent_state_sum_check, fourier_duality_check, kernel_composition_residual,
    kernel_delta_limit_residual, kernel_operator, kernel_packet_unitarity_residual,
    kernel_schrodinger_residual, kernel_vs_evolution_residual, momentum_state_quadrature_residual,
    number_state_orthonormality_residual, number_state_quadrature_residual,
};
pub use closed_form::{
    coherent_state_sum, kernel, moving_coherent_state, moving_momentum_state, moving_number_state,
    KernelSpec,
};
pub use quadrature::{oscillatory_integral, trapezoid};
pub use special::{hermite, ho_eigenfunction};
