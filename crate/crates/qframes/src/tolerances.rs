//! Pinned tolerances for every named check.
//!
//! Residuals fall in three regimes: algebraic identities limited only by
//! f64 rounding (1e-12 .. 1e-9), continuum identities evaluated on smooth
//! interior states where discretization error is spectrally small (1e-8 ..
//! 1e-6), and finite-difference or delta-discretization checks whose error
//! is set by the step size (1e-5 .. 1e-3).

/// `|| T^dagger T - 1 ||_F` for the evolution operator.
pub const UNITARITY: f64 = 1e-9;
/// Max-norm Hermiticity deviation of q, p, H and transformed operators.
pub const HERMITICITY: f64 = 1e-10;
/// `|<psi|[q,p]|psi> - i hbar|` on interior Gaussian packets.
pub const COMMUTATOR_WEAK: f64 = 1e-6;
/// Interior-subspace Frobenius distance between `T q T^dagger` (and p) and
/// their closed-form linear combinations.
pub const CLOSED_FORM_OPERATORS: f64 = 1e-6;
/// Transformed Hamiltonian, analytic time derivative (relative to ||H||).
pub const TRANSFORMED_H_ANALYTIC: f64 = 1e-9;
/// Transformed Hamiltonian, central differences at dt = 1e-4.
pub const TRANSFORMED_H_FD: f64 = 1e-3;
/// Step used by the finite-difference transformed-Hamiltonian check.
pub const TRANSFORMED_H_FD_DT: f64 = 1e-4;
/// `max_t || Psi(.,t) - Psi(.,0) ||_2` for moving-frame wavefunctions.
pub const TIME_INDEPENDENCE: f64 = 1e-8;
/// Eigen-residual of moving base states built from raw lattice deltas.
pub const MOVING_BASE_EIGEN: f64 = 1e-4;
/// `|| T(t1) T(t2) - T(t1+t2) ||_F`.
pub const GROUP_LAW: f64 = 1e-9;
/// `T^dagger(t) q T(t)` against the frame at `-t`.
pub const HEISENBERG_DUALITY: f64 = 1e-8;

/// Kernel quadrature against dense matrix-exponential evolution (relative L2).
pub const KERNEL_VS_EVOLUTION: f64 = 1e-6;
/// Kernel semigroup composition via regulated quadrature.
pub const KERNEL_COMPOSITION: f64 = 1e-5;
/// Finite-difference Schrodinger residual of the closed-form kernels.
pub const KERNEL_SE_RESIDUAL: f64 = 1e-5;
/// Step used by finite-difference PDE residuals.
pub const PDE_FD_STEP: f64 = 1e-3;
/// Moving momentum state against regulated quadrature.
pub const MOMENTUM_STATE_QUAD: f64 = 1e-6;
/// Moving number states against quadrature over oscillator eigenfunctions.
pub const NUMBER_STATE_QUAD: f64 = 1e-8;
/// Orthonormality of moving number states under Q-quadrature.
pub const NUMBER_STATE_ORTHO: f64 = 1e-8;
/// Coherent state closed form against the truncated number-basis sum.
pub const COHERENT_SUM: f64 = 1e-6;
/// Momentum kernel against Fourier quadrature of the position kernel.
pub const FOURIER_DUALITY: f64 = 1e-6;
/// Sup-norm deviation of the kernel quadrature from the identity at small t.
pub const KERNEL_DELTA_LIMIT: f64 = 1e-4;
/// Time at which the delta-limit check is evaluated; the deviation is O(t)
/// with slope ~0.3 for a unit Gaussian, so 1e-3 would already exceed the
/// sup-norm gate above.
pub const KERNEL_DELTA_LIMIT_T: f64 = 5e-4;
/// Unitarity of the kernel quadrature on packet inner products.
pub const KERNEL_PACKET_UNITARITY: f64 = 1e-6;

/// Hamilton-Jacobi residual of the four generating functions.
pub const HJ_RESIDUAL: f64 = 1e-12;
/// Analytic F(t) against finite-difference second derivative of W.
pub const F_CONSISTENCY: f64 = 1e-8;
/// Schrodinger residual of exp(i S / hbar) by central differences.
pub const SEMICLASSICAL_SE: f64 = 1e-5;
/// Constancy of the semiclassical-psi / kernel ratio over sample points.
pub const KERNEL_PROPORTIONALITY: f64 = 1e-8;
/// Legendre-transform elimination residual.
pub const LEGENDRE: f64 = 1e-10;
/// Closed-form Q(q,p,t), P(q,p,t) recovered from generating-function partials.
pub const CANONICAL_DERIVATIVE: f64 = 1e-10;
/// Constancy of Q, P along analytic classical trajectories.
pub const FRAME_CONSTANCY_ANALYTIC: f64 = 1e-10;
/// Constancy of Q, P along integrated classical trajectories.
pub const FRAME_CONSTANCY: f64 = 1e-8;
/// Step size of the RK4 trajectory oracle.
pub const RK4_STEP: f64 = 1e-3;
/// `|{Q, P} - 1|` for the action-angle map by finite-difference brackets.
pub const ACTION_ANGLE_BRACKET: f64 = 1e-6;
/// Step used by finite-difference Poisson brackets.
pub const BRACKET_FD_STEP: f64 = 1e-5;
