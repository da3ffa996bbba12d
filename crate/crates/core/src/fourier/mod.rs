//! Closed-form Fourier transforms of the weighted polynomial families, the
//! special functions A_n and B_n they define, and the right-hand sides of the
//! orthogonality relations those functions satisfy.
//!
//! Two routes to each transform are provided. The kernel sums apply the
//! series kernels [`i_nk`] / [`r_nk`] to the polynomial coefficients; the
//! closed forms go through [`fn_a`] / [`fn_b`]. Both are formal term-by-term
//! expansions and are compared with [`crate::quad::fourier_numeric`] in
//! [`crate::verify`].

mod functions;
mod kernels;
mod theorems;
mod value;

pub use functions::{fn_a, fn_a_detailed, fn_b, fn_b_detailed, FnASpec, FnBSpec, FnValue, UNTRUSTED_CANCELLATION};
pub use kernels::{
    i_nk, r_nk, transform_a_closed, transform_a_kernel_sum, transform_a_prefactor, transform_b_closed,
    transform_b_kernel_sum, transform_b_prefactor,
};
pub use theorems::{
    theorem1_constraints, theorem1_rhs, theorem1_rhs_via_norm, theorem2_constraints, theorem2_rhs,
    theorem2_rhs_via_norm, BPairingParams, PairingParams,
};
pub use value::TransformValue;
