//! Scalar special functions.
//!
//! | Function | Description |
//! |----------|-------------|
//! | [`gamma`] | Γ(z) for real z, reflection below 1/2 |
//! | [`ln_gamma`] | ln Γ(z) for z > 0 |
//! | [`ln_gamma_signed`] | ln \|Γ(z)\| with sign, any non-pole z |
//! | [`rgamma`] | 1/Γ(z), zero at the poles |
//! | [`pochhammer`] | rising factorial (r)_k |
//! | [`beta`] | B(l1, l2) |
//! | [`hyp`] | generalized hypergeometric series pFq with diagnostics |
//!
//! Products of many Gamma values are formed with [`SignedLog`] so the norm
//! formulas can be evaluated without overflow.

mod gamma;
mod hyper;
mod signed_log;
mod sum;

pub use gamma::{beta, gamma, ln_gamma, ln_gamma_signed, pochhammer, rgamma, sin_pi};
pub use hyper::{hyp, HyperSeries, SeriesDiagnostics};
pub use signed_log::SignedLog;
pub use sum::CompensatedSum;

/// True when `z` is 0, −1, −2, …
pub fn is_nonpositive_integer(z: f64) -> bool {
    z <= 0.0 && z == z.floor()
}
