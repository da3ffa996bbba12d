//! Finite symmetric orthogonal polynomials, the Fourier-transformed functions
//! built from them, and a quadrature harness that checks their orthogonality.
//!
//! * [`specfun`]: Gamma, Beta, Pochhammer and generalized hypergeometric series.
//! * [`sympoly`]: the polynomial families A_n^{(a,b)} and B_n^{(a)}, norms, constraints.
//! * [`quad`]: double-exponential quadrature and numerical Fourier transforms.
//! * [`fourier`]: closed-form transforms and the transformed function families.
//! * [`verify`]: Gram matrices, Parseval checks, closed-vs-numeric comparisons.
//! * [`suite`] and [`cli`]: the acceptance checks and the command-line front end.

pub mod cli;
pub mod error;
pub mod fourier;
pub mod quad;
pub mod specfun;
pub mod suite;
pub mod sympoly;
pub mod verify;

pub use error::{Error, Result};
