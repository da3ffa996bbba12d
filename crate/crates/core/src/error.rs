use thiserror::Error;

/// Errors raised across the library.
///
/// Numerical failures (`NonConvergence`, `Convergence`) are distinguished from
/// parameter problems (`Constraint`, `SingularParam`, `InvalidInput`) so the
/// command-line front end can map them onto different exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: pole at argument {arg}")]
    Pole { function: &'static str, arg: f64 },

    #[error("{function}: argument {arg} outside the domain ({reason})")]
    Domain {
        function: &'static str,
        arg: f64,
        reason: &'static str,
    },

    #[error("series did not converge after {terms} terms")]
    Convergence { terms: usize },

    #[error("vanishing denominator in {context}")]
    SingularParam { context: String },

    #[error("leading coefficient is zero")]
    Degenerate,

    #[error("parameter constraints violated: {0}")]
    Constraint(String),

    #[error("quadrature did not reach tolerance {tol:e} (estimate {estimate:e}, level {level})")]
    NonConvergence { tol: f64, estimate: f64, level: usize },

    #[error("integrand is not integrable: {0}")]
    NotIntegrable(String),

    #[error("declared parity violated at x = {x}: f(x) = {fx}, f(-x) = {fmx}")]
    ParityViolation { x: f64, fx: f64, fmx: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors caused by numerical breakdown rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Convergence { .. } | Error::NonConvergence { .. } | Error::NotIntegrable(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
