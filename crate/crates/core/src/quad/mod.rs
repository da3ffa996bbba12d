//! Quadrature on the real line and half line, and numerical Fourier transforms.
//!
//! All rules are double-exponential: exp-sinh on (0, ∞), tanh-sinh on finite
//! intervals, and the Ooura–Mori transformation for oscillatory Fourier
//! integrals. Every result carries an error estimate taken from the difference
//! of two refinement levels, and a result is only returned when that estimate
//! meets the requested tolerance.
//!
//! Tolerances are relative to the L1 norm of the integrand, so an integral
//! with heavy cancellation is accepted once its absolute error is small
//! compared with `∫|f|`. The estimate never drops below `10 ε ∫|f|`, which makes
//! tolerances under about 2e-15 unreachable by design.

mod accel;
mod de;
mod oscillatory;

use serde::Serialize;

use crate::error::{Error, Result};
use de::DeMap;

pub use accel::{aitken, iterated_aitken};
pub use oscillatory::{fourier_numeric, fourier_numeric_with, FourierMethod, FourierResult};

/// Behaviour of |f(x)| as |x| → ∞.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Decay {
    /// |f(x)| = O(|x|^{−rate})
    Polynomial(f64),
    /// faster than any power
    SuperExponential,
}

impl Decay {
    /// Decay exponent, infinite for super-exponential decay.
    pub fn rate(&self) -> f64 {
        match self {
            Decay::Polynomial(r) => *r,
            Decay::SuperExponential => f64::INFINITY,
        }
    }
}

type Func<'a> = Box<dyn Fn(f64) -> f64 + Send + Sync + 'a>;

/// A real function together with its declared behaviour at 0 and at infinity.
///
/// `singular_exponent` σ promises |f(x)| = O(|x|^σ) near 0 and must exceed −1.
pub struct Integrand<'a> {
    f: Func<'a>,
    singular_exponent: f64,
    decay: Decay,
}

impl std::fmt::Debug for Integrand<'_> {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt.debug_struct("Integrand")
            .field("singular_exponent", &self.singular_exponent)
            .field("decay", &self.decay)
            .finish_non_exhaustive()
    }
}

impl<'a> Integrand<'a> {
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'a, singular_exponent: f64, decay: Decay) -> Result<Self> {
        if !(singular_exponent > -1.0) {
            return Err(Error::NotIntegrable(format!(
                "singular exponent {singular_exponent} at the origin must exceed -1"
            )));
        }
        if let Decay::Polynomial(r) = decay {
            if r.is_nan() {
                return Err(Error::InvalidInput("decay rate is NaN".into()));
            }
        }
        Ok(Integrand { f: Box::new(f), singular_exponent, decay })
    }

    /// A smooth function (σ = 0).
    pub fn smooth(f: impl Fn(f64) -> f64 + Send + Sync + 'a, decay: Decay) -> Result<Self> {
        Self::new(f, 0.0, decay)
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn singular_exponent(&self) -> f64 {
        self.singular_exponent
    }

    pub fn decay(&self) -> Decay {
        self.decay
    }

    /// Compare the observed tail with the declared decay rate.
    ///
    /// Samples |f| at 10^6 and 10^7 on both sides; the function is flagged if
    /// it decays more than half an order slower than declared.
    pub fn check_tail(&self) -> Result<()> {
        let Decay::Polynomial(rate) = self.decay else {
            return Ok(());
        };
        for sign in [1.0, -1.0] {
            let near = self.eval(sign * 1e6).abs();
            let far = self.eval(sign * 1e7).abs();
            if near == 0.0 || far == 0.0 || !near.is_finite() || !far.is_finite() {
                continue;
            }
            let observed = (near / far).log10();
            if observed < rate - 0.5 {
                return Err(Error::NotIntegrable(format!(
                    "declared decay rate {rate} but the tail decays like |x|^-{observed:.2}"
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of a successful integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
    /// Refinement level reached (step 2^{−level−1} in t).
    pub level: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadOptions {
    pub tol: f64,
    pub max_level: usize,
    /// Absolute error that is always accepted, for pieces of a larger sum.
    pub abs_tol: f64,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { tol: 1e-10, max_level: 12, abs_tol: 0.0 }
    }
}

impl QuadOptions {
    pub fn with_tol(tol: f64) -> Self {
        QuadOptions { tol, ..Default::default() }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        QuadOptions { abs_tol, ..self }
    }

    fn check(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidInput(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }
}

/// ∫_{−∞}^{∞} f(x) dx.
///
/// The two half lines are folded into one exp-sinh integral of f(x) + f(−x).
/// Requires a declared decay rate above 1.
pub fn integrate_line(f: &Integrand, tol: f64) -> Result<QuadResult> {
    integrate_line_with(f, &QuadOptions::with_tol(tol))
}

pub fn integrate_line_with(f: &Integrand, opts: &QuadOptions) -> Result<QuadResult> {
    opts.check()?;
    require_integrable_tail(f)?;
    de::integrate_scalar(DeMap::ExpSinh, |x| f.eval(x) + f.eval(-x), opts)
}

/// ∫_0^∞ f(x) dx.
pub fn integrate_semi(f: &Integrand, tol: f64) -> Result<QuadResult> {
    integrate_semi_with(f, &QuadOptions::with_tol(tol))
}

pub fn integrate_semi_with(f: &Integrand, opts: &QuadOptions) -> Result<QuadResult> {
    opts.check()?;
    require_integrable_tail(f)?;
    de::integrate_scalar(DeMap::ExpSinh, |x| f.eval(x), opts)
}

/// ∫_a^b f(x) dx by tanh-sinh; integrable endpoint singularities are fine.
pub fn integrate_finite(f: impl Fn(f64) -> f64, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    opts.check()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidInput(format!("finite interval expected, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 0, converged: true, level: 0 });
    }
    if a > b {
        let mut r = integrate_finite(f, b, a, opts)?;
        r.value = -r.value;
        return Ok(r);
    }
    de::integrate_scalar(DeMap::TanhSinh { a, b }, f, opts)
}

/// ∫_0^∞ of a vector-valued function, sharing the abscissae across components.
///
/// `eval` maps a batch of abscissae to one row of `dim` values per abscissa and
/// is free to evaluate the batch in parallel. Each component converges, or
/// fails, on its own.
pub fn integrate_semi_batch<F>(dim: usize, eval: F, opts: &QuadOptions) -> Vec<Result<QuadResult>>
where
    F: Fn(&[f64]) -> Vec<Vec<f64>>,
{
    if let Err(e) = opts.check() {
        return vec![Err(e); dim];
    }
    de::integrate_batch(DeMap::ExpSinh, dim, eval, opts)
}

fn require_integrable_tail(f: &Integrand) -> Result<()> {
    let rate = f.decay().rate();
    if rate <= 1.0 {
        return Err(Error::NotIntegrable(format!("decay rate {rate} does not exceed 1")));
    }
    f.check_tail()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{beta, gamma};
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn line_integrals_with_closed_forms() {
        let lorentz = Integrand::smooth(|x| 1.0 / (1.0 + x * x), Decay::Polynomial(2.0)).unwrap();
        let r = integrate_line(&lorentz, 1e-12).unwrap();
        assert!(close(r.value, PI, 1e-12), "{}", r.value);
        assert!(r.converged && r.abs_error_estimate <= 1e-12 * PI * 1.0001);

        let quartic = Integrand::smooth(|x| (1.0 + x * x).powi(-4), Decay::Polynomial(8.0)).unwrap();
        let r = integrate_line(&quartic, 1e-12).unwrap();
        assert!(close(r.value, 5.0 * PI / 16.0, 1e-12), "{}", r.value);

        // x² · x^{−8} e^{−1/x²}: Γ(5/2)
        let flat = Integrand::smooth(
            |x: f64| if x == 0.0 { 0.0 } else { (-6.0 * x.abs().ln() - 1.0 / (x * x)).exp() },
            Decay::Polynomial(6.0),
        )
        .unwrap();
        let r = integrate_line(&flat, 1e-12).unwrap();
        assert!(close(r.value, 0.75 * PI.sqrt(), 1e-12), "{}", r.value);
    }

    #[test]
    fn half_line_integrals_with_closed_forms() {
        let exp = Integrand::smooth(|t: f64| (-t).exp(), Decay::SuperExponential).unwrap();
        assert!(close(integrate_semi(&exp, 1e-12).unwrap().value, 1.0, 1e-12));

        let g = Integrand::smooth(|t: f64| t.powf(1.5) * (-t).exp(), Decay::SuperExponential).unwrap();
        assert!(close(integrate_semi(&g, 1e-12).unwrap().value, gamma(2.5).unwrap(), 1e-12));

        let b = Integrand::new(|t: f64| t.powf(-0.5) * (1.0 + t).powi(-4), -0.5, Decay::Polynomial(4.5)).unwrap();
        let expected = beta(0.5, 3.5).unwrap();
        assert!(close(expected, 5.0 * PI / 16.0, 1e-14));
        assert!(close(integrate_semi(&b, 1e-12).unwrap().value, expected, 1e-12));
    }

    #[test]
    fn even_line_is_twice_the_half_line() {
        let f = Integrand::smooth(|x: f64| (1.0 + x * x).powf(-3.5) * (1.0 + x.powi(4)), Decay::Polynomial(3.0)).unwrap();
        let line = integrate_line(&f, 1e-13).unwrap().value;
        let half = integrate_semi(&f, 1e-13).unwrap().value;
        assert!(close(line, 2.0 * half, 1e-13));
    }

    #[test]
    fn beta_integral_forms_agree() {
        for &(l1, l2) in &[(0.5, 0.5), (1.5, 2.25), (3.0, 0.75), (0.2, 5.0), (7.5, 7.5)] {
            let f = Integrand::new(
                move |x: f64| x.powf(l1 - 1.0) * (1.0 + x).powf(-(l1 + l2)),
                l1 - 1.0,
                Decay::Polynomial(l2 + 1.0),
            )
            .unwrap();
            let quad = integrate_semi(&f, 1e-11).unwrap().value;
            assert!(close(quad, beta(l1, l2).unwrap(), 1e-9), "({l1}, {l2}): {quad}");
        }
    }

    #[test]
    fn finite_interval_with_endpoint_singularity() {
        let opts = QuadOptions::with_tol(1e-12);
        let r = integrate_finite(|x: f64| x.powf(-0.5), 0.0, 1.0, &opts).unwrap();
        assert!(close(r.value, 2.0, 1e-12));
        let r = integrate_finite(|x: f64| x.sin(), PI, 0.0, &opts).unwrap();
        assert!(close(r.value, -2.0, 1e-12));
    }

    #[test]
    fn batch_components_converge_independently() {
        let opts = QuadOptions::with_tol(1e-12);
        let results = integrate_semi_batch(
            2,
            |xs| xs.iter().map(|&x| vec![(-x).exp(), 1.0 / (1.0 + x * x)]).collect(),
            &opts,
        );
        assert!(close(results[0].as_ref().unwrap().value, 1.0, 1e-12));
        assert!(close(results[1].as_ref().unwrap().value, PI / 2.0, 1e-12));
    }

    #[test]
    fn non_integrable_inputs_are_rejected() {
        assert!(matches!(
            Integrand::new(|x: f64| 1.0 / x.abs(), -1.0, Decay::Polynomial(2.0)),
            Err(Error::NotIntegrable(_))
        ));
        let slow = Integrand::smooth(|x: f64| 1.0 / (1.0 + x.abs()), Decay::Polynomial(1.0)).unwrap();
        assert!(matches!(integrate_line(&slow, 1e-8), Err(Error::NotIntegrable(_))));
        let lying = Integrand::smooth(|x: f64| 1.0 / (1.0 + x.abs()), Decay::Polynomial(3.0)).unwrap();
        assert!(matches!(integrate_line(&lying, 1e-8), Err(Error::NotIntegrable(_))));
    }

    #[test]
    fn unreachable_tolerance_is_reported() {
        let f = Integrand::smooth(|x| 1.0 / (1.0 + x * x), Decay::Polynomial(2.0)).unwrap();
        match integrate_line(&f, 1e-16) {
            Err(Error::NonConvergence { estimate, .. }) => assert!(estimate > 1e-16),
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn error_estimate_is_honest() {
        let cases: Vec<(Integrand, f64)> = vec![
            (Integrand::smooth(|x| 1.0 / (1.0 + x * x), Decay::Polynomial(2.0)).unwrap(), PI),
            (Integrand::smooth(|x| (1.0 + x * x).powi(-4), Decay::Polynomial(8.0)).unwrap(), 5.0 * PI / 16.0),
            (Integrand::smooth(|x: f64| (-x * x).exp(), Decay::SuperExponential).unwrap(), PI.sqrt()),
        ];
        for (f, exact) in &cases {
            for tol in [1e-4, 1e-8, 1e-12] {
                let r = integrate_line(f, tol).unwrap();
                assert!((r.value - exact).abs() <= r.abs_error_estimate.max(1e-15 * exact));
            }
        }
    }
}
