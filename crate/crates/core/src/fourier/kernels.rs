use super::functions::{fn_a, fn_b, FnASpec, FnBSpec};
use super::TransformValue;
use crate::error::Result;
use crate::specfun::{gamma, HyperSeries};
use crate::sympoly::{
    family_a, family_b_hypergeometric, half_down, half_up, odd_part, BParamSource, FamilyAParams,
    FamilyBParams, Validation,
};

/// Γ(−α+1/2+⌊(n+1)/2⌋) Γ(β+α−1/2−⌊(n+1)/2⌋) / Γ(β): the factor relating the
/// transform of |x|^{−2α}(1+x²)^{−β} A_n to A_n(s; α, β, ·, ·).
pub fn transform_a_prefactor(n: usize, alpha: f64, beta: f64) -> Result<f64> {
    let n1 = half_up(n) as f64;
    Ok(gamma(-alpha + 0.5 + n1)? * gamma(beta + alpha - 0.5 - n1)? / gamma(beta)?)
}

/// Γ(a−1/2−⌊(n+1)/2⌋) 2^{a−1/2−⌊(n+1)/2⌋}: the factor relating the transform
/// of |x|^{−2a} e^{−1/(2x²)} B_n to B_n(s; a, ·).
pub fn transform_b_prefactor(n: usize, a: f64) -> Result<f64> {
    let e = a - 0.5 - half_up(n) as f64;
    Ok(gamma(e)? * 2f64.powf(e))
}

/// ∫ e^{−isx} (1+x²)^{−β} |x|^{−2α} x^{n−2k} dx in the series form
/// Γ·Γ/Γ(β) · (−is)^δ · ₁F₂(1/2−α−k+N₁; 1/2+δ, −β−α−k+3/2+N₁; s²/4).
pub fn i_nk(s: f64, alpha: f64, beta: f64, n: usize, k: usize) -> Result<TransformValue> {
    let n1 = half_up(n) as f64;
    let kf = k as f64;
    let delta = odd_part(n);
    let head = gamma(-alpha - kf + 0.5 + n1)? * gamma(beta + alpha + kf - 0.5 - n1)? / gamma(beta)?;
    let series = HyperSeries::new([0.5 - alpha - kf + n1], [0.5 + delta as f64, -beta - alpha - kf + 1.5 + n1]);
    let (f, _) = series.eval(s * s / 4.0)?;
    let sd = if delta == 1 { s } else { 1.0 };
    Ok(TransformValue::with_phase(head * sd * f, delta))
}

/// ∫ e^{−isx} e^{−1/(2x²)} |x|^{−2a} x^{n−2k} dx in the series form
/// 2^{e} Γ(e) (−is)^δ ₀F₂(; 1/2+δ, −a−k+3/2+N₁; s²/8), e = a+k−1/2−N₁.
pub fn r_nk(s: f64, a: f64, n: usize, k: usize) -> Result<TransformValue> {
    let n1 = half_up(n) as f64;
    let kf = k as f64;
    let delta = odd_part(n);
    let e = a + kf - 0.5 - n1;
    let head = 2f64.powf(e) * gamma(e)?;
    let series = HyperSeries::new(Vec::new(), [0.5 + delta as f64, -a - kf + 1.5 + n1]);
    let (f, _) = series.eval(s * s / 8.0)?;
    let sd = if delta == 1 { s } else { 1.0 };
    Ok(TransformValue::with_phase(head * sd * f, delta))
}

/// Closed-form transform of |x|^{−2α}(1+x²)^{−β} A_n^{(c,d)}(x):
/// (−i)^δ · prefactor · A_n(s; α, β, c, d).
pub fn transform_a_closed(n: usize, alpha: f64, beta: f64, c: f64, d: f64, s: f64) -> Result<TransformValue> {
    let g = transform_a_prefactor(n, alpha, beta)?;
    let a = fn_a(&FnASpec::new(n, alpha, beta, c, d), s)?;
    Ok(TransformValue::with_phase(g * a, odd_part(n)))
}

/// The same transform as Σ_k c_{n−2k} I_{n,k}(s), with the coefficients of the
/// monic polynomial A_n^{(c,d)} taken from its explicit expansion.
pub fn transform_a_kernel_sum(n: usize, alpha: f64, beta: f64, c: f64, d: f64, s: f64) -> Result<TransformValue> {
    let poly = family_a(FamilyAParams::new(c, d), n, Validation::Override)?;
    let mut total = TransformValue::default();
    for k in 0..=half_down(n) {
        let term = i_nk(s, alpha, beta, n, k)?.scale(poly.coeff_from_top(k));
        total = TransformValue::new(total.re + term.re, total.im + term.im);
    }
    Ok(total)
}

/// Closed-form transform of |x|^{−2a} e^{−1/(2x²)} B_n^{(b)}(x):
/// (−i)^δ · prefactor · B_n(s; a, b).
pub fn transform_b_closed(n: usize, a: f64, b: f64, s: f64, source: BParamSource) -> Result<TransformValue> {
    let k = transform_b_prefactor(n, a)?;
    let v = fn_b(&FnBSpec::new(n, a, b).with_source(source), s)?;
    Ok(TransformValue::with_phase(k * v, odd_part(n)))
}

/// Σ_k c_{n−2k} R_{n,k}(s) with the coefficients of B_n^{(b)} read from its
/// ₁F₁ form under the same parameter source.
pub fn transform_b_kernel_sum(n: usize, a: f64, b: f64, s: f64, source: BParamSource) -> Result<TransformValue> {
    let poly = family_b_hypergeometric(FamilyBParams::new(b), n, source)?;
    let mut total = TransformValue::default();
    for k in 0..=half_down(n) {
        let term = r_nk(s, a, n, k)?.scale(poly.coeff_from_top(k));
        total = TransformValue::new(total.re + term.re, total.im + term.im);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::beta as beta_fn;
    use crate::sympoly::family_b;
    use std::f64::consts::PI;

    fn rel(a: &TransformValue, b: &TransformValue) -> f64 {
        a.distance(b) / b.abs().max(1e-300)
    }

    #[test]
    fn static_integral_at_zero_frequency() {
        for &(alpha, beta) in &[(0.0, 1.0), (0.25, 2.0), (0.1, 3.3)] {
            let v = i_nk(0.0, alpha, beta, 0, 0).unwrap();
            let expected = gamma(0.5 - alpha).unwrap() * gamma(beta + alpha - 0.5).unwrap() / gamma(beta).unwrap();
            assert!((v.re - expected).abs() < 1e-14 * expected);
            assert!((expected - beta_fn(0.5 - alpha, beta + alpha - 0.5).unwrap()).abs() < 1e-13 * expected);
        }
    }

    #[test]
    fn lorentzian_series_collapses_to_cosh() {
        let v = i_nk(1.0, 0.0, 1.0, 0, 0).unwrap();
        assert!((v.re - PI * f64::cosh(1.0)).abs() < 1e-13);
        assert!((v.re - 4.8477307862322444).abs() < 1e-13);
        let closed = transform_a_closed(0, 0.0, 1.0, 0.0, 1.0, 1.0).unwrap();
        assert!((closed.re - v.re).abs() < 1e-13);
    }

    #[test]
    fn odd_kernels_are_imaginary() {
        for s in [0.3, 1.0, 2.5] {
            assert_eq!(i_nk(s, 0.25, 2.0, 1, 0).unwrap().re, 0.0);
            assert_eq!(r_nk(s, 4.0, 1, 0).unwrap().re, 0.0);
            assert_eq!(r_nk(s, 4.0, 0, 0).unwrap().im, 0.0);
        }
    }

    #[test]
    fn r00_base_moment() {
        let v = r_nk(0.0, 1.0, 0, 0).unwrap();
        assert!((v.re - (2.0 * PI).sqrt()).abs() < 1e-14);
        let closed = transform_b_closed(0, 1.0, 4.0, 0.0, BParamSource::Printed).unwrap();
        assert!((closed.re - (2.0 * PI).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn closed_forms_match_kernel_sums() {
        let v = transform_a_closed(2, 0.25, 2.0, 0.0, 4.0, 0.5).unwrap();
        let w = transform_a_kernel_sum(2, 0.25, 2.0, 0.0, 4.0, 0.5).unwrap();
        assert!(rel(&v, &w) < 1e-10);
        for source in [BParamSource::Printed, BParamSource::Derived] {
            let v = transform_b_closed(2, 4.0, 4.0, 0.5, source).unwrap();
            let w = transform_b_kernel_sum(2, 4.0, 4.0, 0.5, source).unwrap();
            assert!(rel(&v, &w) < 1e-10);
        }
    }

    #[test]
    fn derived_kernel_sum_uses_the_true_polynomial() {
        let poly = family_b(FamilyBParams::new(4.0), 2, Validation::Enforce).unwrap();
        let hyp = family_b_hypergeometric(FamilyBParams::new(4.0), 2, BParamSource::Derived).unwrap();
        assert!((poly.coeffs()[0] - hyp.coeffs()[0]).abs() < 1e-15);
    }
}
