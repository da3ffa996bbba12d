//! The symmetric polynomial class `S_n(r, s; p, q)` and its two finite families.
//!
//! [`coeffs_s`] expands the closed sum over `k` directly and is the reference
//! construction for every polynomial in the crate. The hypergeometric forms in
//! [`families`] exist as cross-checks; [`ode_residual`] certifies either one.

mod families;
mod validate;

use serde::Serialize;

use crate::error::{Error, Result};

pub use families::{
    audit_b_sources, cj_a, cj_b, family_a, family_a_hypergeometric, family_b,
    family_b_hypergeometric, norm_sq_a, norm_sq_b, BParamSource, FamilyAParams, FamilyBParams,
    SourceAudit,
};
pub use validate::{ConstraintCheck, Validation, ValidationReport};

/// ⌊n/2⌋
pub fn half_down(n: usize) -> usize {
    n / 2
}

/// ⌊(n+1)/2⌋
pub fn half_up(n: usize) -> usize {
    (n + 1) / 2
}

/// (1 − (−1)^n)/2, i.e. n mod 2. Equals `half_up(n) - half_down(n)`.
pub fn odd_part(n: usize) -> usize {
    n % 2
}

/// Coefficients (p, q, r, s) of the symmetric Pearson-type weight
/// `exp(∫ (r x² + s) / (x (p x² + q)) dx)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymParams {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
}

impl SymParams {
    pub fn new(p: f64, q: f64, r: f64, s: f64) -> Self {
        SymParams { p, q, r, s }
    }
}

/// A polynomial with `S(−x) = (−1)^n S(x)`.
///
/// Coefficients are stored in ascending powers; the entries whose index has
/// the opposite parity to the degree are exactly zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymPoly {
    coeffs: Vec<f64>,
    monic: bool,
}

impl SymPoly {
    /// Build from ascending coefficients, checking the parity pattern.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        }
        let n = coeffs.len() - 1;
        if let Some(j) = (0..=n).find(|j| (n - j) % 2 == 1 && coeffs[*j] != 0.0) {
            return Err(Error::InvalidInput(format!(
                "coefficient of x^{j} must vanish for a symmetric polynomial of degree {n}"
            )));
        }
        let monic = coeffs[n] == 1.0;
        Ok(SymPoly { coeffs, monic })
    }

    pub fn one() -> Self {
        SymPoly { coeffs: vec![1.0], monic: true }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn parity(&self) -> usize {
        self.degree() % 2
    }

    pub fn is_monic(&self) -> bool {
        self.monic
    }

    /// Ascending coefficients c_0..c_n.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.degree()]
    }

    /// Coefficient of x^{n−2k}.
    pub fn coeff_from_top(&self, k: usize) -> f64 {
        self.coeffs[self.degree() - 2 * k]
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// (S(x), S′(x), S″(x)) by exact differentiation.
    pub fn eval_with_derivatives(&self, x: f64) -> (f64, f64, f64) {
        let (mut v, mut d1, mut d2) = (0.0, 0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            d2 = d2 * x + 2.0 * d1;
            d1 = d1 * x + v;
            v = v * x + c;
        }
        (v, d1, d2)
    }
}

/// Divide by the leading coefficient.
pub fn monic(poly: &SymPoly) -> Result<SymPoly> {
    let lead = poly.leading();
    if lead == 0.0 {
        return Err(Error::Degenerate);
    }
    let mut coeffs: Vec<f64> = poly.coeffs.iter().map(|c| c / lead).collect();
    let n = coeffs.len() - 1;
    coeffs[n] = 1.0;
    Ok(SymPoly { coeffs, monic: true })
}

/// The polynomial `S_n(r, s; p, q)` as the finite sum over k, leading coefficient
/// as it falls out (generally not 1).
///
/// The product ratio is accumulated from k = ⌊n/2⌋ downwards so no large
/// factorials are formed.
pub fn coeffs_s(params: SymParams, n: usize) -> Result<SymPoly> {
    let SymParams { p, q, r, s } = params;
    let m = half_down(n);
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 }; // (−1)^{n+1}

    // factor(i) for i = 0..m−1
    let mut factors = Vec::with_capacity(m);
    for i in 0..m {
        let num = (2.0 * i as f64 + sign + 2.0 * m as f64) * p + r;
        let den = (2.0 * i as f64 + sign + 2.0) * q + s;
        if den == 0.0 {
            return Err(Error::SingularParam {
                context: format!("S_{n}: product denominator at i = {i}"),
            });
        }
        factors.push(num / den);
    }

    let mut coeffs = vec![0.0; n + 1];
    // k = m: empty product, binomial 1
    let mut prod = 1.0;
    let mut binom = 1.0;
    coeffs[n - 2 * m] = binom * prod;
    for k in (0..m).rev() {
        // product now runs over i = 0..m−k−1, adding factor m−k−1
        prod *= factors[m - k - 1];
        // C(m, k) from C(m, k+1)
        binom *= (k + 1) as f64 / (m - k) as f64;
        coeffs[n - 2 * k] = binom * prod;
    }
    SymPoly::from_coeffs(coeffs)
}

/// Residual of the second-order equation solved by `S_n(r, s; p, q)`:
///
/// `x²(px²+q)Φ″ + x(rx²+s)Φ′ − (n(r+(n−1)p)x² + (1−(−1)^n)s/2)Φ`.
pub fn ode_residual(params: SymParams, poly: &SymPoly, x: f64) -> f64 {
    let SymParams { p, q, r, s } = params;
    let n = poly.degree() as f64;
    let (v, d1, d2) = poly.eval_with_derivatives(x);
    let x2 = x * x;
    let odd = odd_part(poly.degree()) as f64;
    x2 * (p * x2 + q) * d2 + x * (r * x2 + s) * d1 - (n * (r + (n - 1.0) * p) * x2 + odd * s) * v
}

/// |residual| / (max |c_j| (1 + |x|)^{n+2}).
pub fn scaled_ode_residual(params: SymParams, poly: &SymPoly, x: f64) -> f64 {
    let scale = poly.max_abs_coeff() * (1.0 + x.abs()).powi(poly.degree() as i32 + 2);
    ode_residual(params, poly, x).abs() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_coeffs(poly: &SymPoly, expected: &[f64]) {
        assert_eq!(poly.coeffs().len(), expected.len());
        for (c, e) in poly.coeffs().iter().zip(expected) {
            assert!((c - e).abs() <= 1e-12 * e.abs().max(1.0), "{:?} vs {:?}", poly.coeffs(), expected);
        }
    }

    #[test]
    fn low_degree_conventions() {
        let any = SymParams::new(0.3, -1.2, 4.0, 2.5);
        assert_coeffs(&coeffs_s(any, 0).unwrap(), &[1.0]);
        assert_coeffs(&coeffs_s(any, 1).unwrap(), &[0.0, 1.0]);
    }

    #[test]
    fn degree_two_expansion() {
        // (p+r)/(q+s) x² + 1
        let poly = coeffs_s(SymParams::new(1.0, 1.0, -6.0, 0.0), 2).unwrap();
        assert_coeffs(&poly, &[1.0, 0.0, -5.0]);
        assert_coeffs(&monic(&poly).unwrap(), &[-0.2, 0.0, 1.0]);
    }

    #[test]
    fn monic_scalar_division() {
        let p = SymPoly::from_coeffs(vec![1.0, 0.0, -3.0]).unwrap();
        assert_coeffs(&monic(&p).unwrap(), &[-1.0 / 3.0, 0.0, 1.0]);
        assert!(monic(&p).unwrap().is_monic());
        assert_coeffs(&monic(&SymPoly::one()).unwrap(), &[1.0]);
        let degenerate = SymPoly::from_coeffs(vec![1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(monic(&degenerate), Err(Error::Degenerate)));
    }

    #[test]
    fn parity_pattern_is_enforced() {
        assert!(SymPoly::from_coeffs(vec![1.0, 2.0, 1.0]).is_err());
        assert!(SymPoly::from_coeffs(vec![0.0, 2.0, 0.0, 1.0]).is_ok());
    }

    #[test]
    fn singular_denominator() {
        // n = 2: denominator (−1 + 2) q + s = q + s
        let err = coeffs_s(SymParams::new(1.0, 1.0, 0.0, -1.0), 2).unwrap_err();
        assert!(matches!(err, Error::SingularParam { .. }));
    }

    #[test]
    fn constants_solve_the_even_equation() {
        let params = SymParams::new(0.7, -2.0, 3.0, 1.1);
        for x in [-2.0, 0.0, 0.5, 3.0] {
            assert_eq!(ode_residual(params, &SymPoly::one(), x), 0.0);
        }
    }

    #[test]
    fn derivatives_by_horner() {
        let p = SymPoly::from_coeffs(vec![0.0, -1.0, 0.0, 1.0]).unwrap(); // x³ − x
        let (v, d1, d2) = p.eval_with_derivatives(2.0);
        assert_eq!((v, d1, d2), (6.0, 11.0, 12.0));
    }

    #[test]
    fn index_identity() {
        for n in 0..=50 {
            assert_eq!(half_up(n) - half_down(n), odd_part(n));
        }
    }
}
