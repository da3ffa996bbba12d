use serde::Serialize;

use super::validate::doubled_is_even;
use super::{
    coeffs_s, half_down, half_up, monic, scaled_ode_residual, SymParams, SymPoly, Validation,
    ValidationReport,
};
use crate::error::{Error, Result};
use crate::specfun::{ln_gamma_signed, HyperSeries, SignedLog};

/// Weight |x|^{−2a} (1+x²)^{−b} on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyAParams {
    pub a: f64,
    pub b: f64,
}

/// Weight |x|^{−2a} exp(−1/x²) on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyBParams {
    pub a: f64,
}

impl FamilyAParams {
    pub fn new(a: f64, b: f64) -> Self {
        FamilyAParams { a, b }
    }

    /// (p, q, r, s) = (1, 1, −2a−2b+2, −2a)
    pub fn sym_params(&self) -> SymParams {
        SymParams::new(1.0, 1.0, -2.0 * self.a - 2.0 * self.b + 2.0, -2.0 * self.a)
    }

    pub fn max_degree(&self) -> f64 {
        self.a + self.b - 0.5
    }

    /// Constraints for orthogonality up to degree `n_max`.
    pub fn validate(&self, n_max: usize) -> ValidationReport {
        let mut r = ValidationReport::default();
        r.check("a < 1/2", self.a < 0.5, format!("a = {}", self.a));
        r.check("b > 0", self.b > 0.0, format!("b = {}", self.b));
        r.check("2a even", doubled_is_even(self.a), format!("2a = {}", 2.0 * self.a));
        r.check(
            "degree bound",
            n_max as f64 <= self.max_degree(),
            format!("N = {n_max}, a + b - 1/2 = {}", self.max_degree()),
        );
        r
    }

    /// Weight at x, formed in log space.
    pub fn weight(&self, x: f64) -> f64 {
        let power = if self.a == 0.0 { 0.0 } else { -2.0 * self.a * x.abs().ln() };
        (power - self.b * (x * x).ln_1p()).exp()
    }
}

impl FamilyBParams {
    pub fn new(a: f64) -> Self {
        FamilyBParams { a }
    }

    /// (p, q, r, s) = (1, 0, −2a+2, 2)
    pub fn sym_params(&self) -> SymParams {
        SymParams::new(1.0, 0.0, -2.0 * self.a + 2.0, 2.0)
    }

    pub fn max_degree(&self) -> f64 {
        self.a - 0.5
    }

    pub fn validate(&self, n_max: usize) -> ValidationReport {
        let mut r = ValidationReport::default();
        r.check("2a even", doubled_is_even(self.a), format!("2a = {}", 2.0 * self.a));
        r.check(
            "degree bound",
            n_max as f64 <= self.max_degree(),
            format!("N = {n_max}, a - 1/2 = {}", self.max_degree()),
        );
        r
    }

    pub fn weight(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        (-2.0 * self.a * x.abs().ln() - 1.0 / (x * x)).exp()
    }
}

/// Monic A_n^{(a,b)}.
pub fn family_a(params: FamilyAParams, n: usize, check: Validation) -> Result<SymPoly> {
    params.validate(n).enforce(check)?;
    monic(&coeffs_s(params.sym_params(), n)?)
}

/// Monic B_n^{(a)}.
pub fn family_b(params: FamilyBParams, n: usize, check: Validation) -> Result<SymPoly> {
    params.validate(n).enforce(check)?;
    monic(&coeffs_s(params.sym_params(), n)?)
}

/// Build x^n Σ_k t_k (sign z)^k x^{−2k} from the terms of a terminating series.
fn poly_from_series(series: &HyperSeries, n: usize, negative_argument: bool) -> Result<SymPoly> {
    let m = half_down(n);
    let terms = series.coefficients(m)?;
    let mut coeffs = vec![0.0; n + 1];
    for (k, t) in terms.iter().enumerate() {
        let sign = if negative_argument && k % 2 == 1 { -1.0 } else { 1.0 };
        coeffs[n - 2 * k] = sign * t;
    }
    SymPoly::from_coeffs(coeffs)
}

/// A_n^{(a,b)} from x^n ₂F₁(−⌊n/2⌋, a+1/2−⌊(n+1)/2⌋; a+b−n+1/2; −1/x²).
pub fn family_a_hypergeometric(params: FamilyAParams, n: usize) -> Result<SymPoly> {
    let FamilyAParams { a, b } = params;
    let series = HyperSeries::new(
        [-(half_down(n) as f64), a + 0.5 - half_up(n) as f64],
        [a + b - n as f64 + 0.5],
    );
    poly_from_series(&series, n, true)
}

/// Which lower parameter to use in x^n ₁F₁(−⌊n/2⌋; c; 1/x²) for B_n^{(a)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BParamSource {
    /// c = a + (−1)^n/2, as printed with the hypergeometric form.
    Printed,
    /// c = a + 1/2 − n, obtained by expanding the finite sum.
    Derived,
}

impl BParamSource {
    pub fn lower_param(&self, a: f64, n: usize) -> f64 {
        match self {
            BParamSource::Printed => a + if n % 2 == 0 { 0.5 } else { -0.5 },
            BParamSource::Derived => a + 0.5 - n as f64,
        }
    }
}

/// B_n^{(a)} from its ₁F₁ representation under the chosen parameter source.
pub fn family_b_hypergeometric(params: FamilyBParams, n: usize, source: BParamSource) -> Result<SymPoly> {
    let series = HyperSeries::new([-(half_down(n) as f64)], [source.lower_param(params.a, n)]);
    poly_from_series(&series, n, false)
}

/// Outcome of checking one parameter source against the differential equation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SourceAudit {
    pub n: usize,
    pub source: BParamSource,
    pub max_scaled_residual: f64,
    pub passes: bool,
}

/// Evaluate both ₁F₁ parameterizations of B_n^{(a)} against the ODE residual.
pub fn audit_b_sources(params: FamilyBParams, n_max: usize) -> Vec<SourceAudit> {
    let sym = params.sym_params();
    let xs: Vec<f64> = (0..20).map(|i| -3.0 + 6.0 * (i as f64 + 0.5) / 20.0).collect();
    let mut out = Vec::new();
    for n in 0..=n_max {
        for source in [BParamSource::Printed, BParamSource::Derived] {
            let worst = match family_b_hypergeometric(params, n, source) {
                Ok(poly) => xs
                    .iter()
                    .map(|&x| scaled_ode_residual(sym, &poly, x))
                    .fold(0.0_f64, f64::max),
                Err(_) => f64::INFINITY,
            };
            out.push(SourceAudit {
                n,
                source,
                max_scaled_residual: worst,
                passes: worst <= 1e-9,
            });
        }
    }
    out
}

fn sign_alternation(j: usize) -> f64 {
    // 1 − (−1)^j
    if j % 2 == 1 {
        2.0
    } else {
        0.0
    }
}

/// C_j for family A.
pub fn cj_a(a: f64, b: f64, j: usize) -> Result<f64> {
    let jf = j as f64;
    let e = sign_alternation(j);
    let den = (2.0 * jf - 2.0 * a - 2.0 * b + 1.0) * (2.0 * jf - 2.0 * a - 2.0 * b - 1.0);
    if den == 0.0 {
        return Err(Error::SingularParam { context: format!("C_{j}(a = {a}, b = {b})") });
    }
    Ok((jf - e * a) * (jf - e * a - 2.0 * b) / den)
}

/// C_j for family B.
pub fn cj_b(a: f64, j: usize) -> Result<f64> {
    let jf = j as f64;
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    let den = (2.0 * jf - 2.0 * a + 1.0) * (2.0 * jf - 2.0 * a - 1.0);
    if den == 0.0 {
        return Err(Error::SingularParam { context: format!("C_{j}(a = {a})") });
    }
    Ok((-2.0 * sign * (jf - a) - 2.0 * a) / den)
}

fn signed_product(n: usize, cj: impl Fn(usize) -> Result<f64>) -> Result<SignedLog> {
    let mut acc = if n % 2 == 0 { SignedLog::ONE } else { SignedLog::from_f64(-1.0) };
    for j in 1..=n {
        acc = acc * SignedLog::from_f64(cj(j)?);
    }
    Ok(acc)
}

/// ∫ |x|^{−2a}(1+x²)^{−b} A_n² dx = (−1)^n ∏ C_j · Γ(b+a−1/2)Γ(1/2−a)/Γ(b).
pub fn norm_sq_a(params: FamilyAParams, n: usize, check: Validation) -> Result<f64> {
    params.validate(n).enforce(check)?;
    let FamilyAParams { a, b } = params;
    let prod = signed_product(n, |j| cj_a(a, b, j))?;
    let gammas = ln_gamma_signed(b + a - 0.5)? * ln_gamma_signed(0.5 - a)? / ln_gamma_signed(b)?;
    Ok((prod * gammas).value())
}

/// ∫ |x|^{−2a} e^{−1/x²} B_n² dx = (−1)^n ∏ C_j · Γ(a − 1/2).
pub fn norm_sq_b(params: FamilyBParams, n: usize, check: Validation) -> Result<f64> {
    params.validate(n).enforce(check)?;
    let a = params.a;
    let prod = signed_product(n, |j| cj_b(a, j))?;
    Ok((prod * ln_gamma_signed(a - 0.5)?).value())
}
