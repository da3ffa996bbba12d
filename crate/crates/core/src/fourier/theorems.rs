use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{gamma, is_nonpositive_integer, ln_gamma_signed, rgamma, SignedLog};
use crate::sympoly::{half_up, norm_sq_a, norm_sq_b, FamilyAParams, FamilyBParams, Validation, ValidationReport};

/// Exponents and polynomial parameters of the pair
/// g = |x|^{−2α}(1+x²)^{−β} A_n^{(c,d)}, h = |x|^{−2l}(1+x²)^{−u} A_m^{(v,w)}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairingParams {
    pub alpha: f64,
    pub beta: f64,
    pub l: f64,
    pub u: f64,
    pub c: f64,
    pub d: f64,
    pub v: f64,
    pub w: f64,
}

impl PairingParams {
    /// The pairing that turns the product g·h into the family-A weight with
    /// parameters (p, q): l = p − α, u = q − β, c = v = p, d = w = q.
    pub fn theorem1(alpha: f64, beta: f64, p: f64, q: f64) -> Self {
        PairingParams { alpha, beta, l: p - alpha, u: q - beta, c: p, d: q, v: p, w: q }
    }

    /// c = v = α + l and d = w = β + u.
    pub fn is_orthogonality_pairing(&self) -> bool {
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1.0);
        close(self.c, self.alpha + self.l)
            && close(self.v, self.c)
            && close(self.d, self.beta + self.u)
            && close(self.w, self.d)
    }
}

/// Family-B pair u = |x|^{−2a} e^{−1/(2x²)} B_n^{(b)}, v = |x|^{−2c} e^{−1/(2x²)} B_m^{(b)}
/// with b = a + c.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BPairingParams {
    pub a: f64,
    pub c: f64,
    pub b: f64,
}

impl BPairingParams {
    pub fn theorem2(a: f64, b: f64) -> Self {
        BPairingParams { a, c: b - a, b }
    }
}

pub fn theorem1_constraints(n_max: usize, alpha: f64, beta: f64, p: f64, q: f64) -> ValidationReport {
    let mut r = ValidationReport::default();
    r.check(
        "degree bound",
        n_max as f64 <= p + q - 0.5,
        format!("N = {n_max}, p + q - 1/2 = {}", p + q - 0.5),
    );
    r.check("p < 1/2", p < 0.5, format!("p = {p}"));
    let twice = 2.0 * p;
    r.check("2p even", twice == twice.round() && (twice.round() as i64) % 2 == 0, format!("2p = {twice}"));
    r.check("q > beta > 0", q > beta && beta > 0.0, format!("q = {q}, beta = {beta}"));
    r.check("0 < alpha < 1/2", alpha > 0.0 && alpha < 0.5, format!("alpha = {alpha}"));
    r.check("alpha + beta > 1/2", alpha + beta > 0.5, format!("alpha + beta = {}", alpha + beta));
    r
}

pub fn theorem2_constraints(n_max: usize, a: f64, b: f64) -> ValidationReport {
    let mut r = ValidationReport::default();
    r.check("degree bound", n_max as f64 <= b - 0.5, format!("N = {n_max}, b - 1/2 = {}", b - 0.5));
    let twice = 2.0 * b;
    r.check("2b even", twice == twice.round() && (twice.round() as i64) % 2 == 0, format!("2b = {twice}"));
    r.check("1/2 < a < b - 1/2", a > 0.5 && a < b - 0.5, format!("a = {a}, b = {b}"));
    r
}

/// ln|Γ| with sign, or `None` at a pole (where 1/Γ vanishes).
fn reciprocal_gamma_log(z: f64) -> Result<Option<SignedLog>> {
    if is_nonpositive_integer(z) {
        return Ok(None);
    }
    Ok(Some(ln_gamma_signed(z)?.recip()))
}

fn product_of_reciprocals(args: &[f64]) -> Result<Option<SignedLog>> {
    let mut acc = SignedLog::ONE;
    for &z in args {
        match reciprocal_gamma_log(z)? {
            Some(r) => acc = acc * r,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

fn factor(num: f64, den: f64, context: &str) -> Result<SignedLog> {
    if den == 0.0 {
        return Err(Error::SingularParam { context: context.to_string() });
    }
    Ok(SignedLog::from_f64(num) / SignedLog::from_f64(den))
}

/// Right-hand side of the orthogonality relation for A_n(x; α, β, p, q) and
/// A_n(x; p−α, q−β, p, q) on the diagonal, in log space.
///
/// Zero when one of the Gamma functions in the denominator sits on a pole.
pub fn theorem1_rhs(n: usize, alpha: f64, beta: f64, p: f64, q: f64, check: Validation) -> Result<f64> {
    theorem1_constraints(n, alpha, beta, p, q).enforce(check)?;
    let n1 = half_up(n) as f64;
    let mut prod = SignedLog::ONE;
    for j in 1..=n {
        let jf = j as f64;
        let e = if j % 2 == 1 { 2.0 } else { 0.0 };
        prod = prod
            * factor(
                (-jf + e * p) * (jf - e * p - 2.0 * q),
                (2.0 * jf - 2.0 * p - 2.0 * q + 1.0) * (2.0 * jf - 2.0 * p - 2.0 * q - 1.0),
                "family A pairing product",
            )?;
    }
    let numerator = ln_gamma_signed(beta)?
        * ln_gamma_signed(q - beta)?
        * ln_gamma_signed(p + q - 0.5)?
        * ln_gamma_signed(-p + 0.5)?;
    let Some(recips) = product_of_reciprocals(&[
        q,
        -alpha + 0.5 + n1,
        alpha + beta - 0.5 - n1,
        alpha - p + 0.5 + n1,
        p + q - alpha - beta - 0.5 - n1,
    ])?
    else {
        return Ok(0.0);
    };
    Ok((prod * numerator * recips).value())
}

/// The same value as norm² / (G_n(α, β) G_n(p−α, q−β)) with plain Gamma
/// products; an independent route used for cross-checking.
pub fn theorem1_rhs_via_norm(n: usize, alpha: f64, beta: f64, p: f64, q: f64) -> Result<f64> {
    let norm = norm_sq_a(FamilyAParams::new(p, q), n, Validation::Override)?;
    let n1 = half_up(n) as f64;
    let inv = |al: f64, be: f64| -> Result<f64> {
        Ok(gamma(be)? * rgamma(-al + 0.5 + n1) * rgamma(be + al - 0.5 - n1))
    };
    Ok(norm * inv(alpha, beta)? * inv(p - alpha, q - beta)?)
}

/// Right-hand side of the orthogonality relation for B_n(x; a, b) and
/// B_n(x; b−a, b) on the diagonal, in log space.
///
/// Zero when Γ(a−1/2−⌊(n+1)/2⌋) or Γ(b−a−1/2−⌊(n+1)/2⌋) sits on a pole.
pub fn theorem2_rhs(n: usize, a: f64, b: f64, check: Validation) -> Result<f64> {
    theorem2_constraints(n, a, b).enforce(check)?;
    let n1 = half_up(n) as f64;
    let mut prod = SignedLog::from_f64(2.0).powi(2 * n1 as i32) / SignedLog::new((b - 1.0) * std::f64::consts::LN_2, 1);
    for j in 1..=n {
        let jf = j as f64;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        prod = prod
            * factor(
                2.0 * sign * (jf - b) + 2.0 * b,
                (2.0 * jf - 2.0 * b + 1.0) * (2.0 * jf - 2.0 * b - 1.0),
                "family B pairing product",
            )?;
    }
    let numerator = ln_gamma_signed(b - 0.5)?;
    let Some(recips) = product_of_reciprocals(&[a - 0.5 - n1, b - a - 0.5 - n1])? else {
        return Ok(0.0);
    };
    Ok((prod * numerator * recips).value())
}

/// norm² / (K_n(a) K_n(b−a)) with plain Gamma products.
pub fn theorem2_rhs_via_norm(n: usize, a: f64, b: f64) -> Result<f64> {
    let norm = norm_sq_b(FamilyBParams::new(b), n, Validation::Override)?;
    let n1 = half_up(n) as f64;
    let inv = |x: f64| rgamma(x - 0.5 - n1) * 2f64.powf(-(x - 0.5 - n1));
    Ok(norm * inv(a) * inv(b - a))
}
