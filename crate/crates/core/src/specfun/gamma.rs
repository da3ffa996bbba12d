use std::f64::consts::PI;

use super::{is_nonpositive_integer, SignedLog};
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // y in [-1, 1]
    let y = x - 2.0 * (x / 2.0).round();
    let r = if y > 0.5 {
        1.0 - y
    } else if y < -0.5 {
        -1.0 - y
    } else {
        y
    };
    (PI * r).sin()
}

/// Lanczos series A(z) for Γ(z + 1) = √(2π) t^{z+1/2} e^{−t} A(z), t = z + g + 1/2.
fn lanczos_sum(z: f64) -> f64 {
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    a
}

fn factorial(n: usize) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Γ(z) for real z ≥ 1/2.
fn gamma_right(z: f64) -> f64 {
    if z == z.floor() && z <= 171.0 {
        return factorial(z as usize - 1);
    }
    let zm = z - 1.0;
    let t = zm + LANCZOS_G + 0.5;
    // split the power so t^{z-1/2} e^{-t} does not overflow early
    let half = t.powf((zm + 0.5) / 2.0);
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * lanczos_sum(zm)
}

/// The Gamma function for real arguments.
///
/// Negative non-integer arguments use the reflection formula.
pub fn gamma(z: f64) -> Result<f64> {
    if z.is_nan() {
        return Err(Error::Domain { function: "gamma", arg: z, reason: "NaN" });
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", arg: z });
    }
    if z < 0.5 {
        Ok(PI / (sin_pi(z) * gamma_right(1.0 - z)))
    } else {
        Ok(gamma_right(z))
    }
}

/// 1/Γ(z); entire, so the poles of Γ map to zero.
pub fn rgamma(z: f64) -> f64 {
    if is_nonpositive_integer(z) {
        return 0.0;
    }
    if z > 171.0 {
        return (-ln_gamma_positive(z)).exp();
    }
    if z < 0.5 {
        // 1/Γ(z) = sin(πz) Γ(1−z) / π
        return sin_pi(z) * gamma_right(1.0 - z) / PI;
    }
    1.0 / gamma_right(z)
}

fn ln_gamma_positive(z: f64) -> f64 {
    if z < 0.5 {
        return ln_gamma_positive(z + 1.0) - z.ln();
    }
    if z < 20.0 {
        return gamma_right(z).ln();
    }
    let zm = z - 1.0;
    let t = zm + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (zm + 0.5) * t.ln() - t + lanczos_sum(zm).ln()
}

/// ln Γ(z) for z > 0.
pub fn ln_gamma(z: f64) -> Result<f64> {
    if z.is_nan() || z <= 0.0 {
        return Err(Error::Domain { function: "ln_gamma", arg: z, reason: "requires z > 0" });
    }
    Ok(ln_gamma_positive(z))
}

/// ln |Γ(z)| together with the sign of Γ(z), for any real z off the poles.
pub fn ln_gamma_signed(z: f64) -> Result<SignedLog> {
    if z.is_nan() {
        return Err(Error::Domain { function: "ln_gamma_signed", arg: z, reason: "NaN" });
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", arg: z });
    }
    if z > 0.0 {
        return Ok(SignedLog::new(ln_gamma_positive(z), 1));
    }
    // Γ(z) = π / (sin(πz) Γ(1−z)), Γ(1−z) > 0
    let s = sin_pi(z);
    Ok(SignedLog::new(
        PI.ln() - s.abs().ln() - ln_gamma_positive(1.0 - z),
        if s > 0.0 { 1 } else { -1 },
    ))
}

/// Rising factorial (r)_k = r (r+1) … (r+k−1); (r)_0 = 1.
pub fn pochhammer(r: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (r + i as f64))
}

/// The Beta integral B(l1, l2) = Γ(l1) Γ(l2) / Γ(l1 + l2) for positive arguments.
pub fn beta(l1: f64, l2: f64) -> Result<f64> {
    if !(l1 > 0.0) || !(l2 > 0.0) {
        return Err(Error::Domain {
            function: "beta",
            arg: if l1 > 0.0 { l2 } else { l1 },
            reason: "requires both arguments > 0",
        });
    }
    let (lo, hi) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
    if lo + hi < 170.0 {
        Ok(gamma_right_any(lo) * (gamma_right_any(hi) / gamma_right_any(lo + hi)))
    } else {
        Ok((ln_gamma_positive(lo) + ln_gamma_positive(hi) - ln_gamma_positive(lo + hi)).exp())
    }
}

fn gamma_right_any(z: f64) -> f64 {
    if z < 0.5 {
        PI / (sin_pi(z) * gamma_right(1.0 - z))
    } else {
        gamma_right(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_integer_and_integer_values() {
        let sqrt_pi = PI.sqrt();
        assert!(rel(gamma(0.5).unwrap(), sqrt_pi) < 1e-15);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert!(rel(gamma(3.5).unwrap(), 15.0 * sqrt_pi / 8.0) < 1e-14);
        assert!(rel(gamma(3.5).unwrap(), 3.323_350_970_447_842_6) < 1e-14);
    }

    #[test]
    fn poles_are_errors() {
        for z in [0.0, -1.0, -2.0, -17.0] {
            assert!(matches!(gamma(z), Err(Error::Pole { .. })));
            assert!(matches!(ln_gamma_signed(z), Err(Error::Pole { .. })));
            assert_eq!(rgamma(z), 0.0);
        }
    }

    #[test]
    fn log_gamma_small_cases() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        assert!((ln_gamma(11.0).unwrap() - 3_628_800f64.ln()).abs() < 1e-13);
        assert!(matches!(ln_gamma(0.0), Err(Error::Domain { .. })));
        assert!(matches!(ln_gamma(-3.5), Err(Error::Domain { .. })));
    }

    #[test]
    fn signed_log_matches_direct_gamma() {
        for z in [-0.25, -0.75, -1.5, -2.5, -3.3, 0.3, 2.0, 7.7] {
            let g = gamma(z).unwrap();
            let sl = ln_gamma_signed(z).unwrap();
            assert!(rel(sl.value(), g) < 1e-13, "z = {z}");
        }
    }

    #[test]
    fn pochhammer_cases() {
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(0.7, 0), 1.0);
        assert_eq!(pochhammer(-2.0, 3), 0.0);
        assert_eq!(pochhammer(-2.0, 2), 2.0);
    }

    #[test]
    fn beta_values() {
        assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-15);
        assert!(rel(beta(0.5, 3.5).unwrap(), 5.0 * PI / 16.0) < 1e-14);
        assert_eq!(beta(2.3, 0.7).unwrap(), beta(0.7, 2.3).unwrap());
        assert!(beta(0.0, 1.0).is_err());
        assert!(beta(1.0, -2.0).is_err());
        assert!(rel(beta(100.0, 120.0).unwrap(), (ln_gamma(100.0).unwrap() + ln_gamma(120.0).unwrap() - ln_gamma(220.0).unwrap()).exp()) < 1e-11);
    }

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -5..5 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-2.5) + 1.0).abs() < 1e-16);
    }
}
