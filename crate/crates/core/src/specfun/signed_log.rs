use std::ops::{Div, Mul};

/// A real number stored as `sign · exp(ln_abs)`.
///
/// Zero is `sign == 0` with `ln_abs == -inf`. Multiplication and division
/// never overflow; only [`SignedLog::value`] can.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub ln_abs: f64,
    pub sign: i8,
}

impl SignedLog {
    pub const ONE: SignedLog = SignedLog { ln_abs: 0.0, sign: 1 };
    pub const ZERO: SignedLog = SignedLog {
        ln_abs: f64::NEG_INFINITY,
        sign: 0,
    };

    pub fn new(ln_abs: f64, sign: i8) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            SignedLog { ln_abs, sign: sign.signum() }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            SignedLog {
                ln_abs: x.abs().ln(),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn recip(self) -> Self {
        debug_assert!(self.sign != 0, "reciprocal of zero");
        SignedLog { ln_abs: -self.ln_abs, sign: self.sign }
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        let sign = if n % 2 == 0 { self.sign.abs() } else { self.sign };
        SignedLog::new(self.ln_abs * n as f64, sign)
    }

    pub fn value(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => s as f64 * self.ln_abs.exp(),
        }
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;
    fn mul(self, rhs: SignedLog) -> SignedLog {
        if self.sign == 0 || rhs.sign == 0 {
            return SignedLog::ZERO;
        }
        SignedLog {
            ln_abs: self.ln_abs + rhs.ln_abs,
            sign: self.sign * rhs.sign,
        }
    }
}

impl Div for SignedLog {
    type Output = SignedLog;
    fn div(self, rhs: SignedLog) -> SignedLog {
        self * rhs.recip()
    }
}

impl std::iter::Product for SignedLog {
    fn product<I: Iterator<Item = SignedLog>>(iter: I) -> Self {
        iter.fold(SignedLog::ONE, |acc, x| acc * x)
    }
}
