use serde::Serialize;

/// A complex transform value. Real-valued results carry `im == 0.0` exactly
/// and imaginary ones `re == 0.0` exactly; the phase is never rounded in.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct TransformValue {
    pub re: f64,
    pub im: f64,
}

impl TransformValue {
    pub fn new(re: f64, im: f64) -> Self {
        TransformValue { re, im }
    }

    pub fn real(re: f64) -> Self {
        TransformValue { re, im: 0.0 }
    }

    pub fn imaginary(im: f64) -> Self {
        TransformValue { re: 0.0, im }
    }

    /// `x · (−i)^δ` for δ ∈ {0, 1}.
    pub fn with_phase(x: f64, parity: usize) -> Self {
        if parity % 2 == 0 {
            Self::real(x)
        } else {
            Self::imaginary(-x)
        }
    }

    /// Undo [`TransformValue::with_phase`]: the real number `x` with `self = x (−i)^δ`.
    pub fn strip_phase(&self, parity: usize) -> f64 {
        if parity % 2 == 0 {
            self.re
        } else {
            -self.im
        }
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        TransformValue { re: self.re, im: -self.im }
    }

    pub fn scale(&self, c: f64) -> Self {
        TransformValue { re: c * self.re, im: c * self.im }
    }

    /// |self − other|.
    pub fn distance(&self, other: &TransformValue) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}
