use serde::Serialize;

use crate::error::Result;
use crate::fourier::TransformValue;
use crate::quad::{fourier_numeric_with, Decay, FourierMethod, Integrand};
use crate::sympoly::{family_a, family_b, BParamSource, FamilyAParams, FamilyBParams, SymPoly, Validation};

/// |x|^{−power} (1+x²)^{−rational} exp(−flat/x²)
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Envelope {
    pub power: f64,
    pub rational: f64,
    pub flat: f64,
}

impl Envelope {
    /// |x|^{−2α}(1+x²)^{−β}
    pub fn rational(alpha: f64, beta: f64) -> Self {
        Envelope { power: 2.0 * alpha, rational: beta, flat: 0.0 }
    }

    /// |x|^{−2a} exp(−flat/x²)
    pub fn flat(a: f64, flat: f64) -> Self {
        Envelope { power: 2.0 * a, rational: 0.0, flat }
    }

    pub fn times(&self, other: &Envelope) -> Envelope {
        Envelope {
            power: self.power + other.power,
            rational: self.rational + other.rational,
            flat: self.flat + other.flat,
        }
    }

    /// ln of the envelope at x ≠ 0.
    pub fn ln(&self, x: f64) -> f64 {
        let ax = x.abs();
        let mut v = 0.0;
        if self.power != 0.0 {
            v -= self.power * ax.ln();
        }
        if self.rational != 0.0 {
            v -= self.rational * (x * x).ln_1p();
        }
        if self.flat != 0.0 {
            v -= self.flat / (x * x);
        }
        v
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 {
            return self.at_origin();
        }
        self.ln(x).exp()
    }

    fn at_origin(&self) -> f64 {
        if self.flat > 0.0 || self.power < 0.0 {
            0.0
        } else if self.power == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    }
}

/// (ln|P(x)|, sign P(x)) without overflow for large |x|.
pub(crate) fn ln_abs_poly(poly: &SymPoly, x: f64) -> (f64, f64) {
    let n = poly.degree();
    let (value, ln_scale) = if x.abs() <= 1.0 {
        (poly.eval(x), 0.0)
    } else {
        // P(x) = x^n Σ c_j x^{j−n}
        let t = 1.0 / x;
        let q = poly.coeffs().iter().fold(0.0, |acc, c| acc * t + c);
        let sign_x = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        (q * sign_x, n as f64 * x.abs().ln())
    };
    if value == 0.0 {
        (f64::NEG_INFINITY, 0.0)
    } else {
        (value.abs().ln() + ln_scale, value.signum())
    }
}

/// An envelope times a product of polynomials, evaluated in log space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedProduct {
    pub envelope: Envelope,
    pub polys: Vec<SymPoly>,
}

impl WeightedProduct {
    pub fn degree(&self) -> usize {
        self.polys.iter().map(SymPoly::degree).sum()
    }

    pub fn parity(&self) -> usize {
        self.degree() % 2
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 {
            let p: f64 = self.polys.iter().map(|p| p.eval(0.0)).product();
            if p == 0.0 {
                return 0.0;
            }
            return p * self.envelope.eval(0.0);
        }
        let mut ln = self.envelope.ln(x);
        let mut sign = 1.0;
        for p in &self.polys {
            let (l, s) = ln_abs_poly(p, x);
            if s == 0.0 {
                return 0.0;
            }
            ln += l;
            sign *= s;
        }
        sign * ln.exp()
    }

    /// Exponent σ with |f| = O(|x|^σ) at 0.
    pub fn singular_exponent(&self) -> f64 {
        if self.envelope.flat > 0.0 {
            return 0.0;
        }
        let low: usize = self.polys.iter().map(|p| p.parity()).sum();
        -self.envelope.power + low as f64
    }

    /// Decay exponent at infinity.
    pub fn decay_rate(&self) -> f64 {
        self.envelope.power + 2.0 * self.envelope.rational - self.degree() as f64
    }

    pub fn integrand(&self) -> Result<Integrand<'_>> {
        Integrand::new(move |x| self.eval(x), self.singular_exponent(), Decay::Polynomial(self.decay_rate()))
    }
}

/// One function of the form envelope × polynomial, tagged with where it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedPoly {
    pub label: String,
    pub product: WeightedProduct,
}

impl WeightedPoly {
    pub fn new(label: impl Into<String>, envelope: Envelope, poly: SymPoly) -> Self {
        WeightedPoly { label: label.into(), product: WeightedProduct { envelope, polys: vec![poly] } }
    }

    /// |x|^{−2α}(1+x²)^{−β} A_n^{(c,d)}(x)
    pub fn family_a(alpha: f64, beta: f64, c: f64, d: f64, n: usize) -> Result<Self> {
        let poly = family_a(FamilyAParams::new(c, d), n, Validation::Override)?;
        Ok(Self::new(
            format!("|x|^(-2*{alpha}) (1+x^2)^(-{beta}) A_{n}^({c},{d})"),
            Envelope::rational(alpha, beta),
            poly,
        ))
    }

    /// |x|^{−2a} e^{−1/(2x²)} B_n^{(b)}(x)
    pub fn family_b(a: f64, b: f64, n: usize) -> Result<Self> {
        let poly = family_b(FamilyBParams::new(b), n, Validation::Override)?;
        Ok(Self::new(format!("|x|^(-2*{a}) exp(-1/(2x^2)) B_{n}^({b})"), Envelope::flat(a, 0.5), poly))
    }

    pub fn degree(&self) -> usize {
        self.product.degree()
    }

    pub fn parity(&self) -> usize {
        self.product.parity()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.product.eval(x)
    }

    /// Numerical Fourier transform at s.
    pub fn transform(&self, s: f64, tol: f64) -> Result<TransformValue> {
        let f = self.product.integrand()?;
        Ok(fourier_numeric_with(&f, self.parity(), s, tol, FourierMethod::Auto)?.value)
    }

    /// The pointwise product with another weighted polynomial.
    pub fn times(&self, other: &WeightedPoly) -> WeightedProduct {
        let mut polys = self.product.polys.clone();
        polys.extend(other.product.polys.iter().cloned());
        WeightedProduct { envelope: self.product.envelope.times(&other.product.envelope), polys }
    }
}

/// Which ₁F₁ lower parameter the closed-form family-B transforms use in `verify`.
pub const DEFAULT_B_SOURCE: BParamSource = BParamSource::Derived;
