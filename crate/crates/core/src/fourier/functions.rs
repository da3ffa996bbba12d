use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{pochhammer, CompensatedSum, HyperSeries};
use crate::sympoly::{half_down, half_up, odd_part, BParamSource};

/// Values whose internal cancellation exceeds this are flagged untrusted.
pub const UNTRUSTED_CANCELLATION: f64 = 1e8;

/// Parameters of A_n(x; p1, p2, p3, p4).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FnASpec {
    pub n: usize,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
}

/// Parameters of B_n(x; q1, q2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FnBSpec {
    pub n: usize,
    pub q1: f64,
    pub q2: f64,
    /// Lower parameter of the (q2 + ·)_k factor; `Printed` reads q2 + (−1)^n/2.
    pub source: BParamSource,
}

/// A function value together with how much cancellation went into it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FnValue {
    pub value: f64,
    /// Σ|terms| / |value| over the outer sum and the inner series, at least 1.
    pub cancellation_ratio: f64,
    pub terms_used: usize,
    pub trusted: bool,
}

/// True when some (x)_k with k ≤ m has a zero factor.
fn pochhammer_vanishes(x: f64, m: usize) -> bool {
    (0..m).any(|j| x + j as f64 == 0.0)
}

impl FnASpec {
    pub fn new(n: usize, p1: f64, p2: f64, p3: f64, p4: f64) -> Self {
        FnASpec { n, p1, p2, p3, p4 }
    }

    fn check(&self) -> Result<()> {
        let m = half_down(self.n);
        let n1 = half_up(self.n) as f64;
        let first = self.p3 + self.p4 - self.n as f64 + 0.5;
        let second = 0.5 + self.p1 - n1;
        for (name, x) in [("(p3+p4-n+1/2)_k", first), ("(1/2+p1-[(n+1)/2])_k", second)] {
            if pochhammer_vanishes(x, m) {
                return Err(Error::SingularParam { context: format!("A_{}: {name} vanishes", self.n) });
            }
        }
        Ok(())
    }
}

impl FnBSpec {
    /// As printed, with q2 + (−1)^n/2.
    pub fn new(n: usize, q1: f64, q2: f64) -> Self {
        FnBSpec { n, q1, q2, source: BParamSource::Printed }
    }

    pub fn with_source(self, source: BParamSource) -> Self {
        FnBSpec { source, ..self }
    }

    fn lower(&self) -> f64 {
        self.source.lower_param(self.q2, self.n)
    }

    fn check(&self) -> Result<()> {
        if pochhammer_vanishes(self.lower(), half_down(self.n)) {
            return Err(Error::SingularParam {
                context: format!("B_{}: lower Pochhammer factor vanishes", self.n),
            });
        }
        Ok(())
    }
}

struct Accum {
    sum: CompensatedSum,
    abs: f64,
    terms: usize,
}

impl Accum {
    fn new() -> Self {
        Accum { sum: CompensatedSum::new(), abs: 0.0, terms: 0 }
    }

    fn add(&mut self, coeff: f64, series: &HyperSeries, z: f64) -> Result<()> {
        let (v, d) = series.eval(z)?;
        self.sum.add(coeff * v);
        // the inner series' largest term bounds what it contributed to the magnitude
        self.abs += coeff.abs() * d.max_term_magnitude.max(v.abs());
        self.terms += d.terms_used;
        Ok(())
    }

    fn finish(self, prefactor: f64) -> FnValue {
        let value = prefactor * self.sum.value();
        let total = self.sum.value();
        let ratio = if total == 0.0 {
            if self.abs == 0.0 { 1.0 } else { f64::INFINITY }
        } else {
            (self.abs / total.abs()).max(1.0)
        };
        FnValue {
            value,
            cancellation_ratio: ratio,
            terms_used: self.terms,
            trusted: ratio <= UNTRUSTED_CANCELLATION,
        }
    }
}

fn x_power(x: f64, n: usize) -> f64 {
    if odd_part(n) == 1 {
        x
    } else {
        1.0
    }
}

/// A_n(x; p1, p2, p3, p4), the finite sum of ₁F₂ series.
pub fn fn_a(spec: &FnASpec, x: f64) -> Result<f64> {
    fn_a_detailed(spec, x).map(|v| v.value)
}

pub fn fn_a_detailed(spec: &FnASpec, x: f64) -> Result<FnValue> {
    spec.check()?;
    let FnASpec { n, p1, p2, p3, p4 } = *spec;
    let m = half_down(n);
    let n1 = half_up(n) as f64;
    let lower = 0.5 + odd_part(n) as f64;
    let mut acc = Accum::new();
    for k in 0..=m {
        let kf = k as f64;
        let coeff = pochhammer(-(m as f64), k) * pochhammer(p3 + 0.5 - n1, k) * pochhammer(p1 + p2 - 0.5 - n1, k)
            / (pochhammer(p3 + p4 - n as f64 + 0.5, k) * pochhammer(0.5 + p1 - n1, k) * pochhammer(1.0, k));
        let series = HyperSeries::new([0.5 - p1 - kf + n1], [lower, -p1 - p2 - kf + 1.5 + n1]);
        acc.add(coeff, &series, x * x / 4.0)?;
    }
    Ok(acc.finish(x_power(x, n)))
}

/// B_n(x; q1, q2), the finite sum of ₀F₂ series.
pub fn fn_b(spec: &FnBSpec, x: f64) -> Result<f64> {
    fn_b_detailed(spec, x).map(|v| v.value)
}

pub fn fn_b_detailed(spec: &FnBSpec, x: f64) -> Result<FnValue> {
    spec.check()?;
    let FnBSpec { n, q1, .. } = *spec;
    let m = half_down(n);
    let n1 = half_up(n) as f64;
    let lower = 0.5 + odd_part(n) as f64;
    let mut acc = Accum::new();
    for k in 0..=m {
        let kf = k as f64;
        let coeff = pochhammer(-(m as f64), k) * pochhammer(q1 - 0.5 - n1, k) * 2f64.powi(k as i32)
            / (pochhammer(spec.lower(), k) * pochhammer(1.0, k));
        let series = HyperSeries::new(Vec::new(), [lower, -q1 - kf + 1.5 + n1]);
        acc.add(coeff, &series, x * x / 8.0)?;
    }
    Ok(acc.finish(x_power(x, n)))
}
