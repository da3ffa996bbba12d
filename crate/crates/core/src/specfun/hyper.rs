use serde::Serialize;

use super::{is_nonpositive_integer, CompensatedSum};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 10_000;
const REL_STOP: f64 = 1e-16;

/// Parameters of a generalized hypergeometric series pFq.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperSeries {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
}

/// How a series evaluation went.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesDiagnostics {
    pub terms_used: usize,
    pub max_term_magnitude: f64,
    /// max |term| / |result|, at least 1; infinite when the result is exactly 0.
    pub cancellation_ratio: f64,
}

impl HyperSeries {
    pub fn new(numerator: impl Into<Vec<f64>>, denominator: impl Into<Vec<f64>>) -> Self {
        HyperSeries {
            numerator: numerator.into(),
            denominator: denominator.into(),
        }
    }

    /// Index of the last nonzero term when some numerator parameter is a
    /// nonpositive integer.
    pub fn termination_index(&self) -> Option<usize> {
        self.numerator
            .iter()
            .filter(|a| is_nonpositive_integer(**a))
            .map(|a| (-a) as usize)
            .min()
    }

    pub fn is_terminating(&self) -> bool {
        self.termination_index().is_some()
    }

    /// First denominator parameter that makes a term divide by zero before the
    /// series terminates.
    fn blocking_pole(&self) -> Option<f64> {
        let stop = self.termination_index();
        self.denominator.iter().copied().find(|b| {
            is_nonpositive_integer(*b) && stop.map_or(true, |t| t > (-b) as usize)
        })
    }

    fn ratio(&self, k: usize) -> f64 {
        let kf = k as f64;
        let num: f64 = self.numerator.iter().map(|a| a + kf).product();
        let den: f64 = self.denominator.iter().map(|b| b + kf).product();
        num / (den * (kf + 1.0))
    }

    /// Coefficients t_0..t_{max_k} of z^k (stops early at termination).
    pub fn coefficients(&self, max_k: usize) -> Result<Vec<f64>> {
        if let Some(b) = self.blocking_pole() {
            return Err(Error::Pole { function: "hypergeometric denominator", arg: b });
        }
        let last = self.termination_index().map_or(max_k, |t| t.min(max_k));
        let mut out = Vec::with_capacity(last + 1);
        let mut t = 1.0;
        out.push(t);
        for k in 0..last {
            t *= self.ratio(k);
            out.push(t);
        }
        Ok(out)
    }

    /// Evaluate the series at `z`.
    pub fn eval(&self, z: f64) -> Result<(f64, SeriesDiagnostics)> {
        let p = self.numerator.len();
        let q = self.denominator.len();
        let terminating = self.termination_index();
        if terminating.is_none() {
            if p > q + 1 {
                return Err(Error::Domain {
                    function: "hyp",
                    arg: z,
                    reason: "p > q + 1 diverges for z != 0",
                });
            }
            if p == q + 1 && z.abs() >= 1.0 {
                return Err(Error::Domain {
                    function: "hyp",
                    arg: z,
                    reason: "p = q + 1 requires |z| < 1",
                });
            }
        }
        if let Some(b) = self.blocking_pole() {
            return Err(Error::Pole { function: "hypergeometric denominator", arg: b });
        }

        let mut sum = CompensatedSum::new();
        let mut term = 1.0_f64;
        let mut max_term = 1.0_f64;
        sum.add(term);
        let mut used = 1;
        let mut small_run = 0;
        let mut k = 0;
        loop {
            if let Some(t) = terminating {
                if k >= t {
                    break;
                }
            } else if small_run >= 2 {
                break;
            } else if used >= MAX_TERMS {
                return Err(Error::Convergence { terms: used });
            }
            term *= self.ratio(k) * z;
            if !term.is_finite() {
                return Err(Error::Convergence { terms: used });
            }
            sum.add(term);
            used += 1;
            max_term = max_term.max(term.abs());
            let partial = sum.value();
            if term.abs() <= REL_STOP * partial.abs() {
                small_run += 1;
            } else {
                small_run = 0;
            }
            k += 1;
        }
        let value = sum.value();
        let cancellation_ratio = if value == 0.0 {
            f64::INFINITY
        } else {
            (max_term / value.abs()).max(1.0)
        };
        Ok((
            value,
            SeriesDiagnostics {
                terms_used: used,
                max_term_magnitude: max_term,
                cancellation_ratio,
            },
        ))
    }
}

/// Evaluate `series` at `z`; see [`HyperSeries::eval`].
pub fn hyp(series: &HyperSeries, z: f64) -> Result<(f64, SeriesDiagnostics)> {
    series.eval(z)
}
