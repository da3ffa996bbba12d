use rayon::prelude::*;
use serde::Serialize;

use super::weighted::WeightedPoly;
use crate::error::{Error, Result};
use crate::fourier::{transform_a_closed, transform_b_closed, TransformValue};
use crate::sympoly::BParamSource;

/// Points with |s| at most this form the small-s regime.
pub const SMALL_S_LIMIT: f64 = 1e-2;
/// Looser tolerance applied inside the small-s regime.
pub const SMALL_S_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum TransformKind {
    /// |x|^{−2α}(1+x²)^{−β} A_n^{(c,d)}(x)
    A { alpha: f64, beta: f64, c: f64, d: f64 },
    /// |x|^{−2a} e^{−1/(2x²)} B_n^{(b)}(x)
    B { a: f64, b: f64, source: BParamSource },
}

impl std::fmt::Display for TransformKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TransformKind::A { alpha, beta, c, d } => write!(f, "A(alpha={alpha}, beta={beta}, c={c}, d={d})"),
            TransformKind::B { a, b, source } => {
                let reading = match source {
                    BParamSource::Printed => "printed",
                    BParamSource::Derived => "derived",
                };
                write!(f, "B(a={a}, b={b}, {reading} lower parameter)")
            }
        }
    }
}

impl TransformKind {
    fn closed(&self, n: usize, s: f64) -> Result<TransformValue> {
        match *self {
            TransformKind::A { alpha, beta, c, d } => transform_a_closed(n, alpha, beta, c, d, s),
            TransformKind::B { a, b, source } => transform_b_closed(n, a, b, s, source),
        }
    }

    fn function(&self, n: usize) -> Result<WeightedPoly> {
        match *self {
            TransformKind::A { alpha, beta, c, d } => WeightedPoly::family_a(alpha, beta, c, d, n),
            TransformKind::B { a, b, .. } => WeightedPoly::family_b(a, b, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Agree,
    /// matches near s = 0 and departs increasingly as |s| grows
    AnalyticPartOnly,
    Diverge,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::AnalyticPartOnly => "analytic-part-only",
            Verdict::Diverge => "diverge",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformPoint {
    pub s: f64,
    pub closed: Option<TransformValue>,
    pub numeric: Option<TransformValue>,
    pub abs_dev: f64,
    pub rel_dev: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TransformPoint {
    fn new(s: f64, closed: Result<TransformValue>, numeric: Result<TransformValue>) -> Self {
        let error = match (&closed, &numeric) {
            (Err(e), _) => Some(format!("closed form: {e}")),
            (_, Err(e)) => Some(format!("numeric: {e}")),
            _ => None,
        };
        let closed = closed.ok();
        let numeric = numeric.ok();
        let (abs_dev, rel_dev) = match (closed, numeric) {
            (Some(c), Some(v)) => {
                let dev = c.distance(&v);
                let scale = c.abs().max(v.abs());
                (dev, if dev == 0.0 { 0.0 } else { dev / scale })
            }
            _ => (f64::NAN, f64::NAN),
        };
        TransformPoint { s, closed, numeric, abs_dev, rel_dev, error }
    }

    fn within(&self, tol: f64) -> bool {
        self.error.is_none() && self.rel_dev <= tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformCheck {
    #[serde(flatten)]
    pub kind: TransformKind,
    pub n: usize,
    pub tol: f64,
    pub points: Vec<TransformPoint>,
    pub max_rel_dev: f64,
    pub verdict: Verdict,
}

impl TransformCheck {
    pub fn point(&self, s: f64) -> Option<&TransformPoint> {
        self.points.iter().find(|p| p.s == s)
    }

    /// One-line description for the report's findings.
    pub fn finding(&self) -> String {
        let worst = self
            .points
            .iter()
            .filter(|p| p.error.is_none())
            .max_by(|a, b| a.rel_dev.total_cmp(&b.rel_dev));
        let mut text = format!("{} n={}: {}", self.kind, self.n, self.verdict.as_str());
        if let Some(p) = worst {
            let c = p.closed.unwrap_or_default();
            let v = p.numeric.unwrap_or_default();
            text.push_str(&format!(
                "; largest deviation at s={}: closed {}{:+}i, numeric {}{:+}i, rel {:.3e}",
                p.s, c.re, c.im, v.re, v.im, p.rel_dev
            ));
        }
        let failures = self.points.iter().filter(|p| p.error.is_some()).count();
        if failures > 0 {
            text.push_str(&format!("; {failures} grid points failed"));
        }
        text
    }
}

fn classify(points: &[TransformPoint], tol: f64) -> Verdict {
    if points.iter().all(|p| p.within(tol)) {
        return Verdict::Agree;
    }
    let mut sorted: Vec<&TransformPoint> = points.iter().collect();
    sorted.sort_by(|a, b| a.s.abs().total_cmp(&b.s.abs()));
    let (small, large): (Vec<&TransformPoint>, Vec<&TransformPoint>) = sorted.iter().copied().partition(|p| p.s.abs() <= SMALL_S_LIMIT);
    if small.is_empty() || !small.iter().all(|p| p.within(SMALL_S_TOL)) {
        return Verdict::Diverge;
    }
    if large.iter().any(|p| p.error.is_some()) {
        return Verdict::Diverge;
    }
    let growing = sorted.windows(2).all(|w| w[1].abs_dev >= w[0].abs_dev * (1.0 - 1e-9));
    if growing {
        Verdict::AnalyticPartOnly
    } else {
        Verdict::Diverge
    }
}

/// Closed-form transform against the numerical transform of the explicit function on a grid.
pub fn transform_compare(kind: TransformKind, n: usize, s_grid: &[f64], tol: f64) -> Result<TransformCheck> {
    if s_grid.is_empty() {
        return Err(Error::InvalidInput("empty s grid".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let f = kind.function(n)?;
    let numeric_tol = (tol * 1e-3).max(1e-12);
    let points: Vec<TransformPoint> = s_grid
        .par_iter()
        .map(|&s| TransformPoint::new(s, kind.closed(n, s), f.transform(s, numeric_tol)))
        .collect();
    let max_rel_dev = points.iter().map(|p| p.rel_dev).fold(0.0, f64::max);
    let verdict = classify(&points, tol);
    Ok(TransformCheck { kind, n, tol, points, max_rel_dev, verdict })
}

/// s = 0, 0.25, …, 3
pub fn default_s_grid() -> Vec<f64> {
    (0..=12).map(|k| k as f64 * 0.25).collect()
}
