//! Double-exponential (tanh-sinh / exp-sinh) trapezoidal rules with nested
//! level refinement and a vector-valued batch evaluator.

use std::f64::consts::FRAC_PI_2;

use super::{QuadOptions, QuadResult};
use crate::error::{Error, Result};
use crate::specfun::CompensatedSum;

const H0: f64 = 0.5;
const SCAN_CHUNK: usize = 8;
const NEGLIGIBLE: f64 = 1e-18;
// sinh argument where exp(±π/2 sinh t) leaves the f64 range
const MAX_EXPONENT: f64 = 690.0;
const MIN_LEVEL: usize = 3;
const ROUNDING_FLOOR: f64 = 10.0 * f64::EPSILON;

/// Variable substitution x = x(t) mapping the real t line onto the domain.
#[derive(Debug, Clone, Copy)]
pub(crate) enum DeMap {
    /// (0, ∞): x = exp(π/2 sinh t)
    ExpSinh,
    /// (a, b): x = c + w tanh(π/2 sinh t)
    TanhSinh { a: f64, b: f64 },
}

impl DeMap {
    /// (x, dx/dt), or None once the node leaves the representable range.
    fn node(&self, t: f64) -> Option<(f64, f64)> {
        let u = FRAC_PI_2 * t.sinh();
        match *self {
            DeMap::ExpSinh => {
                if u.abs() > MAX_EXPONENT {
                    return None;
                }
                let x = u.exp();
                Some((x, x * FRAC_PI_2 * t.cosh()))
            }
            DeMap::TanhSinh { a, b } => {
                let hw = 0.5 * (b - a);
                let au = u.abs();
                if au > MAX_EXPONENT / 2.0 {
                    return None;
                }
                let e = (-2.0 * au).exp();
                // distance from the nearer endpoint: hw (1 − tanh|u|)
                let d = hw * 2.0 * e / (1.0 + e);
                let w = hw * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
                if d <= 0.0 || w == 0.0 {
                    return None;
                }
                let x = if u >= 0.0 { b - d } else { a + d };
                if x <= a || x >= b {
                    return None;
                }
                Some((x, w))
            }
        }
    }
}

impl DeMap {
    /// Whether the end of the node range is an infinite endpoint, where a
    /// non-negligible final term means the integral does not exist.
    fn has_open_end(&self) -> bool {
        matches!(self, DeMap::ExpSinh)
    }
}

struct Accumulator {
    sum: Vec<CompensatedSum>,
    l1: Vec<CompensatedSum>,
}

impl Accumulator {
    fn new(dim: usize) -> Self {
        Accumulator {
            sum: vec![CompensatedSum::new(); dim],
            l1: vec![CompensatedSum::new(); dim],
        }
    }

    fn add(&mut self, w: f64, values: &[f64]) {
        for (c, v) in values.iter().enumerate() {
            let term = w * v;
            self.sum[c].add(term);
            self.l1[c].add(term.abs());
        }
    }
}

fn check_finite(xs: &[f64], values: &[Vec<f64>], failed: &mut [Option<Error>]) {
    for (x, row) in xs.iter().zip(values) {
        for (c, v) in row.iter().enumerate() {
            if !v.is_finite() && failed[c].is_none() {
                failed[c] = Some(Error::NotIntegrable(format!("non-finite integrand value at x = {x:e}")));
            }
        }
    }
}

/// Integrate a vector-valued function with one shared set of nodes.
///
/// `eval` receives a batch of abscissae and returns one row of `dim` values per
/// abscissa. It may evaluate the batch in parallel. Each component converges
/// independently; components that never reach the tolerance come back as
/// `Err(NonConvergence)` carrying the last estimate.
pub(crate) fn integrate_batch<F>(map: DeMap, dim: usize, eval: F, opts: &QuadOptions) -> Vec<Result<QuadResult>>
where
    F: Fn(&[f64]) -> Vec<Vec<f64>>,
{
    let mut failed: Vec<Option<Error>> = vec![None; dim];
    let mut evaluations = 0usize;

    // Level 0: scan outwards from t = 0 to find where the terms become negligible.
    let mut acc = Accumulator::new(dim);
    let (x0, w0) = map.node(0.0).expect("t = 0 is always representable");
    let v0 = eval(&[x0]);
    evaluations += 1;
    check_finite(&[x0], &v0, &mut failed);
    acc.add(w0, &v0[0]);
    let mut max_term: Vec<f64> = v0[0].iter().map(|v| (w0 * v).abs()).collect();

    let mut extent = [0usize; 2];
    for (side, dir) in [1.0_f64, -1.0].into_iter().enumerate() {
        let mut j = 1usize;
        let mut small_run = 0;
        let mut done = false;
        while !done {
            let mut xs = Vec::with_capacity(SCAN_CHUNK);
            let mut ws = Vec::with_capacity(SCAN_CHUNK);
            for i in 0..SCAN_CHUNK {
                match map.node(dir * H0 * (j + i) as f64) {
                    Some((x, w)) => {
                        xs.push(x);
                        ws.push(w);
                    }
                    None => break,
                }
            }
            let range_end = xs.len() < SCAN_CHUNK;
            if xs.is_empty() {
                break;
            }
            let values = eval(&xs);
            evaluations += xs.len();
            for (k, (w, row)) in ws.iter().zip(&values).enumerate() {
                if small_run > 0 && row.iter().any(|v| !v.is_finite()) {
                    // overflow far out in an already negligible tail
                    done = true;
                    break;
                }
                check_finite(&xs[k..=k], std::slice::from_ref(row), &mut failed);
                acc.add(*w, row);
                let mut all_small = true;
                for (c, v) in row.iter().enumerate() {
                    let term = (w * v).abs();
                    max_term[c] = max_term[c].max(term);
                    if term > NEGLIGIBLE * max_term[c] {
                        all_small = false;
                    }
                }
                extent[side] = j;
                j += 1;
                small_run = if all_small { small_run + 1 } else { 0 };
                if small_run >= 3 {
                    done = true;
                    break;
                }
            }
            if range_end && !done && map.has_open_end() {
                // The domain edge was reached with terms still significant.
                let last = values.last().expect("non-empty batch");
                let w = *ws.last().expect("non-empty batch");
                for (c, v) in last.iter().enumerate() {
                    if (w * v).abs() > 1e-12 * max_term[c] && failed[c].is_none() {
                        failed[c] = Some(Error::NotIntegrable(format!(
                            "integrand still significant at the end of the representable range (x = {:e})",
                            xs.last().unwrap()
                        )));
                    }
                }
                done = true;
            }
        }
    }
    let t_hi = H0 * extent[0] as f64;
    let t_lo = H0 * extent[1] as f64;

    let mut estimate: Vec<f64> = acc.sum.iter().map(|s| H0 * s.value()).collect();
    let mut l1: Vec<f64> = acc.l1.iter().map(|s| H0 * s.value()).collect();
    let mut error = vec![f64::INFINITY; dim];
    let mut converged_at: Vec<Option<usize>> = vec![None; dim];
    let mut level = 0;

    while level < opts.max_level {
        level += 1;
        let h = H0 / (1u64 << level) as f64;
        let j_hi = (t_hi / h).round() as i64;
        let j_lo = -((t_lo / h).round() as i64);
        let mut xs = Vec::new();
        let mut ws = Vec::new();
        let mut j = if j_lo % 2 == 0 { j_lo + 1 } else { j_lo };
        while j <= j_hi {
            if let Some((x, w)) = map.node(j as f64 * h) {
                xs.push(x);
                ws.push(w);
            }
            j += 2;
        }
        let values = eval(&xs);
        evaluations += xs.len();
        check_finite(&xs, &values, &mut failed);
        let mut fresh = Accumulator::new(dim);
        for (w, row) in ws.iter().zip(&values) {
            fresh.add(*w, row);
        }
        for c in 0..dim {
            let next = 0.5 * estimate[c] + h * fresh.sum[c].value();
            l1[c] = 0.5 * l1[c] + h * fresh.l1[c].value();
            error[c] = (next - estimate[c]).abs().max(ROUNDING_FLOOR * l1[c]);
            estimate[c] = next;
            if level >= MIN_LEVEL && converged_at[c].is_none() && (error[c] <= opts.tol * l1[c].max(estimate[c].abs()) || error[c] <= opts.abs_tol) {
                converged_at[c] = Some(level);
            }
        }
        if converged_at.iter().zip(&failed).all(|(c, f)| c.is_some() || f.is_some()) {
            break;
        }
    }

    (0..dim)
        .map(|c| {
            if let Some(e) = failed[c].take() {
                return Err(e);
            }
            match converged_at[c] {
                Some(_) => Ok(QuadResult {
                    value: estimate[c],
                    abs_error_estimate: error[c],
                    evaluations,
                    converged: true,
                    level,
                }),
                None => Err(Error::NonConvergence {
                    tol: opts.tol,
                    estimate: error[c],
                    level,
                }),
            }
        })
        .collect()
}

/// Scalar convenience wrapper.
pub(crate) fn integrate_scalar<F>(map: DeMap, f: F, opts: &QuadOptions) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    let batch = |xs: &[f64]| xs.iter().map(|&x| vec![f(x)]).collect::<Vec<_>>();
    integrate_batch(map, 1, batch, opts)
        .pop()
        .expect("one component")
}
