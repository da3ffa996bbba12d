use rayon::prelude::*;
use serde::Serialize;

use super::relative;
use super::weighted::{Envelope, WeightedPoly, WeightedProduct};
use crate::error::{Error, Result};
use crate::fourier::{
    fn_a, fn_b, theorem1_constraints, theorem1_rhs, theorem2_constraints, theorem2_rhs, FnASpec, FnBSpec,
};
use crate::quad::{integrate_finite, integrate_line, integrate_semi_batch, QuadOptions, QuadResult};
use crate::specfun::{gamma, rgamma};
use crate::sympoly::{
    family_a, family_b, half_up, norm_sq_a, norm_sq_b, BParamSource, FamilyAParams, FamilyBParams, SymPoly,
    Validation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq9,
    Eq17,
    Thm1,
    Thm2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GramMode {
    WeightDirect,
    NumericTransform,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Match,
    Mismatch,
    /// degree beyond the range where orthogonality is claimed
    Untrusted,
    /// quadrature failed or the integral does not exist
    Diverged,
    /// normalisation factor infinite; judged at the Parseval level instead
    Degenerate,
}

/// Weight families for the polynomial Gram matrices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family")]
pub enum WeightFamily {
    A(FamilyAParams),
    B(FamilyBParams),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "theorem", rename_all = "lowercase")]
pub enum TheoremSpec {
    /// A_n(x; α, β, p, q) against A_m(x; p−α, q−β, p, q)
    Thm1 { alpha: f64, beta: f64, p: f64, q: f64 },
    /// B_n(x; a, b) against B_m(x; b−a, b)
    Thm2 { a: f64, b: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GramOptions {
    /// relative tolerance for an entry to count as a match
    pub tol: f64,
    pub check: Validation,
    /// half-width S of the s-domain in closed-form mode
    pub truncation: f64,
    pub b_source: BParamSource,
}

impl Default for GramOptions {
    fn default() -> Self {
        GramOptions { tol: 1e-8, check: Validation::Enforce, truncation: 10.0, b_source: BParamSource::Derived }
    }
}

impl GramOptions {
    pub fn with_tol(tol: f64) -> Self {
        GramOptions { tol, ..Default::default() }
    }

    fn quad_tol(&self) -> f64 {
        (self.tol * 1e-2).max(1e-10)
    }

    fn transform_tol(&self) -> f64 {
        (self.tol * 1e-4).max(1e-12)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramEntry {
    pub n: usize,
    pub m: usize,
    pub numeric: f64,
    pub theoretical: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub status: EntryStatus,
    pub error_estimate: f64,
    /// Parseval-level value before dividing out the transform prefactors
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_theoretical: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramReport {
    pub relation: Relation,
    pub mode: GramMode,
    pub params: serde_json::Value,
    #[serde(rename = "N")]
    pub n_max: usize,
    pub tol: f64,
    pub numeric: Vec<Vec<f64>>,
    pub theoretical: Vec<Vec<f64>>,
    pub entries: Vec<GramEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<f64>,
    pub notes: Vec<String>,
}

impl GramReport {
    pub fn entry(&self, n: usize, m: usize) -> &GramEntry {
        &self.entries[n * (self.n_max + 1) + m]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..=self.n_max).map(|n| self.numeric[n][n]).collect()
    }

    /// Every entry matched, directly or at the Parseval level.
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| matches!(e.status, EntryStatus::Match | EntryStatus::Degenerate))
    }

    /// Some entry mismatched or diverged.
    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| matches!(e.status, EntryStatus::Mismatch | EntryStatus::Diverged))
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for n in 0..=self.n_max {
            for m in 0..n {
                worst = worst.max((self.numeric[n][m] - self.numeric[m][n]).abs());
            }
        }
        worst
    }

    fn assemble(
        relation: Relation,
        mode: GramMode,
        params: serde_json::Value,
        n_max: usize,
        tol: f64,
        entries: Vec<GramEntry>,
    ) -> Self {
        let size = n_max + 1;
        let mut numeric = vec![vec![0.0; size]; size];
        let mut theoretical = vec![vec![0.0; size]; size];
        for e in &entries {
            numeric[e.n][e.m] = e.numeric;
            theoretical[e.n][e.m] = e.theoretical;
        }
        GramReport { relation, mode, params, n_max, tol, numeric, theoretical, entries, truncation: None, notes: Vec::new() }
    }
}

fn judge(numeric: f64, theoretical: f64, scale: f64, tol: f64) -> (f64, f64, EntryStatus) {
    let abs_dev = (numeric - theoretical).abs();
    let rel_dev = relative(abs_dev, scale);
    let status = if rel_dev <= tol { EntryStatus::Match } else { EntryStatus::Mismatch };
    (abs_dev, rel_dev, status)
}

fn diverged(n: usize, m: usize, theoretical: f64, err: &Error) -> GramEntry {
    GramEntry {
        n,
        m,
        numeric: f64::NAN,
        theoretical,
        abs_dev: f64::NAN,
        rel_dev: f64::NAN,
        status: EntryStatus::Diverged,
        error_estimate: f64::NAN,
        raw: None,
        raw_theoretical: None,
        note: Some(err.to_string()),
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).unwrap_or(serde_json::Value::Null)
}

/// Gram matrix of the polynomial family against its own weight:
/// ∫ w P_n P_m dx compared with δ_{nm} ‖P_n‖².
pub fn gram_weight_direct(family: WeightFamily, n_max: usize, opts: &GramOptions) -> Result<GramReport> {
    let (relation, envelope, bound, report) = match family {
        WeightFamily::A(p) => (Relation::Eq9, Envelope::rational(p.a, p.b), p.max_degree(), p.validate(n_max)),
        WeightFamily::B(p) => (Relation::Eq17, Envelope::flat(p.a, 1.0), p.max_degree(), p.validate(n_max)),
    };
    report.enforce(opts.check)?;
    let polys: Vec<SymPoly> = (0..=n_max)
        .map(|n| match family {
            WeightFamily::A(p) => family_a(p, n, Validation::Override),
            WeightFamily::B(p) => family_b(p, n, Validation::Override),
        })
        .collect::<Result<_>>()?;
    let norms: Vec<f64> = (0..=n_max)
        .map(|n| {
            match family {
                WeightFamily::A(p) => norm_sq_a(p, n, Validation::Override),
                WeightFamily::B(p) => norm_sq_b(p, n, Validation::Override),
            }
            .unwrap_or(f64::NAN)
        })
        .collect();

    let pairs: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (n..=n_max).map(move |m| (n, m))).collect();
    let quad_tol = opts.quad_tol();
    let upper: Vec<GramEntry> = pairs
        .par_iter()
        .map(|&(n, m)| {
            let theoretical = if n == m { norms[n] } else { 0.0 };
            let product = WeightedProduct { envelope, polys: vec![polys[n].clone(), polys[m].clone()] };
            let result = product.integrand().and_then(|f| integrate_line(&f, quad_tol));
            let mut entry = match result {
                Ok(r) => {
                    let scale = (norms[n].abs() * norms[m].abs()).sqrt();
                    let (abs_dev, rel_dev, status) = judge(r.value, theoretical, scale, opts.tol);
                    GramEntry {
                        n,
                        m,
                        numeric: r.value,
                        theoretical,
                        abs_dev,
                        rel_dev,
                        status,
                        error_estimate: r.abs_error_estimate,
                        raw: None,
                        raw_theoretical: None,
                        note: None,
                    }
                }
                Err(e) => diverged(n, m, theoretical, &e),
            };
            if (n.max(m) as f64) > bound && entry.status != EntryStatus::Diverged {
                entry.status = EntryStatus::Untrusted;
                entry.note = Some(format!("degree {} exceeds the bound {bound}", n.max(m)));
            }
            entry
        })
        .collect();

    let size = n_max + 1;
    let mut slots: Vec<Option<GramEntry>> = vec![None; size * size];
    for e in upper {
        if e.n != e.m {
            let mut mirror = e.clone();
            mirror.n = e.m;
            mirror.m = e.n;
            slots[e.m * size + e.n] = Some(mirror);
        }
        let idx = e.n * size + e.m;
        slots[idx] = Some(e);
    }
    let entries = slots.into_iter().map(|e| e.expect("every entry computed")).collect();
    let params = match family {
        WeightFamily::A(p) => to_json(&p),
        WeightFamily::B(p) => to_json(&p),
    };
    let mut report = GramReport::assemble(relation, GramMode::WeightDirect, params, n_max, opts.tol, entries);
    report.notes.push(format!("quadrature tolerance {quad_tol:e}"));
    Ok(report)
}

/// Per-theorem setup: the two function sequences, the transform prefactors
/// and both theoretical levels.
struct TheoremSetup {
    relation: Relation,
    left: Vec<WeightedPoly>,
    right: Vec<WeightedPoly>,
    /// 1 / prefactor for each left and right function (0 at a Gamma pole)
    inv_left: Vec<f64>,
    inv_right: Vec<f64>,
    raw_diag: Vec<f64>,
    rhs_diag: Vec<f64>,
    bound: f64,
}

fn inv_prefactor_a(n: usize, alpha: f64, beta: f64) -> Result<f64> {
    let n1 = half_up(n) as f64;
    Ok(gamma(beta)? * rgamma(-alpha + 0.5 + n1) * rgamma(beta + alpha - 0.5 - n1))
}

fn inv_prefactor_b(n: usize, a: f64) -> f64 {
    let e = a - 0.5 - half_up(n) as f64;
    rgamma(e) * 2f64.powf(-e)
}

impl TheoremSetup {
    fn new(theorem: TheoremSpec, n_max: usize, check: Validation) -> Result<Self> {
        let degrees = 0..=n_max;
        match theorem {
            TheoremSpec::Thm1 { alpha, beta, p, q } => {
                theorem1_constraints(n_max, alpha, beta, p, q).enforce(check)?;
                let (l, u) = (p - alpha, q - beta);
                Ok(TheoremSetup {
                    relation: Relation::Thm1,
                    left: degrees.clone().map(|n| WeightedPoly::family_a(alpha, beta, p, q, n)).collect::<Result<_>>()?,
                    right: degrees.clone().map(|n| WeightedPoly::family_a(l, u, p, q, n)).collect::<Result<_>>()?,
                    inv_left: degrees.clone().map(|n| inv_prefactor_a(n, alpha, beta)).collect::<Result<_>>()?,
                    inv_right: degrees.clone().map(|n| inv_prefactor_a(n, l, u)).collect::<Result<_>>()?,
                    raw_diag: degrees
                        .clone()
                        .map(|n| norm_sq_a(FamilyAParams::new(p, q), n, Validation::Override))
                        .collect::<Result<_>>()?,
                    rhs_diag: degrees
                        .map(|n| theorem1_rhs(n, alpha, beta, p, q, Validation::Override))
                        .collect::<Result<_>>()?,
                    bound: p + q - 0.5,
                })
            }
            TheoremSpec::Thm2 { a, b } => {
                theorem2_constraints(n_max, a, b).enforce(check)?;
                let c = b - a;
                Ok(TheoremSetup {
                    relation: Relation::Thm2,
                    left: degrees.clone().map(|n| WeightedPoly::family_b(a, b, n)).collect::<Result<_>>()?,
                    right: degrees.clone().map(|n| WeightedPoly::family_b(c, b, n)).collect::<Result<_>>()?,
                    inv_left: degrees.clone().map(|n| inv_prefactor_b(n, a)).collect(),
                    inv_right: degrees.clone().map(|n| inv_prefactor_b(n, c)).collect(),
                    raw_diag: degrees
                        .clone()
                        .map(|n| norm_sq_b(FamilyBParams::new(b), n, Validation::Override))
                        .collect::<Result<_>>()?,
                    rhs_diag: degrees.map(|n| theorem2_rhs(n, a, b, Validation::Override)).collect::<Result<_>>()?,
                    bound: b - 0.5,
                })
            }
        }
    }

    fn flag_degree(&self, entry: &mut GramEntry) {
        let top = entry.n.max(entry.m);
        if (top as f64) > self.bound && entry.status != EntryStatus::Diverged {
            entry.status = EntryStatus::Untrusted;
            entry.note = Some(format!("degree {top} exceeds the bound {}", self.bound));
        }
    }
}

/// Gram matrix of the functions A_n / B_n of the chosen orthogonality theorem.
///
/// `NumericTransform` computes (1/2π)∫ F(g_n) conj F(h_m) ds from numerically
/// transformed g_n, h_m and divides by the transform prefactors, so the
/// theoretical side is the printed right-hand side. Where a prefactor is
/// infinite the entry is judged at the Parseval level against δ‖P_n‖².
/// `ClosedForm` integrates the closed forms over [−S, S] instead.
pub fn gram_fn(theorem: TheoremSpec, n_max: usize, mode: GramMode, opts: &GramOptions) -> Result<GramReport> {
    let setup = TheoremSetup::new(theorem, n_max, opts.check)?;
    match mode {
        GramMode::NumericTransform => gram_numeric_transform(theorem, &setup, n_max, opts),
        GramMode::ClosedForm => gram_closed_form(theorem, &setup, n_max, opts),
        GramMode::WeightDirect => Err(Error::InvalidInput(
            "weight-direct mode applies to the polynomial relations eq9 and eq17".into(),
        )),
    }
}

fn gram_numeric_transform(theorem: TheoremSpec, setup: &TheoremSetup, n_max: usize, opts: &GramOptions) -> Result<GramReport> {
    let size = n_max + 1;
    let pairs: Vec<(usize, usize)> =
        (0..size).flat_map(|n| (0..size).map(move |m| (n, m))).filter(|(n, m)| (n + m) % 2 == 0).collect();
    let transform_tol = opts.transform_tol();
    let eval = |ss: &[f64]| -> Vec<Vec<f64>> {
        ss.par_iter()
            .map(|&s| {
                let real = |f: &WeightedPoly| f.transform(s, transform_tol).map(|v| v.strip_phase(f.parity())).unwrap_or(f64::NAN);
                let left: Vec<f64> = setup.left.iter().map(real).collect();
                let right: Vec<f64> = setup.right.iter().map(real).collect();
                pairs.iter().map(|&(n, m)| left[n] * right[m] / std::f64::consts::PI).collect()
            })
            .collect()
    };
    let quad = QuadOptions::with_tol(opts.quad_tol());
    let results = integrate_semi_batch(pairs.len(), eval, &quad);

    let mut entries = Vec::with_capacity(size * size);
    for n in 0..size {
        for m in 0..size {
            let raw_theory = if n == m { setup.raw_diag[n] } else { 0.0 };
            let rhs_theory = if n == m { setup.rhs_diag[n] } else { 0.0 };
            let inv = setup.inv_left[n] * setup.inv_right[m];
            let mut entry = if (n + m) % 2 == 1 {
                // product of an even and an odd transform integrates to zero exactly
                GramEntry {
                    n,
                    m,
                    numeric: 0.0,
                    theoretical: 0.0,
                    abs_dev: 0.0,
                    rel_dev: 0.0,
                    status: EntryStatus::Match,
                    error_estimate: 0.0,
                    raw: Some(0.0),
                    raw_theoretical: Some(0.0),
                    note: Some("opposite parity".into()),
                }
            } else {
                let idx = pairs.iter().position(|&p| p == (n, m)).expect("same-parity pair");
                match &results[idx] {
                    Ok(QuadResult { value: raw, abs_error_estimate, .. }) => {
                        let numeric = raw * inv;
                        if inv == 0.0 {
                            let scale = (setup.raw_diag[n].abs() * setup.raw_diag[m].abs()).sqrt();
                            let (abs_dev, rel_dev, status) = judge(*raw, raw_theory, scale, opts.tol);
                            GramEntry {
                                n,
                                m,
                                numeric,
                                theoretical: rhs_theory,
                                abs_dev,
                                rel_dev,
                                status: if status == EntryStatus::Match { EntryStatus::Degenerate } else { status },
                                error_estimate: *abs_error_estimate,
                                raw: Some(*raw),
                                raw_theoretical: Some(raw_theory),
                                note: Some("transform prefactor infinite (Gamma pole); compared at the Parseval level".into()),
                            }
                        } else {
                            let scale = (setup.raw_diag[n].abs() * setup.raw_diag[m].abs()).sqrt() * inv.abs();
                            let (abs_dev, rel_dev, status) = judge(numeric, rhs_theory, scale, opts.tol);
                            GramEntry {
                                n,
                                m,
                                numeric,
                                theoretical: rhs_theory,
                                abs_dev,
                                rel_dev,
                                status,
                                error_estimate: abs_error_estimate * inv.abs(),
                                raw: Some(*raw),
                                raw_theoretical: Some(raw_theory),
                                note: None,
                            }
                        }
                    }
                    Err(e) => diverged(n, m, rhs_theory, e),
                }
            };
            setup.flag_degree(&mut entry);
            entries.push(entry);
        }
    }
    let mut report = GramReport::assemble(setup.relation, GramMode::NumericTransform, to_json(&theorem), n_max, opts.tol, entries);
    report.notes.push(format!(
        "s-integral tolerance {:e}, transform tolerance {transform_tol:e}",
        opts.quad_tol()
    ));
    Ok(report)
}

/// |f| increasing across the last samples up to S by more than a factor 10.
fn grows(f: &dyn Fn(f64) -> Result<f64>, s_max: f64) -> Result<bool> {
    let samples = [0.25, 0.5, 0.75, 1.0].map(|t| t * s_max);
    let mut values = Vec::with_capacity(samples.len());
    for s in samples {
        values.push(f(s)?.abs());
    }
    let increasing = values.windows(2).all(|w| w[1] >= w[0]);
    Ok(increasing && values[3] > 10.0 * values[0])
}

fn gram_closed_form(theorem: TheoremSpec, setup: &TheoremSetup, n_max: usize, opts: &GramOptions) -> Result<GramReport> {
    let size = n_max + 1;
    let s_max = opts.truncation;
    if !(s_max > 0.0) {
        return Err(Error::InvalidInput(format!("truncation must be positive, got {s_max}")));
    }
    let closed = |n: usize, right: bool, s: f64| -> Result<f64> {
        match theorem {
            TheoremSpec::Thm1 { alpha, beta, p, q } => {
                let (p1, p2) = if right { (p - alpha, q - beta) } else { (alpha, beta) };
                fn_a(&FnASpec::new(n, p1, p2, p, q), s)
            }
            TheoremSpec::Thm2 { a, b } => {
                let q1 = if right { b - a } else { a };
                fn_b(&FnBSpec::new(n, q1, b).with_source(opts.b_source), s)
            }
        }
    };
    let quad = QuadOptions::with_tol(opts.quad_tol());
    let pairs: Vec<(usize, usize)> = (0..size).flat_map(|n| (0..size).map(move |m| (n, m))).collect();
    let entries: Vec<GramEntry> = pairs
        .par_iter()
        .map(|&(n, m)| {
            let theoretical = if n == m { setup.rhs_diag[n] } else { 0.0 };
            let product = |s: f64| -> Result<f64> { Ok(closed(n, false, s)? * closed(m, true, s)? / std::f64::consts::PI) };
            let mut entry = if (n + m) % 2 == 1 {
                GramEntry {
                    n,
                    m,
                    numeric: 0.0,
                    theoretical: 0.0,
                    abs_dev: 0.0,
                    rel_dev: 0.0,
                    status: EntryStatus::Match,
                    error_estimate: 0.0,
                    raw: None,
                    raw_theoretical: None,
                    note: Some("opposite parity".into()),
                }
            } else {
                match grows(&product, s_max) {
                    Err(e) => diverged(n, m, theoretical, &e),
                    Ok(growing) => {
                        let failure = std::sync::Mutex::new(None);
                        let r = integrate_finite(
                            |s| match product(s) {
                                Ok(v) => v,
                                Err(e) => {
                                    failure.lock().expect("unpoisoned").get_or_insert(e);
                                    f64::NAN
                                }
                            },
                            0.0,
                            s_max,
                            &quad,
                        );
                        let failure = failure.into_inner().expect("unpoisoned");
                        match (r, failure) {
                            (_, Some(e)) | (Err(e), None) => diverged(n, m, theoretical, &e),
                            (Ok(r), None) => {
                                let scale = (setup.rhs_diag[n].abs() * setup.rhs_diag[m].abs()).sqrt();
                                let (abs_dev, rel_dev, status) = judge(r.value, theoretical, scale, opts.tol);
                                GramEntry {
                                    n,
                                    m,
                                    numeric: r.value,
                                    theoretical,
                                    abs_dev,
                                    rel_dev,
                                    status: if growing { EntryStatus::Diverged } else { status },
                                    error_estimate: r.abs_error_estimate,
                                    raw: None,
                                    raw_theoretical: None,
                                    note: growing.then(|| format!("integrand grows with |s|; value depends on the truncation S = {s_max}")),
                                }
                            }
                        }
                    }
                }
            };
            setup.flag_degree(&mut entry);
            entry
        })
        .collect();
    let mut report = GramReport::assemble(setup.relation, GramMode::ClosedForm, to_json(&theorem), n_max, opts.tol, entries);
    report.truncation = Some(s_max);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn eq9_weight_direct() {
        let r = gram_weight_direct(WeightFamily::A(FamilyAParams::new(0.0, 4.0)), 3, &GramOptions::with_tol(1e-8)).unwrap();
        let expected = [5.0 * PI / 16.0, PI / 16.0, PI / 20.0, PI / 4.0];
        for (d, e) in r.diagonal().iter().zip(expected) {
            assert!((d - e).abs() < 1e-8 * e, "{d} vs {e}");
        }
        assert!(r.all_match(), "{:?}", r.entries);
        assert!(r.max_asymmetry() <= 1e-12);
    }

    #[test]
    fn degree_bound_is_enforced_or_flagged() {
        let family = WeightFamily::A(FamilyAParams::new(0.0, 4.0));
        assert!(matches!(gram_weight_direct(family, 4, &GramOptions::default()), Err(Error::Constraint(_))));
        let opts = GramOptions { check: Validation::Override, ..Default::default() };
        let r = gram_weight_direct(family, 4, &opts).unwrap();
        assert!(matches!(r.entry(4, 4).status, EntryStatus::Untrusted | EntryStatus::Diverged));
        assert_eq!(r.entry(1, 1).status, EntryStatus::Match);
    }

    #[test]
    fn eq17_weight_direct() {
        let r = gram_weight_direct(WeightFamily::B(FamilyBParams::new(4.0)), 3, &GramOptions::with_tol(1e-8)).unwrap();
        let sp = PI.sqrt();
        let expected = [15.0 * sp / 8.0, 3.0 * sp / 4.0, sp / 5.0];
        for (d, e) in r.diagonal().iter().zip(expected) {
            assert!((d - e).abs() < 1e-8 * e, "{d} vs {e}");
        }
        assert!(r.all_match());
    }

    #[test]
    fn closed_form_mode_produces_a_complete_report() {
        let thm = TheoremSpec::Thm1 { alpha: 0.25, beta: 2.0, p: 0.0, q: 4.0 };
        let r = gram_fn(thm, 3, GramMode::ClosedForm, &GramOptions::with_tol(1e-6)).unwrap();
        assert_eq!(r.entries.len(), 16);
        assert_eq!(r.truncation, Some(10.0));
        assert!(r.entries.iter().any(|e| e.status == EntryStatus::Diverged));
    }
}

#[cfg(test)]
mod transform_tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn theorem1_numeric_transform() {
        let thm = TheoremSpec::Thm1 { alpha: 0.25, beta: 2.0, p: 0.0, q: 4.0 };
        let r = gram_fn(thm, 3, GramMode::NumericTransform, &GramOptions::with_tol(1e-6)).unwrap();
        let expected = [0.26525823848649223, 0.053051647697298448, 0.042441318157838761, 0.018189136353359469];
        for (d, e) in r.diagonal().iter().zip(expected) {
            assert!((d - e).abs() < 1e-6 * e, "{d} vs {e}");
        }
        assert!(r.all_match(), "{:?}", r.entries);
    }

    #[test]
    fn theorem2_numeric_transform() {
        let thm = TheoremSpec::Thm2 { a: 1.5, b: 4.0 };
        let r = gram_fn(thm, 3, GramMode::NumericTransform, &GramOptions::with_tol(1e-6)).unwrap();
        assert!(r.all_match(), "{:?}", r.entries);
        let d = r.entry(0, 0);
        assert_eq!(d.status, EntryStatus::Match);
        assert!((d.numeric - 15.0 * PI.sqrt() / 64.0).abs() < 1e-6 * d.numeric);
        // B_2(x; 3/2, 4) hits a Gamma pole; the Parseval-level value is the eq17 norm
        let e = r.entry(2, 2);
        assert_eq!(e.status, EntryStatus::Degenerate);
        assert!((e.raw.unwrap() - PI.sqrt() / 5.0).abs() < 1e-6);
    }
}

