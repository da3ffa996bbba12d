//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.
//!
//! Every target is first reproduced by an oracle that does not go through the
//! library: exact rational moments, the Gamma reflection formula, or a known
//! Fourier pair.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{moment_a, moment_b, monic_family, q, rel, to_f64, Q};
use finite_ortho::fourier::{
    theorem1_rhs, theorem2_rhs, transform_a_closed, transform_a_kernel_sum, transform_b_closed,
    transform_b_kernel_sum,
};
use finite_ortho::quad::{fourier_numeric, Decay, Integrand};
use finite_ortho::suite::{run_suite, SuiteOptions};
use finite_ortho::sympoly::{family_a, family_b, norm_sq_b, BParamSource, FamilyAParams, FamilyBParams, Validation};
use finite_ortho::verify::{
    default_s_grid, gram_fn, gram_weight_direct, parseval_corpus, parseval_pair, transform_compare, EntryStatus,
    GramMode, GramOptions, GramReport, TheoremSpec, TransformKind, Verdict, WeightFamily,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    body: fn() -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn polynomial_exactness() -> Outcome {
    const TOL: f64 = 1e-12;
    let (polys, _) = monic_family(&|k| moment_a(0, 4, k), 3);
    let target: [Vec<Q>; 4] = [
        vec![q(1, 1)],
        vec![q(0, 1), q(1, 1)],
        vec![q(-1, 5), q(0, 1), q(1, 1)],
        vec![q(0, 1), q(-1, 1), q(0, 1), q(1, 1)],
    ];
    ensure(polys.as_slice() == target.as_slice(), || format!("rational oracle disagrees with target: {polys:?}"))?;
    let mut worst = 0.0_f64;
    for (n, exact) in target.iter().enumerate() {
        let p = family_a(FamilyAParams::new(0.0, 4.0), n, Validation::Enforce).map_err(|e| e.to_string())?;
        ensure(p.coeffs().len() == exact.len(), || format!("degree of A_{n}"))?;
        for (c, e) in p.coeffs().iter().zip(exact) {
            worst = worst.max((c - to_f64(e)).abs());
        }
    }
    ensure(worst <= TOL, || format!("max coefficient error {worst:e} > {TOL:e}"))?;
    Ok(format!("max coefficient error {worst:.1e} (tol {TOL:.0e})"))
}

/// x²(px²+q)y″ + x(rx²+s)y′ − (n(r+(n−1)p)x² + [n odd]s)y, scaled by max|c|(1+|x|)^{n+2}.
fn residual(pqrs: [f64; 4], coeffs: &[f64], x: f64) -> f64 {
    let [p, qq, r, s] = pqrs;
    let n = coeffs.len() - 1;
    let mut y = 0.0;
    let mut d1 = 0.0;
    let mut d2 = 0.0;
    for (j, c) in coeffs.iter().enumerate() {
        let jf = j as f64;
        y += c * x.powi(j as i32);
        if j >= 1 {
            d1 += jf * c * x.powi(j as i32 - 1);
        }
        if j >= 2 {
            d2 += jf * (jf - 1.0) * c * x.powi(j as i32 - 2);
        }
    }
    let nf = n as f64;
    let odd = (n % 2) as f64;
    let x2 = x * x;
    let res = x2 * (p * x2 + qq) * d2 + x * (r * x2 + s) * d1 - (nf * (r + (nf - 1.0) * p) * x2 + odd * s) * y;
    let scale = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs())) * (1.0 + x.abs()).powi(n as i32 + 2);
    res.abs() / scale
}

fn ode_residuals() -> Outcome {
    const TOL: f64 = 1e-9;
    let xs: Vec<f64> = (0..20).map(|i| -3.0 + 6.0 * (i as f64 + 0.5) / 20.0).collect();
    let mut worst = 0.0_f64;
    let mut count = 0;
    for a in [0.0, -1.0, -2.0, -3.0, -4.0] {
        for db in [0.0, 0.5, 1.5, 3.0, 5.0] {
            let b = 6.5 - a + db;
            let pqrs = [1.0, 1.0, -2.0 * a - 2.0 * b + 2.0, -2.0 * a];
            for n in 0..=6 {
                let p = family_a(FamilyAParams::new(a, b), n, Validation::Enforce).map_err(|e| e.to_string())?;
                for &x in &xs {
                    worst = worst.max(residual(pqrs, p.coeffs(), x));
                    count += 1;
                }
            }
        }
    }
    for a in 7..32 {
        let a = a as f64;
        let pqrs = [1.0, 0.0, -2.0 * a + 2.0, 2.0];
        for n in 0..=6 {
            let p = family_b(FamilyBParams::new(a), n, Validation::Enforce).map_err(|e| e.to_string())?;
            for &x in &xs {
                worst = worst.max(residual(pqrs, p.coeffs(), x));
                count += 1;
            }
        }
    }
    ensure(worst <= TOL, || format!("max scaled residual {worst:e} > {TOL:e}"))?;
    Ok(format!("max scaled residual {worst:.1e} over {count} evaluations (tol {TOL:.0e})"))
}

/// Diagonal against `expected` and off-diagonals against √(g_nn g_mm).
fn gram_against(report: &GramReport, expected: &[f64], tol: f64) -> Outcome {
    let n = expected.len();
    let mut diag = 0.0_f64;
    let mut off = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let v = report.numeric[i][j];
            if i == j {
                diag = diag.max(rel(v, expected[i]));
            } else {
                off = off.max(v.abs() / (expected[i] * expected[j]).sqrt());
            }
        }
    }
    ensure(diag <= tol && off <= tol, || format!("diagonal rel {diag:e}, off-diagonal {off:e}, tol {tol:e}"))?;
    Ok(format!("diagonal rel {diag:.1e}, off-diagonal {off:.1e} (tol {tol:.0e})"))
}

fn eq9_gram() -> Outcome {
    const TOL: f64 = 1e-8;
    let (_, norms) = monic_family(&|k| moment_a(0, 4, k), 3);
    let oracle: Vec<f64> = norms.iter().map(|h| to_f64(h) * PI).collect();
    let target = [5.0 * PI / 16.0, PI / 16.0, PI / 20.0, PI / 4.0];
    for (o, t) in oracle.iter().zip(&target) {
        ensure(rel(*o, *t) <= 1e-15, || format!("oracle {oracle:?} disagrees with target {target:?}"))?;
    }
    let report = gram_weight_direct(WeightFamily::A(FamilyAParams::new(0.0, 4.0)), 3, &GramOptions::with_tol(TOL))
        .map_err(|e| e.to_string())?;
    gram_against(&report, &oracle, TOL)
}

fn eq17_gram() -> Outcome {
    const TOL: f64 = 1e-8;
    let (_, norms) = monic_family(&|k| moment_b(4, k), 3);
    let oracle: Vec<f64> = norms.iter().map(|h| to_f64(h) * PI.sqrt()).collect();
    let root = PI.sqrt();
    let target = [15.0 * root / 8.0, 3.0 * root / 4.0, root / 5.0];
    for (o, t) in oracle.iter().zip(&target) {
        ensure(rel(*o, *t) <= 1e-15, || format!("oracle {oracle:?} disagrees with target {target:?}"))?;
    }
    let product = norm_sq_b(FamilyBParams::new(4.0), 3, Validation::Enforce).map_err(|e| e.to_string())?;
    ensure(rel(product, oracle[3]) <= 1e-13, || format!("norm product {product} vs moment oracle {}", oracle[3]))?;
    let report = gram_weight_direct(WeightFamily::B(FamilyBParams::new(4.0)), 3, &GramOptions::with_tol(TOL))
        .map_err(|e| e.to_string())?;
    gram_against(&report, &oracle, TOL)
}

fn parseval() -> Outcome {
    const TOL: f64 = 1e-6;
    let pairs = parseval_corpus().map_err(|e| e.to_string())?;
    ensure(pairs.len() == 6, || format!("corpus has {} pairs", pairs.len()))?;
    let (_, a_norms) = monic_family(&|k| moment_a(0, 4, k), 2);
    let (_, b_norms) = monic_family(&|k| moment_b(4, k), 2);
    // (1+x²)^{-2} has transform (π/2)(1+|s|)e^{−|s|}; both sides equal 5π/16.
    let oracles = [
        5.0 * PI / 16.0,
        to_f64(&a_norms[0]) * PI,
        to_f64(&a_norms[1]) * PI,
        to_f64(&a_norms[2]) * PI,
        to_f64(&b_norms[0]) * PI.sqrt(),
        to_f64(&b_norms[2]) * PI.sqrt(),
    ];
    let mut worst = 0.0_f64;
    for (pair, oracle) in pairs.iter().zip(oracles) {
        let r = parseval_pair(pair, TOL).map_err(|e| format!("{}: {e}", pair.label))?;
        ensure(r.passed(TOL), || format!("{}: rel {:e}", pair.label, r.rel_dev))?;
        ensure(rel(r.left, oracle) <= TOL && rel(r.right, oracle) <= TOL, || {
            format!("{}: left {} right {} oracle {oracle}", pair.label, r.left, r.right)
        })?;
        worst = worst.max(r.rel_dev);
    }
    Ok(format!("6 pairs, max rel deviation {worst:.1e} (tol {TOL:.0e})"))
}

fn theorem1() -> Outcome {
    const TOL: f64 = 1e-6;
    // Γ(1/4+k)Γ(7/4−k) Γ(3/4+k)Γ(5/4−k) = 2π²(3/4−k)(1/4−k) by reflection.
    let (_, norms) = monic_family(&|k| moment_a(0, 4, k), 3);
    let oracle: Vec<f64> = (0..=3)
        .map(|n: usize| {
            let k = n.div_ceil(2) as i64;
            let denom = q(2, 1) * (q(3, 4) - q(k, 1)) * (q(1, 4) - q(k, 1));
            to_f64(&(&norms[n] / denom)) / PI
        })
        .collect();
    for (n, o) in oracle.iter().enumerate() {
        let rhs = theorem1_rhs(n, 0.25, 2.0, 0.0, 4.0, Validation::Enforce).map_err(|e| e.to_string())?;
        ensure(rel(rhs, *o) <= 1e-13, || format!("theorem1_rhs({n}) = {rhs}, oracle {o}"))?;
    }
    let spec = TheoremSpec::Thm1 { alpha: 0.25, beta: 2.0, p: 0.0, q: 4.0 };
    let report =
        gram_fn(spec, 3, GramMode::NumericTransform, &GramOptions::with_tol(TOL)).map_err(|e| e.to_string())?;
    gram_against(&report, &oracle, TOL)
}

fn theorem2() -> Outcome {
    const TOL: f64 = 1e-6;
    let (_, norms) = monic_family(&|k| moment_b(4, k), 3);
    let norm: Vec<f64> = norms.iter().map(|h| to_f64(h) * PI.sqrt()).collect();
    // K_n(a) carries Γ(a − 1/2 − ⌈n/2⌉): finite only for n = 0 at a = 3/2, where
    // the right side is norm_0 / (2^1 Γ(1) · 2^2 Γ(2)).
    let rhs0 = norm[0] / 8.0;
    ensure(rel(rhs0, 15.0 * PI.sqrt() / 64.0) <= 1e-15, || "oracle for n = 0".into())?;
    let lib0 = theorem2_rhs(0, 1.5, 4.0, Validation::Enforce).map_err(|e| e.to_string())?;
    ensure(rel(lib0, rhs0) <= 1e-13, || format!("theorem2_rhs(0) = {lib0}, oracle {rhs0}"))?;
    let spec = TheoremSpec::Thm2 { a: 1.5, b: 4.0 };
    let report =
        gram_fn(spec, 3, GramMode::NumericTransform, &GramOptions::with_tol(TOL)).map_err(|e| e.to_string())?;
    let mut worst = rel(report.numeric[0][0], rhs0);
    let mut degenerate = 0;
    for n in 0..=3 {
        for m in 0..=3 {
            let e = report.entry(n, m);
            ensure(matches!(e.status, EntryStatus::Match | EntryStatus::Degenerate), || {
                format!("({n},{m}) {:?}: {:?}", e.status, e.note)
            })?;
            let scale = (norm[n] * norm[m]).sqrt();
            let dev = match e.status {
                EntryStatus::Degenerate => {
                    degenerate += 1;
                    let raw = e.raw.ok_or_else(|| format!("({n},{m}) degenerate without raw value"))?;
                    let truth = if n == m { norm[n] } else { 0.0 };
                    (raw - truth).abs() / scale
                }
                _ if n == m => rel(e.numeric, if n == 0 { rhs0 } else { 0.0 }),
                _ => e.raw.unwrap_or(e.numeric).abs() / scale,
            };
            worst = worst.max(dev);
        }
    }
    ensure(worst <= TOL, || format!("max deviation {worst:e} > {TOL:e}"))?;
    Ok(format!("max deviation {worst:.1e}, {degenerate} entries at Gamma poles compared at Parseval level (tol {TOL:.0e})"))
}

fn lorentzian_transform() -> Outcome {
    const TOL: f64 = 1e-8;
    let f = Integrand::smooth(|x| 1.0 / (1.0 + x * x), Decay::Polynomial(2.0)).map_err(|e| e.to_string())?;
    let mut worst = 0.0_f64;
    for s in [0.5, 1.0, 2.0] {
        let v = fourier_numeric(&f, 0, s, TOL * 1e-2).map_err(|e| format!("s = {s}: {e}"))?;
        worst = worst.max(rel(v.re, PI * (-s).exp())).max(v.im.abs());
    }
    ensure(worst <= TOL, || format!("max rel error {worst:e} > {TOL:e}"))?;
    Ok(format!("max rel error against pi exp(-|s|) {worst:.1e} (tol {TOL:.0e})"))
}

fn kernel_consistency() -> Outcome {
    const TOL: f64 = 1e-10;
    let grid = default_s_grid();
    let mut worst = 0.0_f64;
    let dev = |a: finite_ortho::fourier::TransformValue, b: finite_ortho::fourier::TransformValue| {
        let d = a.distance(&b);
        if d == 0.0 {
            0.0
        } else {
            d / a.abs().max(b.abs())
        }
    };
    for n in 0..=4 {
        for &s in &grid {
            let c = transform_a_closed(n, 0.25, 2.0, 0.0, 4.0, s).map_err(|e| e.to_string())?;
            let k = transform_a_kernel_sum(n, 0.25, 2.0, 0.0, 4.0, s).map_err(|e| e.to_string())?;
            worst = worst.max(dev(c, k));
            for source in [BParamSource::Derived, BParamSource::Printed] {
                let c = transform_b_closed(n, 2.25, 4.0, s, source).map_err(|e| e.to_string())?;
                let k = transform_b_kernel_sum(n, 2.25, 4.0, s, source).map_err(|e| e.to_string())?;
                worst = worst.max(dev(c, k));
            }
        }
    }
    // at s = 0 the n = 0 closed form is the Beta integral B(1/4, 7/4) = 3π/(2√2)
    let c0 = transform_a_closed(0, 0.25, 2.0, 0.0, 4.0, 0.0).map_err(|e| e.to_string())?;
    let beta = 3.0 * PI / (2.0 * 2f64.sqrt());
    ensure(rel(c0.re, beta) <= TOL, || format!("s = 0 closed form {} vs {beta}", c0.re))?;
    ensure(worst <= TOL, || format!("max rel deviation {worst:e} > {TOL:e}"))?;
    Ok(format!("max rel deviation {worst:.1e} over n <= 4, s in [0, 3] (tol {TOL:.0e})"))
}

fn findings_completeness() -> Outcome {
    let kind = TransformKind::A { alpha: 0.0, beta: 1.0, c: 0.0, d: 1.0 };
    let check = transform_compare(kind, 0, &default_s_grid(), 1e-8).map_err(|e| e.to_string())?;
    ensure(check.verdict != Verdict::Agree, || "verdict is agree".into())?;
    for p in &check.points {
        let c = p.closed.ok_or_else(|| format!("no closed value at s = {}", p.s))?;
        let v = p.numeric.ok_or_else(|| format!("no numeric value at s = {}", p.s))?;
        ensure(rel(c.re, PI * p.s.cosh()) <= 1e-10, || format!("closed {} at s = {}", c.re, p.s))?;
        ensure(rel(v.re, PI * (-p.s).exp()) <= 1e-8, || format!("numeric {} at s = {}", v.re, p.s))?;
    }
    let report = run_suite(&SuiteOptions::default());
    let finding = report
        .findings
        .iter()
        .find(|f| f.id == "closed-vs-numeric/A/n=0/alpha=0/beta=1")
        .ok_or("report has no finding for the Lorentzian")?;
    ensure(finding.text.contains(check.verdict.as_str()), || format!("finding text: {}", finding.text))?;
    ensure(report.passed(), || "report suite has failing checks".into())?;
    Ok(format!("verdict {} recorded in report findings", check.verdict.as_str()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "polynomial layer exactness", budget: Duration::from_secs(1), body: polynomial_exactness },
        Criterion { id: 2, name: "ODE residuals", budget: Duration::from_secs(5), body: ode_residuals },
        Criterion { id: 3, name: "weight (1+x^2)^-4 Gram", budget: Duration::from_secs(30), body: eq9_gram },
        Criterion { id: 4, name: "weight |x|^-8 exp(-1/x^2) Gram", budget: Duration::from_secs(30), body: eq17_gram },
        Criterion { id: 5, name: "Parseval identity", budget: Duration::from_secs(300), body: parseval },
        Criterion { id: 6, name: "family A transform orthogonality", budget: Duration::from_secs(600), body: theorem1 },
        Criterion { id: 7, name: "family B transform orthogonality", budget: Duration::from_secs(600), body: theorem2 },
        Criterion { id: 8, name: "transform oracle calibration", budget: Duration::from_secs(10), body: lorentzian_transform },
        Criterion { id: 9, name: "closed form vs kernel sum", budget: Duration::from_secs(10), body: kernel_consistency },
        Criterion { id: 10, name: "findings completeness", budget: Duration::from_secs(10), body: findings_completeness },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.body)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= c.budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; runtime {elapsed:.2?} over budget {:?}", c.budget))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {:>2} {}: {msg} [{elapsed:.2?}]", c.id, c.name),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {}: {msg} [{elapsed:.2?}]", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
