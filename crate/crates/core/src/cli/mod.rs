//! Command-line front end: `eval`, `gram`, `fourier` and `report`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 configuration or
//! constraint error, 3 numerical failure.

mod grid;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::fourier::{fn_a, fn_b, FnASpec, FnBSpec};
use crate::suite::{run_suite, SuiteOptions};
use crate::sympoly::{family_a, family_b, BParamSource, FamilyAParams, FamilyBParams, Validation};
use crate::verify::{
    default_s_grid, gram_fn, gram_weight_direct, transform_compare, EntryStatus, GramMode, GramOptions, GramReport,
    TheoremSpec, TransformKind, WeightFamily,
};

pub use grid::parse_grid;
pub use output::{Envelope, EnvelopeCheck, REPORT_SCHEMA, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "finite-ortho", version, about = "Finite orthogonal polynomials and their Fourier-transformed orthogonal functions")]
pub struct Cli {
    /// Worker threads for parallel quadrature (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a polynomial A_n, B_n or a transformed function A_n(x; ...), B_n(x; ...)
    Eval(EvalArgs),
    /// Gram matrix of an orthogonality relation
    Gram(GramArgs),
    /// Closed-form against numerical Fourier transform on an s grid
    Fourier(FourierArgs),
    /// Run the acceptance checks and emit one JSON document
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Which {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Printed,
    Derived,
}

impl From<Source> for BParamSource {
    fn from(s: Source) -> Self {
        match s {
            Source::Printed => BParamSource::Printed,
            Source::Derived => BParamSource::Derived,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EvalArgs {
    /// Polynomial family
    #[arg(long, conflicts_with = "function")]
    pub family: Option<Which>,
    /// Transformed function A_n(x; p1..p4) or B_n(x; q1, q2)
    #[arg(long = "fn")]
    pub function: Option<Which>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p3: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p4: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub q1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub q2: Option<f64>,
    /// Lower parameter of the B_n(x; q1, q2) Pochhammer factor
    #[arg(long, value_enum, default_value = "printed")]
    pub b_source: Source,
    /// Points: a value, a comma list or start:stop:step
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Evaluate past the orthogonality constraints
    #[arg(long = "override")]
    pub override_checks: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationArg {
    Eq9,
    Eq17,
    Thm1,
    Thm2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Weight,
    Numeric,
    Closed,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GramArgs {
    #[arg(long, value_enum)]
    pub relation: RelationArg,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Largest degree
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n_max: usize,
    #[arg(long)]
    pub tol: Option<f64>,
    /// weight for eq9/eq17, numeric or closed for thm1/thm2
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Half-width S of the s-domain in closed mode
    #[arg(long, default_value_t = 10.0)]
    pub truncation: f64,
    #[arg(long, value_enum, default_value = "derived")]
    pub b_source: Source,
    #[arg(long = "override")]
    pub override_checks: bool,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FourierArgs {
    #[arg(long, value_enum)]
    pub kind: Which,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Polynomial parameters of A_n^{(c,d)}; default c = alpha, d = beta
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, value_enum, default_value = "derived")]
    pub b_source: Source,
    /// s grid (default 0:3:0.25)
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ReportArgs {
    /// Replace every check's tolerance
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Config(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Constraint(_) | Error::InvalidInput(_) => Failure::Config(e.to_string()),
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Config(format!("output: {e}"))
    }
}

fn need(value: Option<f64>, name: &str) -> Result<f64, Failure> {
    value.ok_or_else(|| Failure::Config(format!("--{name} is required")))
}

fn positive_tol(tol: f64) -> Result<f64, Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Failure::Config(format!("tolerance must be positive, got {tol}")))
    }
}

fn validation(override_checks: bool) -> Validation {
    if override_checks {
        Validation::Override
    } else {
        Validation::Enforce
    }
}

/// Shortest representation that reads back to the same f64.
fn plain(x: f64) -> String {
    format!("{x}")
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let xs = parse_grid(&args.x).map_err(Failure::Config)?;
    let check = validation(args.override_checks);
    let eval: Box<dyn Fn(f64) -> Result<f64, Error>> = match (args.family, args.function) {
        (Some(Which::A), None) => {
            let params = FamilyAParams::new(need(args.a, "a")?, need(args.b, "b")?);
            let poly = family_a(params, args.n, check)?;
            Box::new(move |x| Ok(poly.eval(x)))
        }
        (Some(Which::B), None) => {
            let params = FamilyBParams::new(need(args.a, "a")?);
            let poly = family_b(params, args.n, check)?;
            Box::new(move |x| Ok(poly.eval(x)))
        }
        (None, Some(Which::A)) => {
            let spec = FnASpec::new(args.n, need(args.p1, "p1")?, need(args.p2, "p2")?, need(args.p3, "p3")?, need(args.p4, "p4")?);
            Box::new(move |x| fn_a(&spec, x))
        }
        (None, Some(Which::B)) => {
            let spec = FnBSpec::new(args.n, need(args.q1, "q1")?, need(args.q2, "q2")?).with_source(args.b_source.into());
            Box::new(move |x| fn_b(&spec, x))
        }
        _ => return Err(Failure::Config("exactly one of --family and --fn is required".into())),
    };
    let single = xs.len() == 1;
    for x in xs {
        let v = eval(x)?;
        if single {
            writeln!(out, "{}", plain(v))?;
        } else {
            writeln!(out, "{} {}", plain(x), plain(v))?;
        }
    }
    Ok(EXIT_OK)
}

fn gram_report(args: &GramArgs) -> Result<GramReport, Failure> {
    let check = validation(args.override_checks);
    let default_tol = match args.relation {
        RelationArg::Eq9 | RelationArg::Eq17 => 1e-8,
        RelationArg::Thm1 | RelationArg::Thm2 => 1e-6,
    };
    let opts = GramOptions {
        tol: positive_tol(args.tol.unwrap_or(default_tol))?,
        check,
        truncation: args.truncation,
        b_source: args.b_source.into(),
    };
    let report = match args.relation {
        RelationArg::Eq9 | RelationArg::Eq17 => {
            if !matches!(args.mode, None | Some(ModeArg::Weight)) {
                return Err(Failure::Config("eq9 and eq17 support --mode weight only".into()));
            }
            let family = if args.relation == RelationArg::Eq9 {
                WeightFamily::A(FamilyAParams::new(need(args.a, "a")?, need(args.b, "b")?))
            } else {
                WeightFamily::B(FamilyBParams::new(need(args.a, "a")?))
            };
            gram_weight_direct(family, args.n_max, &opts)?
        }
        RelationArg::Thm1 | RelationArg::Thm2 => {
            let mode = match args.mode {
                None | Some(ModeArg::Numeric) => GramMode::NumericTransform,
                Some(ModeArg::Closed) => GramMode::ClosedForm,
                Some(ModeArg::Weight) => {
                    return Err(Failure::Config("thm1 and thm2 support --mode numeric or closed".into()))
                }
            };
            let theorem = if args.relation == RelationArg::Thm1 {
                TheoremSpec::Thm1 {
                    alpha: need(args.alpha, "alpha")?,
                    beta: need(args.beta, "beta")?,
                    p: need(args.p, "p")?,
                    q: need(args.q, "q")?,
                }
            } else {
                TheoremSpec::Thm2 { a: need(args.a, "a")?, b: need(args.b, "b")? }
            };
            gram_fn(theorem, args.n_max, mode, &opts)?
        }
    };
    Ok(report)
}

fn status_name(s: EntryStatus) -> &'static str {
    match s {
        EntryStatus::Match => "match",
        EntryStatus::Mismatch => "mismatch",
        EntryStatus::Untrusted => "untrusted",
        EntryStatus::Diverged => "diverged",
        EntryStatus::Degenerate => "degenerate",
    }
}

fn cmd_gram(args: &GramArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let start = Instant::now();
    let report = gram_report(args)?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let checks = report
        .entries
        .iter()
        .map(|e| EnvelopeCheck {
            id: format!("G[{},{}]", e.n, e.m),
            status: status_name(e.status).into(),
            value: output::number(e.numeric),
            expected: output::number(e.theoretical),
            tol: report.tol,
            runtime_ms,
        })
        .collect();
    let code = if report.has_failures() { EXIT_MISMATCH } else { EXIT_OK };
    let envelope = Envelope::new("gram", json!(args), checks, Vec::new(), serde_json::to_value(&report).ok());
    output::write_json(&envelope, args.out.as_deref(), out)?;
    Ok(code)
}

fn transform_kind(args: &FourierArgs) -> Result<TransformKind, Failure> {
    Ok(match args.kind {
        Which::A => {
            let alpha = need(args.alpha, "alpha")?;
            let beta = need(args.beta, "beta")?;
            TransformKind::A { alpha, beta, c: args.c.unwrap_or(alpha), d: args.d.unwrap_or(beta) }
        }
        Which::B => TransformKind::B { a: need(args.a, "a")?, b: need(args.b, "b")?, source: args.b_source.into() },
    })
}

fn cmd_fourier(args: &FourierArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kind = transform_kind(args)?;
    let tol = positive_tol(args.tol)?;
    let grid = match &args.s {
        Some(spec) => parse_grid(spec).map_err(Failure::Config)?,
        None => default_s_grid(),
    };
    let start = Instant::now();
    let check = transform_compare(kind, args.n, &grid, tol)?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    if check.points.iter().all(|p| p.error.is_some()) {
        let first = check.points[0].error.clone().unwrap_or_default();
        return Err(Failure::Numerical(format!("every grid point failed; first: {first}")));
    }
    match args.format {
        Format::Csv => output::write_csv(&check, args.out.as_deref(), out)?,
        Format::Json => {
            let checks = check
                .points
                .iter()
                .map(|p| EnvelopeCheck {
                    id: format!("s={}", plain(p.s)),
                    status: if p.error.is_some() {
                        "error".into()
                    } else if p.rel_dev <= tol {
                        "agree".into()
                    } else {
                        "deviate".into()
                    },
                    value: p.numeric.map(|v| json!([v.re, v.im])).unwrap_or_default(),
                    expected: p.closed.map(|v| json!([v.re, v.im])).unwrap_or_default(),
                    tol,
                    runtime_ms,
                })
                .collect();
            let findings = vec![json!({"id": "verdict", "text": check.finding()})];
            let envelope =
                Envelope::new("fourier", json!(args), checks, findings, serde_json::to_value(&check).ok());
            output::write_json(&envelope, args.out.as_deref(), out)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if let Some(t) = args.tol {
        positive_tol(t)?;
    }
    let suite = run_suite(&SuiteOptions { tol: args.tol });
    let checks = suite
        .checks
        .iter()
        .map(|c| EnvelopeCheck {
            id: c.id.clone(),
            status: if c.status == crate::suite::CheckStatus::Pass { "pass".into() } else { "fail".into() },
            value: c.value.clone(),
            expected: c.expected.clone(),
            tol: c.tol,
            runtime_ms: c.runtime_ms,
        })
        .collect();
    let findings = suite.findings.iter().map(|f| json!({"id": f.id, "text": f.text})).collect();
    let details: serde_json::Map<String, serde_json::Value> = suite
        .checks
        .iter()
        .filter_map(|c| c.detail.as_ref().map(|d| (c.id.clone(), json!(d))))
        .collect();
    let envelope = Envelope::new("report", json!(args), checks, findings, Some(json!({ "details": details })));
    output::write_json(&envelope, args.out.as_deref(), out)?;
    Ok(if suite.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Gram(a) => cmd_gram(a, out),
        Command::Fourier(a) => cmd_fourier(a, out),
        Command::Report(a) => cmd_report(a, out),
    }
}

/// Run a parsed command line, writing results to `out` and diagnostics to
/// stderr. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return EXIT_CONFIG;
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: thread pool: {e}");
            return EXIT_CONFIG;
        }
    };
    let mut buffer: Vec<u8> = Vec::new();
    let result = pool.install(|| dispatch(&cli.command, &mut buffer));
    if let Err(e) = out.write_all(&buffer).and_then(|_| out.flush()) {
        eprintln!("error: output: {e}");
        return EXIT_CONFIG;
    }
    match result {
        Ok(code) => code,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            EXIT_CONFIG
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            EXIT_NUMERICAL
        }
    }
}

/// Parse `args` (program name first) and run. Usage errors exit with 2,
/// `--help` and `--version` with 0.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            code
        }
    }
}
