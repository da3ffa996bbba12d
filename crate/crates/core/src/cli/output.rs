use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::verify::TransformCheck;

pub const SCHEMA_VERSION: &str = "1.0.0";

/// JSON schema of every document written by `gram`, `fourier --format json` and `report`.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnvelopeCheck {
    pub id: String,
    pub status: String,
    pub value: Value,
    pub expected: Value,
    pub tol: f64,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Envelope {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub params: Value,
    pub checks: Vec<EnvelopeCheck>,
    pub findings: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Value>,
}

impl Envelope {
    pub fn new(
        command: &'static str,
        params: Value,
        checks: Vec<EnvelopeCheck>,
        findings: Vec<Value>,
        report: Option<Value>,
    ) -> Self {
        Envelope { schema_version: SCHEMA_VERSION, command, params, checks, findings, report }
    }
}

pub(super) fn number(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

pub(super) fn write_json(envelope: &Envelope, path: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(envelope).map_err(std::io::Error::other)?;
    text.push('\n');
    emit(&text, path, out)
}

fn field(x: f64) -> String {
    format!("{x:.16e}")
}

pub(super) fn write_csv(check: &TransformCheck, path: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    let mut text = String::from("s,closed_re,closed_im,numeric_re,numeric_im,abs_dev\n");
    for p in &check.points {
        let (cr, ci) = p.closed.map_or((f64::NAN, f64::NAN), |v| (v.re, v.im));
        let (nr, ni) = p.numeric.map_or((f64::NAN, f64::NAN), |v| (v.re, v.im));
        let row = [p.s, cr, ci, nr, ni, p.abs_dev].map(field).join(",");
        text.push_str(&row);
        text.push('\n');
    }
    emit(&text, path, out)
}
