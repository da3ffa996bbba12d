//! Run every acceptance check and print the JSON document that
//! `finite-ortho report` writes.

use finite_ortho::suite::{run_suite, SuiteOptions};

fn main() {
    let report = run_suite(&SuiteOptions::default());
    for check in &report.checks {
        println!("{:<32} {:?} ({} ms)", check.id, check.status, check.runtime_ms);
    }
    println!();
    for f in &report.findings {
        println!("{}: {}", f.id, f.text);
    }
    println!();
    println!("{}", serde_json::to_string_pretty(&report.checks[0]).expect("serializable"));
    if !report.passed() {
        std::process::exit(1);
    }
}
