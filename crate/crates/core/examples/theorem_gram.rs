//! Orthogonality of the transformed functions, computed from numerical
//! transforms and from the closed forms on a truncated s-range.

use finite_ortho::verify::{gram_fn, GramMode, GramOptions, GramReport, TheoremSpec};

fn summary(report: &GramReport) {
    for e in &report.entries {
        if e.m < e.n {
            continue;
        }
        print!("  ({},{}) {:<10} numeric {:>12.5e} expected {:>12.5e}", e.n, e.m, format!("{:?}", e.status), e.numeric, e.theoretical);
        match &e.note {
            Some(note) => println!("  [{note}]"),
            None => println!(),
        }
    }
}

fn main() -> finite_ortho::Result<()> {
    let opts = GramOptions::with_tol(1e-8);
    let thm1 = TheoremSpec::Thm1 { alpha: 0.25, beta: 2.0, p: 0.0, q: 4.0 };
    println!("family A pairing, numeric transforms");
    summary(&gram_fn(thm1, 3, GramMode::NumericTransform, &opts)?);

    println!("family B pairing a = 3/2, b = 4, numeric transforms");
    summary(&gram_fn(TheoremSpec::Thm2 { a: 1.5, b: 4.0 }, 3, GramMode::NumericTransform, &opts)?);

    println!("family A pairing, closed forms on [0, 10]");
    let closed = gram_fn(thm1, 3, GramMode::ClosedForm, &opts)?;
    summary(&closed);
    for note in &closed.notes {
        println!("  note: {note}");
    }
    Ok(())
}
