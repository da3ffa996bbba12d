//! Gram matrices of the polynomial families against their weights.

use finite_ortho::sympoly::{FamilyAParams, FamilyBParams};
use finite_ortho::verify::{gram_weight_direct, GramOptions, GramReport, WeightFamily};

fn print(label: &str, report: &GramReport) {
    println!("{label}");
    for row in &report.numeric {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>12.4e}")).collect();
        println!("  {}", cells.join(" "));
    }
    let worst = report.entries.iter().map(|e| e.rel_dev).fold(0.0, f64::max);
    println!("  all match: {}, worst relative deviation {worst:.1e}", report.all_match());
}

fn main() -> finite_ortho::Result<()> {
    let opts = GramOptions::with_tol(1e-10);
    print("(1+x^2)^-4, N = 3", &gram_weight_direct(WeightFamily::A(FamilyAParams::new(0.0, 4.0)), 3, &opts)?);
    print("|x|^2 (1+x^2)^-6, N = 4", &gram_weight_direct(WeightFamily::A(FamilyAParams::new(-1.0, 6.0)), 4, &opts)?);
    print("|x|^-8 exp(-1/x^2), N = 3", &gram_weight_direct(WeightFamily::B(FamilyBParams::new(4.0)), 3, &opts)?);
    Ok(())
}
