//! The two finite families, their norms and the constraint checks.

use finite_ortho::sympoly::{
    audit_b_sources, family_a, family_b, norm_sq_a, norm_sq_b, scaled_ode_residual, FamilyAParams, FamilyBParams,
    Validation,
};

fn show(coeffs: &[f64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| **c != 0.0)
        .map(|(j, c)| match j {
            0 => format!("{c}"),
            1 => format!("{c} x"),
            _ => format!("{c} x^{j}"),
        })
        .collect();
    terms.join(" + ")
}

fn main() -> finite_ortho::Result<()> {
    let a = FamilyAParams::new(0.0, 4.0);
    println!("weight (1+x^2)^-4, degrees up to {}", a.max_degree());
    for n in 0..=3 {
        let p = family_a(a, n, Validation::Enforce)?;
        let worst = (-20..=20).map(|i| scaled_ode_residual(a.sym_params(), &p, i as f64 / 5.0)).fold(0.0, f64::max);
        println!("  A_{n} = {:<32} norm^2 = {:.12}  ode residual {worst:.1e}", show(p.coeffs()), norm_sq_a(a, n, Validation::Enforce)?);
    }

    let b = FamilyBParams::new(4.0);
    println!("weight |x|^-8 exp(-1/x^2), degrees up to {}", b.max_degree());
    for n in 0..=3 {
        let p = family_b(b, n, Validation::Enforce)?;
        println!("  B_{n} = {:<32} norm^2 = {:.12}", show(p.coeffs()), norm_sq_b(b, n, Validation::Enforce)?);
    }

    for audit in audit_b_sources(FamilyBParams::new(6.0), 4) {
        println!("  B_{} via {:?} lower parameter: residual {:.1e}", audit.n, audit.source, audit.max_scaled_residual);
    }

    match family_a(a, 5, Validation::Enforce) {
        Ok(_) => println!("A_5 accepted"),
        Err(e) => println!("A_5 rejected: {e}"),
    }
    let forced = family_a(a, 5, Validation::Override)?;
    println!("A_5 with the check overridden: {}", show(forced.coeffs()));
    Ok(())
}
