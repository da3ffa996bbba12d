//! Gamma, Beta and terminating/non-terminating hypergeometric series.

use finite_ortho::specfun::{beta, gamma, hyp, ln_gamma, HyperSeries};

fn main() -> finite_ortho::Result<()> {
    println!("Gamma(1/2)^2 = {:.15}  (pi = {:.15})", gamma(0.5)?.powi(2), std::f64::consts::PI);
    println!("Gamma(-2.5)  = {:.15}", gamma(-2.5)?);
    println!("ln Gamma(200) = {:.12}", ln_gamma(200.0)?);
    println!("B(1/2, 7/2)  = {:.15}  (5 pi / 16 = {:.15})", beta(0.5, 3.5)?, 5.0 * std::f64::consts::PI / 16.0);

    // 2F1(-2, 1/2; 1/2; z) = (1 - z)^2, a polynomial
    let poly = HyperSeries::new([-2.0, 0.5], [0.5]);
    let (v, _) = hyp(&poly, 0.3)?;
    println!("2F1(-2, 1/2; 1/2; 0.3) = {v}  (0.7^2 = {})", 0.7f64.powi(2));

    // 0F1(; 1/2; s^2/4) = cosh(s)
    let cosh = HyperSeries::new(Vec::<f64>::new(), [0.5]);
    for s in [0.5, 2.0, 8.0] {
        let (v, diag) = hyp(&cosh, s * s / 4.0)?;
        println!("0F1(; 1/2; {:>5}) = {v:<22} cosh = {:<22} terms {}", s * s / 4.0, s.cosh(), diag.terms_used);
    }

    match gamma(-3.0) {
        Ok(v) => println!("Gamma(-3) = {v}"),
        Err(e) => println!("Gamma(-3): {e}"),
    }
    Ok(())
}
