//! Numerical Fourier transforms checked against known transform pairs.

use std::f64::consts::PI;

use finite_ortho::quad::{fourier_numeric_with, Decay, FourierMethod, Integrand};

fn main() -> finite_ortho::Result<()> {
    let lorentz = Integrand::smooth(|x| 1.0 / (1.0 + x * x), Decay::Polynomial(2.0))?;
    let gauss = Integrand::smooth(|x| (-x * x / 2.0).exp(), Decay::SuperExponential)?;
    // accuracy is relative to the scale of f, so compare absolute errors
    println!("{:>6} {:>22} {:>22} {:>10} {:>10} {:>6}", "s", "F[(1+x^2)^-1]", "pi exp(-|s|)", "abs err", "estimate", "evals");
    for s in [0.0, 0.01, 0.5, 1.0, 2.0, 10.0, 50.0] {
        let r = fourier_numeric_with(&lorentz, 0, s, 1e-12, FourierMethod::Auto)?;
        let truth = PI * (-s).exp();
        println!(
            "{s:>6} {:>22.15e} {truth:>22.15e} {:>10.1e} {:>10.1e} {:>6}",
            r.value.re,
            (r.value.re - truth).abs(),
            r.abs_error_estimate,
            r.evaluations
        );
    }
    println!();
    for s in [0.0, 1.0, 3.0, 6.0] {
        let r = fourier_numeric_with(&gauss, 0, s, 1e-12, FourierMethod::Auto)?;
        let truth = (2.0 * PI).sqrt() * (-s * s / 2.0).exp();
        println!("gaussian s={s}: {:.15e} vs {truth:.15e}", r.value.re);
    }
    Ok(())
}
