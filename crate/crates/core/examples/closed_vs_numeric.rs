//! Printed closed-form transforms next to the numerical transform of the
//! same function. For the Lorentzian the closed form gives pi cosh(s) while
//! the actual transform is pi exp(-|s|).

use finite_ortho::sympoly::BParamSource;
use finite_ortho::verify::{default_s_grid, transform_compare, TransformKind};

fn main() -> finite_ortho::Result<()> {
    let cases = [
        (TransformKind::A { alpha: 0.0, beta: 1.0, c: 0.0, d: 1.0 }, 0),
        (TransformKind::A { alpha: 0.25, beta: 2.0, c: 0.0, d: 4.0 }, 2),
        (TransformKind::B { a: 2.25, b: 4.0, source: BParamSource::Derived }, 1),
    ];
    for (kind, n) in cases {
        let check = transform_compare(kind, n, &default_s_grid(), 1e-8)?;
        println!("{kind} n={n}: {}", check.verdict.as_str());
        for p in check.points.iter().step_by(2) {
            let (Some(c), Some(v)) = (p.closed, p.numeric) else {
                println!("  s={:<5} {}", p.s, p.error.as_deref().unwrap_or("no value"));
                continue;
            };
            println!(
                "  s={:<5} closed {:>13.6e}{:+.6e}i   numeric {:>13.6e}{:+.6e}i   |diff| {:.2e}",
                p.s, c.re, c.im, v.re, v.im, p.abs_dev
            );
        }
    }
    Ok(())
}
