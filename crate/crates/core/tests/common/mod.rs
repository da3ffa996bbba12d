//! Exact rational oracles shared by the integration tests.
//!
//! Moments of the family weights reduce to half-integer Gamma values, which
//! are rational multiples of √π. Monic orthogonal polynomials and their norms
//! then follow from the three-term recurrence in exact arithmetic.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().expect("finite rational")
}

/// Γ(z) for z = twice/2 > 0, divided by √π when z is a half-integer.
pub fn gamma_half(twice: i64) -> Q {
    assert!(twice > 0, "gamma_half needs a positive argument");
    let (mut z, mut acc) = if twice % 2 == 0 { (q(1, 1), q(1, 1)) } else { (q(1, 2), q(1, 1)) };
    let target = q(twice, 2);
    while z < target {
        acc *= &z;
        z += q(1, 1);
    }
    acc
}

/// μ_{2k} / π for the weight |x|^{−2a}(1+x²)^{−b}, integer a and b:
/// B(k − a + 1/2, b − k + a − 1/2).
pub fn moment_a(a: i64, b: i64, k: i64) -> Q {
    gamma_half(2 * (k - a) + 1) * gamma_half(2 * (b - k + a) - 1) / gamma_half(2 * b)
}

/// μ_{2k} / √π for the weight |x|^{−2a} e^{−1/x²}, integer a: Γ(a − k − 1/2).
pub fn moment_b(a: i64, k: i64) -> Q {
    gamma_half(2 * (a - k) - 1)
}

/// ∫ f g w for ascending coefficient vectors, given the even moments.
fn inner(f: &[Q], g: &[Q], moment: &dyn Fn(i64) -> Q) -> Q {
    let mut acc = Q::zero();
    for (i, fi) in f.iter().enumerate() {
        for (j, gj) in g.iter().enumerate() {
            if (i + j) % 2 == 0 && !fi.is_zero() && !gj.is_zero() {
                acc += fi * gj * moment(((i + j) / 2) as i64);
            }
        }
    }
    acc
}

/// Monic orthogonal polynomials P_0..P_N and their squared norms for a symmetric weight.
pub fn monic_family(moment: &dyn Fn(i64) -> Q, n_max: usize) -> (Vec<Vec<Q>>, Vec<Q>) {
    let mut polys: Vec<Vec<Q>> = vec![vec![q(1, 1)]];
    let mut norms = vec![inner(&polys[0], &polys[0], moment)];
    for n in 0..n_max {
        let mut next = vec![Q::zero(); n + 2];
        for (i, c) in polys[n].iter().enumerate() {
            next[i + 1] += c;
        }
        if n > 0 {
            let gamma = &norms[n] / &norms[n - 1];
            for (i, c) in polys[n - 1].iter().enumerate() {
                next[i] -= &gamma * c;
            }
        }
        norms.push(inner(&next, &next, moment));
        polys.push(next);
    }
    (polys, norms)
}

pub fn rel(value: f64, truth: f64) -> f64 {
    if value == truth {
        0.0
    } else {
        (value - truth).abs() / truth.abs()
    }
}
