use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::relative;
use super::weighted::WeightedPoly;
use crate::error::Result;
use crate::fourier::{BPairingParams, PairingParams};
use crate::quad::{integrate_line, integrate_semi_batch, QuadOptions};

/// Two functions g, h whose inner product is checked against that of their transforms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParsevalPair {
    pub label: String,
    pub g: WeightedPoly,
    pub h: WeightedPoly,
}

impl ParsevalPair {
    pub fn new(label: impl Into<String>, g: WeightedPoly, h: WeightedPoly) -> Self {
        ParsevalPair { label: label.into(), g, h }
    }

    /// g = |x|^{−2α}(1+x²)^{−β} A_n^{(c,d)}, h = |x|^{−2l}(1+x²)^{−u} A_m^{(v,w)}
    pub fn family_a(pairing: PairingParams, n: usize, m: usize) -> Result<Self> {
        let PairingParams { alpha, beta, l, u, c, d, v, w } = pairing;
        Ok(Self::new(
            format!("A pair alpha={alpha} beta={beta} l={l} u={u} n={n} m={m}"),
            WeightedPoly::family_a(alpha, beta, c, d, n)?,
            WeightedPoly::family_a(l, u, v, w, m)?,
        ))
    }

    /// g = |x|^{−2a} e^{−1/(2x²)} B_n^{(b)}, h = |x|^{−2c} e^{−1/(2x²)} B_m^{(b)}
    pub fn family_b(pairing: BPairingParams, n: usize, m: usize) -> Result<Self> {
        let BPairingParams { a, c, b } = pairing;
        Ok(Self::new(
            format!("B pair a={a} c={c} b={b} n={n} m={m}"),
            WeightedPoly::family_b(a, b, n)?,
            WeightedPoly::family_b(c, b, m)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParsevalReport {
    pub label: String,
    /// ∫ g h dx
    pub left: f64,
    /// (1/2π) ∫ F(g) conj F(h) ds
    pub right: f64,
    pub right_imag: f64,
    pub rel_dev: f64,
    pub left_error: f64,
    pub right_error: f64,
}

impl ParsevalReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.rel_dev <= tol && self.right_imag.abs() <= 1e-10 * self.left.abs().max(1e-300)
    }
}

/// Both sides of the Parseval identity for one pair, computed independently.
///
/// The right side uses numerically computed transforms; for a same-parity pair
/// the integrand F(g) conj F(h) is real and even, for mixed parity it is odd
/// and the integral vanishes.
pub fn parseval_pair(pair: &ParsevalPair, tol: f64) -> Result<ParsevalReport> {
    let line_tol = (tol * 1e-4).max(1e-13);
    let product = pair.g.times(&pair.h);
    let left = integrate_line(&product.integrand()?, line_tol)?;

    let (right, right_error) = if pair.g.parity() != pair.h.parity() {
        (0.0, 0.0)
    } else {
        let transform_tol = (tol * 1e-5).max(1e-12);
        let eval = |ss: &[f64]| -> Vec<Vec<f64>> {
            ss.par_iter()
                .map(|&s| {
                    let real = |f: &WeightedPoly| {
                        f.transform(s, transform_tol).map(|v| v.strip_phase(f.parity())).unwrap_or(f64::NAN)
                    };
                    vec![real(&pair.g) * real(&pair.h) / PI]
                })
                .collect()
        };
        let opts = QuadOptions::with_tol((tol * 1e-3).max(1e-11));
        let r = integrate_semi_batch(1, eval, &opts).remove(0)?;
        (r.value, r.abs_error_estimate)
    };

    let scale = left.value.abs().max(right.abs());
    Ok(ParsevalReport {
        label: pair.label.clone(),
        left: left.value,
        right,
        right_imag: 0.0,
        rel_dev: relative((left.value - right).abs(), scale),
        left_error: left.abs_error_estimate,
        right_error,
    })
}

/// The acceptance corpus: a Lorentzian-squared self pair, the orthogonality
/// pairing (α, β, p, q) = (1/4, 2, 0, 4) for n = m ≤ 2 and the family-B pairing
/// (a, c, b) = (3/2, 5/2, 4) for n = m ∈ {0, 2}.
pub fn parseval_corpus() -> Result<Vec<ParsevalPair>> {
    let lorentz = WeightedPoly::family_a(0.0, 2.0, 0.0, 4.0, 0)?;
    let mut pairs = vec![ParsevalPair::new("(1+x^2)^-2 self pair", lorentz.clone(), lorentz)];
    let a = PairingParams::theorem1(0.25, 2.0, 0.0, 4.0);
    for n in 0..=2 {
        pairs.push(ParsevalPair::family_a(a, n, n)?);
    }
    let b = BPairingParams::theorem2(1.5, 4.0);
    for n in [0, 2] {
        pairs.push(ParsevalPair::family_b(b, n, n)?);
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lorentzian_self_pair() {
        let pairs = parseval_corpus().unwrap();
        let r = parseval_pair(&pairs[0], 1e-6).unwrap();
        assert!((r.left - 5.0 * PI / 16.0).abs() < 1e-12);
        assert!(r.passed(1e-6), "{r:?}");
    }

    #[test]
    fn corpus_within_tolerance() {
        for pair in parseval_corpus().unwrap() {
            let r = parseval_pair(&pair, 1e-6).unwrap();
            assert!(r.passed(1e-6), "{r:?}");
        }
    }

    #[test]
    fn mixed_parity_vanishes() {
        let pairing = PairingParams::theorem1(0.25, 2.0, 0.0, 4.0);
        let r = parseval_pair(&ParsevalPair::family_a(pairing, 0, 1).unwrap(), 1e-6).unwrap();
        assert!(r.left.abs() < 1e-14);
        assert_eq!(r.right, 0.0);
    }
}
