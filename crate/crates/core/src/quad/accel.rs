//! Aitken Δ² acceleration of slowly converging sequences.

/// One Aitken Δ² pass: `s_k − (Δs_k)² / Δ²s_k`.
///
/// Entries with a vanishing second difference are passed through unchanged.
pub fn aitken(seq: &[f64]) -> Vec<f64> {
    seq.windows(3)
        .map(|w| {
            let d2 = w[2] - 2.0 * w[1] + w[0];
            let v = w[2] - (w[2] - w[1]).powi(2) / d2;
            if d2 == 0.0 || !v.is_finite() {
                w[2]
            } else {
                v
            }
        })
        .collect()
}

/// Repeat [`aitken`] until fewer than three terms remain; returns the last
/// entry of the final row.
pub fn iterated_aitken(seq: &[f64]) -> Option<f64> {
    let mut row = seq.to_vec();
    while row.len() >= 3 {
        row = aitken(&row);
    }
    row.last().copied()
}
