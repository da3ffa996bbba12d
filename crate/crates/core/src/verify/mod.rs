//! Orthogonality and transform checks producing serializable reports.
//!
//! * [`gram_weight_direct`] integrates w·P_n·P_m against the squared norms.
//! * [`gram_fn`] checks the orthogonality of A_n and B_n, either through
//!   numerically computed transforms (Parseval) or through the closed forms on
//!   a truncated domain.
//! * [`parseval_pair`] compares ∫ g h dx with (1/2π) ∫ F(g) conj F(h) ds.
//! * [`transform_compare`] puts closed-form and numerical transforms side by side.
//!
//! Numerical failures are recorded in the reports rather than aborting a run.

mod compare;
mod gram;
mod parseval;
mod weighted;

use serde::Serialize;

pub use compare::{
    default_s_grid, transform_compare, TransformCheck, TransformKind, TransformPoint, Verdict, SMALL_S_LIMIT, SMALL_S_TOL,
};
pub use gram::{
    gram_fn, gram_weight_direct, EntryStatus, GramEntry, GramMode, GramOptions, GramReport, Relation,
    TheoremSpec, WeightFamily,
};
pub use parseval::{parseval_corpus, parseval_pair, ParsevalPair, ParsevalReport};
pub use weighted::{Envelope, WeightedPoly, WeightedProduct, DEFAULT_B_SOURCE};

/// Relative deviation with a floor on the scale.
pub(crate) fn relative(dev: f64, scale: f64) -> f64 {
    if dev == 0.0 {
        0.0
    } else if scale == 0.0 {
        f64::INFINITY
    } else {
        dev / scale
    }
}

/// A short record of something the checks found, for the report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub id: String,
    pub text: String,
}
