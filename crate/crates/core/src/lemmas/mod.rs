//! Executable spectral lemmas: eigenvalue bounds, interlacing, walk and
//! invariant identities, the degree-sequence constraint solver, and the
//! structural classifier for two-hub trees.

mod bounds;
mod degseq;
mod identities;
mod interlacing;
mod report;
mod structure;

use serde::{Deserialize, Serialize};

pub use bounds::{check_double_starlike_bounds, check_mu1_degree_bounds, check_mu2_lower_bound, check_mu3_lower_bound};
pub use degseq::{expected_degree_sequence, solve_degree_sequences, DegreeSequenceSolution};
pub use identities::{
    bareiss_determinant, check_complement_relation, check_line_graph_shift, check_spectral_invariants,
    check_walk_decomposition, spanning_tree_count_by_cofactor, DeviationCheck,
};
pub use interlacing::{check_interlacing_edge, check_interlacing_principal, check_interlacing_vertex, InterlacingCheck};
pub use report::{check_graph, check_params, CheckRecord, LemmaReport};
pub use structure::{classify_candidate, p3_defect, predicted_p3_defect, ClassifiedCandidate};

/// Absolute tolerance applied to every floating-point bound.
pub const BOUND_TOLERANCE: f64 = 1e-8;

/// One eigenvalue bound evaluated on a concrete graph. Missing bounds are
/// treated as infinite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub lemma_id: String,
    pub inputs: String,
    pub lower: Option<f64>,
    pub value: f64,
    pub upper: Option<f64>,
    /// Upper bound must hold strictly.
    pub strict_upper: bool,
    pub slack_low: Option<f64>,
    pub slack_high: Option<f64>,
    pub passed: bool,
}

impl BoundCheck {
    pub fn new(
        lemma_id: &str,
        inputs: String,
        lower: Option<f64>,
        value: f64,
        upper: Option<f64>,
        tol: f64,
    ) -> Self {
        let slack_low = lower.map(|l| value - l);
        let slack_high = upper.map(|u| u - value);
        let passed = slack_low.is_none_or(|s| s >= -tol) && slack_high.is_none_or(|s| s >= -tol);
        BoundCheck {
            lemma_id: lemma_id.to_string(),
            inputs,
            lower,
            value,
            upper,
            strict_upper: false,
            slack_low,
            slack_high,
            passed,
        }
    }

    /// Same as [`BoundCheck::new`] with a strict upper bound: the value
    /// must stay below `upper + tol` rather than reach it.
    pub fn new_strict_upper(lemma_id: &str, inputs: String, value: f64, upper: f64, tol: f64) -> Self {
        let mut c = Self::new(lemma_id, inputs, None, value, Some(upper), tol);
        c.strict_upper = true;
        c.passed = value < upper + tol;
        c
    }
}
