//! Runs every applicable checker on a graph or on `H(p, n, q)` and gathers
//! the results into one serialisable report.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::*;
use crate::error::Result;
use crate::graph::{
    build_candidate, build_double_starlike, canonical_form, candidate_shapes, graph6_encode,
    DoubleStarlikeParams, Graph,
};
use crate::spectra::laplacian_matrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

/// One line of a lemma report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub lemma_id: String,
    pub inputs: String,
    pub bounds: Bounds,
    pub values: Value,
    pub applicable: bool,
    pub passed: bool,
}

impl CheckRecord {
    fn exact(lemma_id: &str, inputs: &str, values: Value, passed: bool) -> Self {
        CheckRecord {
            lemma_id: lemma_id.into(),
            inputs: inputs.into(),
            bounds: Bounds { lower: None, upper: None },
            values,
            applicable: true,
            passed,
        }
    }

    fn not_applicable(lemma_id: &str, inputs: &str, reason: &str) -> Self {
        CheckRecord {
            lemma_id: lemma_id.into(),
            inputs: inputs.into(),
            bounds: Bounds { lower: None, upper: None },
            values: json!({ "reason": reason }),
            applicable: false,
            passed: true,
        }
    }
}

impl From<BoundCheck> for CheckRecord {
    fn from(c: BoundCheck) -> Self {
        CheckRecord {
            lemma_id: c.lemma_id,
            inputs: c.inputs,
            bounds: Bounds { lower: c.lower, upper: c.upper },
            values: json!({
                "value": c.value,
                "slack_low": c.slack_low,
                "slack_high": c.slack_high,
                "strict_upper": c.strict_upper,
            }),
            applicable: true,
            passed: c.passed,
        }
    }
}

impl From<(&str, &str, InterlacingCheck)> for CheckRecord {
    fn from((id, inputs, c): (&str, &str, InterlacingCheck)) -> Self {
        CheckRecord::exact(
            id,
            inputs,
            json!({ "inequalities": c.inequalities, "min_slack": c.min_slack }),
            c.passed,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub target: String,
    pub params: Option<DoubleStarlikeParams>,
    pub checks: Vec<CheckRecord>,
    pub all_passed: bool,
}

impl LemmaReport {
    /// Re-judges every floating-point check against `tol` instead of the
    /// default tolerance. Exact checks keep their verdicts.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        for c in self.checks.iter_mut().filter(|c| c.applicable) {
            let v = &c.values;
            let num = |k: &str| v.get(k).and_then(Value::as_f64);
            if v.get("slack_low").is_some() {
                let ok = |k: &str| num(k).is_none_or(|s| s >= -tol);
                let mut passed = ok("slack_low") && ok("slack_high");
                if v.get("strict_upper").and_then(Value::as_bool) == Some(true) {
                    passed = matches!((num("value"), c.bounds.upper), (Some(x), Some(u)) if x < u + tol);
                }
                c.passed = passed;
            } else if let Some(s) = num("min_slack") {
                c.passed = s >= -tol;
            } else if let Some(d) = num("max_deviation") {
                c.passed = d <= tol && v.get("exact").and_then(Value::as_bool) != Some(false);
            }
        }
        self.all_passed = self.checks.iter().all(|c| c.passed);
        self
    }
}

fn fold_interlacing(checks: impl IntoIterator<Item = Result<InterlacingCheck>>) -> Result<InterlacingCheck> {
    let mut total = InterlacingCheck { inequalities: 0, min_slack: f64::INFINITY, passed: true };
    for c in checks {
        let c = c?;
        total.inequalities += c.inequalities;
        total.min_slack = total.min_slack.min(c.min_slack);
        total.passed &= c.passed;
    }
    if total.inequalities == 0 {
        total.min_slack = 0.0;
    }
    Ok(total)
}

fn graph_checks(g: &Graph, label: &str) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    if g.size() > 0 {
        out.push(check_mu1_degree_bounds(g)?.into());
    } else {
        out.push(CheckRecord::not_applicable("mu1-degree-bounds", label, "graph has no edges"));
    }
    if g.order() >= 3 && g.is_connected() {
        out.push(check_mu2_lower_bound(g)?.into());
    } else {
        out.push(CheckRecord::not_applicable("mu2-second-degree", label, "needs a connected graph, n >= 3"));
    }
    if g.order() >= 4 && g.is_connected() {
        out.push(check_mu3_lower_bound(g)?.into());
    } else {
        out.push(CheckRecord::not_applicable("mu3-third-degree", label, "needs a connected graph, n >= 4"));
    }

    let vertex = fold_interlacing((0..g.order()).map(|u| check_interlacing_vertex(g, u)))?;
    out.push(("interlacing-vertex", label, vertex).into());
    let edge = fold_interlacing(g.edges().into_iter().map(|e| check_interlacing_edge(g, e)))?;
    out.push(("interlacing-edge", label, edge).into());
    let lap = laplacian_matrix(g);
    let principal = fold_interlacing((1..=g.order()).map(|k| {
        let keep: Vec<usize> = (0..k).collect();
        check_interlacing_principal(&lap, &keep)
    }))?;
    out.push(("interlacing-principal", label, principal).into());

    out.push(CheckRecord::exact("closed-walks-4", label, json!({}), check_walk_decomposition(g)));
    let inv = check_spectral_invariants(g);
    out.push(CheckRecord::exact(
        "spectral-invariants",
        label,
        serde_json::to_value(&inv.from_spectrum)?,
        inv.passed,
    ));
    if g.is_tree() {
        let c = check_line_graph_shift(g)?;
        out.push(CheckRecord::exact(
            "line-graph-shift",
            label,
            json!({ "max_deviation": c.max_deviation, "exact": c.exact }),
            c.passed,
        ));
    } else {
        out.push(CheckRecord::not_applicable("line-graph-shift", label, "graph is not a tree"));
    }
    let c = check_complement_relation(g);
    out.push(CheckRecord::exact(
        "complement-relation",
        label,
        json!({ "max_deviation": c.max_deviation }),
        c.passed,
    ));
    Ok(out)
}

fn finish(target: String, params: Option<DoubleStarlikeParams>, checks: Vec<CheckRecord>) -> LemmaReport {
    let all_passed = checks.iter().all(|c| c.passed);
    LemmaReport { target, params, checks, all_passed }
}

/// Every graph-level checker that applies to `g`.
pub fn check_graph(g: &Graph) -> Result<LemmaReport> {
    let label = graph6_encode(g);
    let checks = graph_checks(g, &label)?;
    Ok(finish(label, None, checks))
}

/// Graph-level checks on `H(p, n, q)` plus the family-specific ones: the
/// eigenvalue bounds, the degree-sequence solver, and the P3 defect over
/// every tree sharing its degree multiset.
pub fn check_params(params: DoubleStarlikeParams) -> Result<LemmaReport> {
    let h = build_double_starlike(params)?;
    let label = params.to_string();
    let mut checks = graph_checks(&h, &label)?;
    let DoubleStarlikeParams { p, n, q } = params;
    let family = n >= 4 && p > q && q >= 2;

    if family {
        checks.extend(check_double_starlike_bounds(params)?.into_iter().map(CheckRecord::from));
        let sols = solve_degree_sequences(params)?;
        let passed = sols == [expected_degree_sequence(params)];
        checks.push(CheckRecord::exact(
            "degree-sequence-uniqueness",
            &label,
            json!({ "solutions": sols.iter().map(|s| &s.counts).collect::<Vec<_>>() }),
            passed,
        ));
    } else {
        for id in ["h-mu1", "h-mu2", "h-mu3", "degree-sequence-uniqueness"] {
            checks.push(CheckRecord::not_applicable(id, &label, "needs n >= 4 and p > q >= 2"));
        }
    }

    if n >= 3 && p > q && q >= 2 {
        let target = canonical_form(&h)?;
        let mut examined = 0usize;
        let mut formula_ok = true;
        let mut zero_only_self = true;
        let mut seen = std::collections::HashSet::new();
        for shape in candidate_shapes(params) {
            let t = build_candidate(params, &shape)?;
            if !seen.insert(canonical_form(&t)?) {
                continue;
            }
            examined += 1;
            let defect = p3_defect(&t, params)?;
            formula_ok &= defect == predicted_p3_defect(params, &shape);
            let is_h = canonical_form(&t)? == target;
            zero_only_self &= (defect == 0) == is_h;
        }
        checks.push(CheckRecord::exact(
            "p3-defect",
            &label,
            json!({ "trees": examined, "closed_form_matches": formula_ok, "zero_only_for_target": zero_only_self }),
            formula_ok && zero_only_self,
        ));
    } else {
        checks.push(CheckRecord::not_applicable("p3-defect", &label, "needs n >= 3 and p > q >= 2"));
    }
    Ok(finish(graph6_encode(&h), Some(params), checks))
}
