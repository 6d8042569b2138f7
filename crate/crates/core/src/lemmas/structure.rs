//! Structure of two-hub trees and the line-graph P3 count that separates
//! them from `H(p, n, q)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_double_starlike, line_graph, p3_count, CandidateShape, DoubleStarlikeParams, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedCandidate {
    pub params: DoubleStarlikeParams,
    pub shape: CandidateShape,
}

/// Recovers the hub adjacency, the hub path and both branch multisets of a
/// tree with exactly two vertices of degree above 2. The larger hub is the
/// degree-`(p+1)` one; on ties the lower vertex index wins.
pub fn classify_candidate(t: &Graph) -> Result<ClassifiedCandidate> {
    if !t.is_tree() {
        return Err(Error::NotATree { vertices: t.order(), edges: t.size() });
    }
    let hubs: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) > 2).collect();
    let [h1, h2] = hubs[..] else {
        return Err(Error::Precondition(format!("expected two hubs, found {}", hubs.len())));
    };
    let (p_hub, q_hub) = if t.degree(h2) > t.degree(h1) { (h2, h1) } else { (h1, h2) };

    // hub-to-hub path by parent pointers from p_hub
    let mut parent = vec![usize::MAX; t.order()];
    parent[p_hub] = p_hub;
    let mut stack = vec![p_hub];
    while let Some(u) = stack.pop() {
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut on_path = vec![false; t.order()];
    let mut path_len = 1;
    let mut v = q_hub;
    on_path[v] = true;
    while v != p_hub {
        v = parent[v];
        on_path[v] = true;
        path_len += 1;
    }

    let branches = |hub: usize| -> Vec<usize> {
        let mut lengths = Vec::new();
        for &start in t.neighbors(hub) {
            if on_path[start] {
                continue;
            }
            let (mut prev, mut cur, mut vertices) = (hub, start, 1);
            while let Some(&next) = t.neighbors(cur).iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                vertices += 1;
            }
            if vertices > 1 {
                lengths.push(vertices - 1);
            }
        }
        lengths
    };

    let hubs_adjacent = path_len == 2;
    let shape = CandidateShape {
        hubs_adjacent,
        hub_path_len: if hubs_adjacent { 0 } else { path_len },
        branch_lengths_q: branches(q_hub),
        branch_lengths_p: branches(p_hub),
    }
    .normalized();
    let params = DoubleStarlikeParams {
        p: t.degree(p_hub) - 1,
        n: shape.implied_n(),
        q: t.degree(q_hub) - 1,
    };
    Ok(ClassifiedCandidate { params, shape })
}

/// P3 count of the line graph of `t` minus that of the line graph of
/// `H(p, n, q)`, both counted directly.
pub fn p3_defect(t: &Graph, params: DoubleStarlikeParams) -> Result<i64> {
    if t.degree_multiset() != params.degree_multiset() || params.n < 2 {
        return Err(Error::DegreeMultiset(format!(
            "tree degrees {:?} differ from those of {params}",
            t.degree_multiset()
        )));
    }
    let h = build_double_starlike(params)?;
    Ok(p3_count(&line_graph(t)) as i64 - p3_count(&line_graph(&h)) as i64)
}

/// Closed form of [`p3_defect`] for a two-hub tree of the given shape:
/// `(p-1)(q-1) + b(p-1) + a(q-1)` with adjacent hubs, `a(q-1) + b(p-1)`
/// otherwise. Derived from the line graph of `H(p, n, q)` having `n - 3`
/// vertices of degree 2, so it needs `n >= 3`.
pub fn predicted_p3_defect(params: DoubleStarlikeParams, shape: &CandidateShape) -> i64 {
    let (p, q) = (params.p as i64, params.q as i64);
    let (a, b) = (shape.a() as i64, shape.b() as i64);
    let base = a * (q - 1) + b * (p - 1);
    if shape.hubs_adjacent {
        (p - 1) * (q - 1) + base
    } else {
        base
    }
}
