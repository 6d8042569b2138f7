//! Trees sharing the degree multiset of `H(p, n, q)`: two hubs of degree
//! `p + 1` and `q + 1` with pendant paths hanging off them.

use serde::{Deserialize, Serialize};

use super::{DoubleStarlikeParams, Graph};
use crate::error::{Error, Result};

/// Structure of a tree with exactly two hubs.
///
/// `branch_lengths_q` lists the pendant paths of the degree-`(q+1)` hub
/// that are longer than a single leaf; a branch of length `l` has `l + 1`
/// vertices, the first one adjacent to the hub. `branch_lengths_p` is the
/// same for the degree-`(p+1)` hub. When the hubs are not adjacent,
/// `hub_path_len` counts the vertices of the hub-to-hub path including
/// both hubs; it is `0` for adjacent hubs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateShape {
    pub hubs_adjacent: bool,
    pub hub_path_len: usize,
    pub branch_lengths_q: Vec<usize>,
    pub branch_lengths_p: Vec<usize>,
}

impl CandidateShape {
    /// Number of long branches at the degree-`(q+1)` hub.
    pub fn a(&self) -> usize {
        self.branch_lengths_q.len()
    }

    /// Number of long branches at the degree-`(p+1)` hub.
    pub fn b(&self) -> usize {
        self.branch_lengths_p.len()
    }

    /// Path length `n` of the `H(p, n, q)` whose degree multiset this
    /// shape realises.
    pub fn implied_n(&self) -> usize {
        let branches: usize = self.branch_lengths_q.iter().chain(&self.branch_lengths_p).sum();
        if self.hubs_adjacent {
            branches + 2
        } else {
            self.hub_path_len + branches
        }
    }

    /// Sorts both branch multisets in non-increasing order.
    pub fn normalized(mut self) -> Self {
        self.branch_lengths_q.sort_unstable_by(|a, b| b.cmp(a));
        self.branch_lengths_p.sort_unstable_by(|a, b| b.cmp(a));
        self
    }

    fn validate(&self, params: DoubleStarlikeParams) -> Result<()> {
        let DoubleStarlikeParams { p, n, q } = params;
        if p < 2 || q < 2 {
            return Err(Error::InvalidShape(format!("hubs need p, q >= 2 (got p={p}, q={q})")));
        }
        if self.a() > q || self.b() > p {
            return Err(Error::InvalidShape(format!(
                "a={} > q={q} or b={} > p={p}",
                self.a(),
                self.b()
            )));
        }
        if self.branch_lengths_q.iter().chain(&self.branch_lengths_p).any(|&l| l == 0) {
            return Err(Error::InvalidShape("branch lengths must be at least 1".into()));
        }
        if self.hubs_adjacent && self.hub_path_len != 0 {
            return Err(Error::InvalidShape("adjacent hubs carry no hub path".into()));
        }
        if !self.hubs_adjacent && self.hub_path_len < 3 {
            return Err(Error::InvalidShape(format!(
                "non-adjacent hubs need a hub path of at least 3 vertices (got {})",
                self.hub_path_len
            )));
        }
        if self.implied_n() != n {
            return Err(Error::InvalidShape(format!(
                "lengths sum to n={}, expected n={n}",
                self.implied_n()
            )));
        }
        Ok(())
    }
}

/// Builds the tree described by `shape`. The degree-`(p+1)` hub is vertex
/// `0`; for non-adjacent hubs the hub path occupies `0..hub_path_len`
/// exactly as in [`super::build_double_starlike`].
pub fn build_candidate(params: DoubleStarlikeParams, shape: &CandidateShape) -> Result<Graph> {
    shape.validate(params)?;
    let DoubleStarlikeParams { p, q, .. } = params;
    let mut edges = Vec::new();
    let (q_hub, mut next) = if shape.hubs_adjacent {
        edges.push((0, 1));
        (1, 2)
    } else {
        let l1 = shape.hub_path_len;
        edges.extend((1..l1).map(|v| (v - 1, v)));
        (l1 - 1, l1)
    };
    let mut hang = |hub: usize, branches: &[usize], leaves: usize, next: &mut usize| {
        for &len in branches {
            let mut prev = hub;
            for _ in 0..=len {
                edges.push((prev, *next));
                prev = *next;
                *next += 1;
            }
        }
        for _ in 0..leaves {
            edges.push((hub, *next));
            *next += 1;
        }
    };
    hang(0, &shape.branch_lengths_p, p - shape.b(), &mut next);
    hang(q_hub, &shape.branch_lengths_q, q - shape.a(), &mut next);
    debug_assert_eq!(next, params.order());
    Ok(Graph::from_edges_unchecked(next, &edges))
}

/// Partitions of `total` into exactly `parts` positive parts, each listed
/// in non-increasing order.
pub(crate) fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < parts {
            return;
        }
        let hi = max.min(rest - (parts - 1));
        for first in (1..=hi).rev() {
            cur.push(first);
            go(rest - first, parts - 1, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, total, &mut Vec::new(), &mut out);
    out
}

/// Every shape realising the degree multiset of `H(p, n, q)`, adjacent
/// hubs first, then by increasing hub path, `a` and `b`. Shapes that give
/// isomorphic trees (possible when `p == q`) are not merged here.
pub fn candidate_shapes(params: DoubleStarlikeParams) -> Vec<CandidateShape> {
    let DoubleStarlikeParams { p, n, q } = params;
    let mut out = Vec::new();
    let mut fill = |adjacent: bool, l1: usize, budget: usize| {
        for a in 0..=q {
            for b in 0..=p {
                for s in 0..=budget {
                    for bq in partitions(s, a) {
                        for bp in partitions(budget - s, b) {
                            out.push(CandidateShape {
                                hubs_adjacent: adjacent,
                                hub_path_len: l1,
                                branch_lengths_q: bq.clone(),
                                branch_lengths_p: bp,
                            });
                        }
                    }
                }
            }
        }
    };
    if n >= 2 {
        fill(true, 0, n - 2);
    }
    for l1 in 3..=n {
        fill(false, l1, n - l1);
    }
    out
}
