//! Graph substrate: simple undirected graphs, the double starlike family,
//! tree enumeration, canonical forms and graph6 interchange.

mod candidate;
mod canon;
mod enumerate;
mod graph6;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use candidate::{build_candidate, candidate_shapes, CandidateShape};
pub use canon::{canonical_form, tree_center};
pub use enumerate::{
    enumerate_free_trees, enumerate_free_trees_capped, enumerate_trees_with_degree_multiset,
    level_sequence_to_tree, FreeTrees, DEFAULT_ENUMERATION_CAP,
};
pub use graph6::{graph6_decode, graph6_decode_lines, graph6_encode};

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph { adj: vec![Vec::new(); order] }
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("repeated edge at vertex {v}")));
            }
        }
        Ok(Graph { adj })
    }

    /// Edge list builder for callers that construct edges by hand and
    /// guarantee simplicity.
    pub(crate) fn from_edges_unchecked(order: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_edges(order, edges).expect("internally constructed graph is simple")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Component index for every vertex, numbered in order of first vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Graph with vertex `u` and its incident edges removed; the remaining
    /// vertices keep their relative order.
    pub fn remove_vertex(&self, u: usize) -> Result<Self> {
        if u >= self.order() {
            return Err(Error::InvalidGraph(format!("vertex {u} out of range")));
        }
        let shift = |v: usize| if v > u { v - 1 } else { v };
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != u && b != u)
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        Ok(Self::from_edges_unchecked(self.order() - 1, &edges))
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("({u}, {v}) is not an edge")));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidGraph("relabeling is not a permutation".into()));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        Ok(Self::from_edges_unchecked(n, &edges))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + off, b + off)));
        Self::from_edges_unchecked(off + other.order(), &edges)
    }

    /// Path on `order` vertices `0 - 1 - ... - order-1`.
    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Self::from_edges_unchecked(order, &edges)
    }

    /// Star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges_unchecked(leaves + 1, &edges)
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "cycle needs at least three vertices");
        let edges: Vec<_> = (0..order).map(|v| (v, (v + 1) % order)).collect();
        Self::from_edges_unchecked(order, &edges)
    }

    pub fn complete(order: usize) -> Self {
        Self::empty(order).complement()
    }
}

/// Parameters of the double starlike tree `H(p, n, q)`: a path on `n`
/// vertices with `p` leaves hung on one end and `q` on the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleStarlikeParams {
    pub p: usize,
    pub n: usize,
    pub q: usize,
}

impl DoubleStarlikeParams {
    pub fn new(p: usize, n: usize, q: usize) -> Result<Self> {
        if p == 0 || n == 0 || q == 0 {
            return Err(Error::InvalidParams(format!(
                "H({p},{n},{q}): p, n and q must all be at least 1"
            )));
        }
        Ok(DoubleStarlikeParams { p, n, q })
    }

    pub fn order(&self) -> usize {
        self.n + self.p + self.q
    }

    /// Degree multiset of `H(p, n, q)` in non-increasing order:
    /// `{p+1, q+1, 2^(n-2), 1^(p+q)}`, or `{p+q, 1^(p+q)}` for the star `n = 1`.
    pub fn degree_multiset(&self) -> Vec<usize> {
        if self.n == 1 {
            let mut d = vec![self.p + self.q];
            d.extend(std::iter::repeat_n(1, self.p + self.q));
            return d;
        }
        let mut d = vec![self.p + 1, self.q + 1];
        d.extend(std::iter::repeat_n(2, self.n.saturating_sub(2)));
        d.extend(std::iter::repeat_n(1, self.p + self.q));
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl std::fmt::Display for DoubleStarlikeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H({},{},{})", self.p, self.n, self.q)
    }
}

/// Builds `H(p, n, q)`. Path vertices are `0..n`, then the `p` leaves of
/// vertex `0`, then the `q` leaves of vertex `n - 1`.
pub fn build_double_starlike(params: DoubleStarlikeParams) -> Result<Graph> {
    let DoubleStarlikeParams { p, n, q } = DoubleStarlikeParams::new(params.p, params.n, params.q)?;
    let mut edges = Vec::with_capacity(n + p + q - 1);
    edges.extend((1..n).map(|v| (v - 1, v)));
    edges.extend((0..p).map(|i| (0, n + i)));
    edges.extend((0..q).map(|i| (n - 1, n + p + i)));
    Ok(Graph::from_edges_unchecked(n + p + q, &edges))
}

/// Line graph. Vertex `i` of the result is the `i`-th edge of `g` in
/// lexicographic order of its endpoint pair.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut out = Vec::new();
    for list in &incident {
        for (k, &a) in list.iter().enumerate() {
            for &b in &list[k + 1..] {
                out.push((a, b));
            }
        }
    }
    Graph::from_edges_unchecked(edges.len(), &out)
}

/// Number of paths on three vertices, `sum_v C(d(v), 2)`.
pub fn p3_count(g: &Graph) -> usize {
    g.adj.iter().map(|l| l.len() * l.len().saturating_sub(1) / 2).sum()
}
