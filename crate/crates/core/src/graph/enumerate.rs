//! Free tree enumeration by canonical level sequences (Wright, Richmond,
//! Odlyzko and McKay), plus the restricted enumeration over trees with a
//! given two-hub degree multiset.

use std::collections::HashSet;

use super::candidate::{build_candidate, candidate_shapes};
use super::{canonical_form, DoubleStarlikeParams, Graph};
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 18;

/// Streams one tree per isomorphism class of the given order.
///
/// Trees come out in a fixed order determined by their level sequences, so
/// the stream can be resumed from the last emitted sequence.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    order: usize,
    candidate: Option<Vec<usize>>,
    single_pending: bool,
}

impl FreeTrees {
    fn start(order: usize) -> Self {
        if order == 1 {
            return FreeTrees { order, candidate: None, single_pending: true };
        }
        let layout: Vec<usize> = (0..=order / 2).chain(1..order.div_ceil(2)).collect();
        FreeTrees { order, candidate: Some(layout), single_pending: false }
    }

    /// Continues the stream right after `last`, a level sequence previously
    /// returned by [`FreeTrees::next_level_sequence`].
    pub fn resume_after(order: usize, cap: usize, last: &[usize]) -> Result<Self> {
        check_order(order, cap)?;
        if last.len() != order || last.first() != Some(&0) {
            return Err(Error::Checkpoint(format!(
                "level sequence of length {} does not match order {order}",
                last.len()
            )));
        }
        if order == 1 {
            return Ok(FreeTrees { order, candidate: None, single_pending: false });
        }
        Ok(FreeTrees { order, candidate: next_rooted_tree(last, None), single_pending: false })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Next canonical level sequence (root at level 0, preorder).
    pub fn next_level_sequence(&mut self) -> Option<Vec<usize>> {
        if self.single_pending {
            self.single_pending = false;
            return Some(vec![0]);
        }
        let layout = next_tree(self.candidate.take()?)?;
        self.candidate = next_rooted_tree(&layout, None);
        Some(layout)
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_level_sequence().map(|l| level_sequence_to_tree(&l))
    }
}

fn check_order(order: usize, cap: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidParams("tree order must be at least 1".into()));
    }
    if order > cap {
        return Err(Error::OrderAboveCap { order, cap });
    }
    Ok(())
}

pub fn enumerate_free_trees(order: usize) -> Result<FreeTrees> {
    enumerate_free_trees_capped(order, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_free_trees_capped(order: usize, cap: usize) -> Result<FreeTrees> {
    check_order(order, cap)?;
    Ok(FreeTrees::start(order))
}

/// Tree whose preorder vertex `i` sits at depth `levels[i]`.
pub fn level_sequence_to_tree(levels: &[usize]) -> Graph {
    let mut last_at: Vec<usize> = Vec::with_capacity(levels.len());
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &lvl) in levels.iter().enumerate() {
        if lvl > 0 {
            edges.push((last_at[lvl - 1], v));
        }
        last_at.truncate(lvl);
        last_at.push(v);
    }
    Graph::from_edges_unchecked(levels.len(), &edges)
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the first subtree of the root (shifted up
/// one level) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let too_big = left.len() > rest.len() || (left.len() == rest.len() && left > rest);
    let valid = rest_height > left_height || (rest_height == left_height && !too_big);
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (slot, lvl) in next[len - (height + 1)..].iter_mut().zip(1..) {
            *slot = lvl;
        }
    }
    Some(next)
}

/// Hub parameters `(p, n, q)` with `p >= q` read off a two-hub degree
/// multiset.
pub(crate) fn two_hub_params(degrees: &[usize]) -> Result<DoubleStarlikeParams> {
    let k = degrees.len();
    let sum: usize = degrees.iter().sum();
    if k < 2 || degrees.contains(&0) || sum != 2 * (k - 1) {
        return Err(Error::DegreeMultiset(format!(
            "degree sum {sum} over {k} vertices is not that of a tree"
        )));
    }
    let mut hubs: Vec<usize> = degrees.iter().copied().filter(|&d| d > 2).collect();
    if hubs.len() != 2 {
        return Err(Error::DegreeMultiset(format!(
            "expected exactly two degrees above 2, found {}",
            hubs.len()
        )));
    }
    hubs.sort_unstable();
    let twos = degrees.iter().filter(|&&d| d == 2).count();
    Ok(DoubleStarlikeParams { p: hubs[1] - 1, n: twos + 2, q: hubs[0] - 1 })
}

/// All trees, up to isomorphism, with the given degree multiset, which must
/// contain exactly two entries above 2. Built from the two-hub candidate
/// shapes and deduplicated by canonical form, in first-seen order.
pub fn enumerate_trees_with_degree_multiset(degrees: &[usize]) -> Result<Vec<Graph>> {
    let params = two_hub_params(degrees)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for shape in candidate_shapes(params) {
        let t = build_candidate(params, &shape)?;
        if seen.insert(canonical_form(&t)?) {
            out.push(t);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=8).map(|k| enumerate_free_trees(k).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn order_four_is_path_and_star() {
        let trees: Vec<_> = enumerate_free_trees(4).unwrap().collect();
        let mut maxdeg: Vec<_> = trees.iter().map(Graph::max_degree).collect();
        maxdeg.sort();
        assert_eq!(maxdeg, vec![2, 3]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_free_trees(19), Err(Error::OrderAboveCap { .. })));
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees_capped(19, 19).is_ok());
    }

    #[test]
    fn resume_matches_uninterrupted() {
        let all: Vec<_> = {
            let mut it = enumerate_free_trees(9).unwrap();
            std::iter::from_fn(|| it.next_level_sequence()).collect()
        };
        for cut in [0, 1, 10, 45, 46] {
            let mut it = FreeTrees::resume_after(9, 18, &all[cut]).unwrap();
            let tail: Vec<_> = std::iter::from_fn(|| it.next_level_sequence()).collect();
            assert_eq!(tail, all[cut + 1..]);
        }
    }

    #[test]
    fn level_sequence_decoding() {
        let t = level_sequence_to_tree(&[0, 1, 2, 1]);
        assert_eq!(t.edges(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn two_hub_multisets() {
        let trees = enumerate_trees_with_degree_multiset(&[3, 3, 1, 1, 1, 1]).unwrap();
        assert_eq!(trees.len(), 1);
        assert!(enumerate_trees_with_degree_multiset(&[3, 3, 3, 1, 1, 1, 1, 1]).is_err());
        assert!(enumerate_trees_with_degree_multiset(&[3, 3, 1, 1, 1]).is_err());
        assert!(enumerate_trees_with_degree_multiset(&[2, 2, 1, 1]).is_err());
    }
}
