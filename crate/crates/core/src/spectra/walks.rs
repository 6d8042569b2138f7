//! Closed walks and the length-4 walk decomposition.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::adjacency_matrix;
use crate::graph::{p3_count, Graph};

/// Number of closed walks of length `k`, `trace(A^k)`.
pub fn closed_walks(g: &Graph, k: u32) -> BigInt {
    adjacency_matrix(g).pow(k).trace()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cw4Decomposition {
    pub edges: usize,
    pub p3_count: usize,
    pub c4_count: usize,
}

impl Cw4Decomposition {
    /// `2m + 4 P3 + 8 C4`.
    pub fn walk_count(&self) -> BigInt {
        BigInt::from(2 * self.edges + 4 * self.p3_count + 8 * self.c4_count)
    }
}

/// 4-cycles counted directly: each cycle has two diagonals, and a pair of
/// vertices with `c` common neighbours closes `C(c, 2)` cycles through it.
pub fn four_cycle_count(g: &Graph) -> usize {
    let n = g.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (g.neighbors(u), g.neighbors(v));
            let (mut i, mut j, mut common) = (0, 0, 0usize);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        common += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            total += common * common.saturating_sub(1) / 2;
        }
    }
    total / 2
}

pub fn cw4_decomposition(g: &Graph) -> Cw4Decomposition {
    Cw4Decomposition { edges: g.size(), p3_count: p3_count(g), c4_count: four_cycle_count(g) }
}
