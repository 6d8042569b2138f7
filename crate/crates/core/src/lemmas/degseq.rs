//! Integer solutions of the degree-count constraints satisfied by any tree
//! Laplacian-cospectral with `H(p, n, q)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DoubleStarlikeParams;

/// Vertex counts per degree: `counts[i - 1]` vertices of degree `i`, for
/// `i = 1..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DegreeSequenceSolution {
    pub counts: Vec<usize>,
    pub max_degree: usize,
}

impl DegreeSequenceSolution {
    fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let max_degree = counts.len();
        DegreeSequenceSolution { counts, max_degree }
    }

    pub fn count(&self, degree: usize) -> usize {
        degree.checked_sub(1).and_then(|i| self.counts.get(i)).copied().unwrap_or(0)
    }

    /// `sum_i f(i) n_i`.
    pub fn weighted_sum(&self, f: impl Fn(i64) -> i64) -> i64 {
        self.counts.iter().enumerate().map(|(k, &c)| f(k as i64 + 1) * c as i64).sum()
    }
}

/// The sequence of `H(p, n, q)` itself:
/// `n_(p+1) = 1`, `n_(q+1) = 1`, `n_2 = n - 2`, `n_1 = p + q`.
pub fn expected_degree_sequence(params: DoubleStarlikeParams) -> DegreeSequenceSolution {
    let DoubleStarlikeParams { p, n, q } = params;
    let mut counts = vec![0; p + 1];
    counts[0] += p + q;
    counts[1] += n - 2;
    counts[p] += 1;
    counts[q] += 1;
    DegreeSequenceSolution::from_counts(counts)
}

fn choose3(i: usize) -> usize {
    if i < 3 {
        0
    } else {
        i * (i - 1) * (i - 2) / 6
    }
}

/// Every non-negative `(n_1, ..., n_(p+1))` with
///
/// * `sum n_i = n + p + q`,
/// * `sum i n_i = 2 (n + p + q - 1)`,
/// * `sum i^2 n_i = (p+1)^2 + (q+1)^2 + 4 (n - 2) + p + q`,
/// * `sum C(i, 3) n_i = C(p+1, 3) + C(q+1, 3)` (triangles of the line graph),
/// * at most one vertex of degree above `q + 3` and at most two above `4`.
///
/// Solutions come back in lexicographic order of their count vectors.
pub fn solve_degree_sequences(params: DoubleStarlikeParams) -> Result<Vec<DegreeSequenceSolution>> {
    let DoubleStarlikeParams { p, n, q } = params;
    if n < 4 || q < 2 || p <= q {
        return Err(Error::Precondition(format!("{params}: needs n >= 4 and p > q >= 2")));
    }
    let vertices = n + p + q;
    let degree_sum = 2 * (vertices - 1);
    let square_sum = (p + 1).pow(2) + (q + 1).pow(2) + 4 * (n - 2) + p + q;
    let triangles = choose3(p + 1) + choose3(q + 1);
    let max_degree = p + 1;

    let mut out = Vec::new();
    let mut high = vec![0usize; max_degree + 1];
    search(
        max_degree,
        triangles,
        &mut high,
        &Limits { q, vertices, degree_sum, square_sum },
        &mut out,
    );
    out.sort();
    Ok(out)
}

struct Limits {
    q: usize,
    vertices: usize,
    degree_sum: usize,
    square_sum: usize,
}

/// Fills `high[deg]` for `deg >= 3` from the top down, spending the exact
/// triangle budget; degrees 1 and 2 then follow from the vertex and edge
/// counts.
fn search(deg: usize, budget: usize, high: &mut [usize], lim: &Limits, out: &mut Vec<DegreeSequenceSolution>) {
    if deg == 2 {
        if budget == 0 {
            if let Some(sol) = complete(high, lim) {
                out.push(sol);
            }
        }
        return;
    }
    let above_q3: usize = high.iter().enumerate().filter(|&(d, _)| d > lim.q + 3).map(|(_, &c)| c).sum();
    let above_4: usize = high.iter().enumerate().filter(|&(d, _)| d > 4).map(|(_, &c)| c).sum();
    let mut max_count = budget / choose3(deg);
    if deg > lim.q + 3 {
        max_count = max_count.min(1 - above_q3.min(1));
    }
    if deg > 4 {
        max_count = max_count.min(2usize.saturating_sub(above_4));
    }
    for c in 0..=max_count {
        high[deg] = c;
        search(deg - 1, budget - c * choose3(deg), high, lim, out);
    }
    high[deg] = 0;
}

fn complete(high: &[usize], lim: &Limits) -> Option<DegreeSequenceSolution> {
    let hubs: usize = high[3..].iter().sum();
    let hub_degree: usize = high.iter().enumerate().skip(3).map(|(d, &c)| d * c).sum();
    let low_vertices = lim.vertices.checked_sub(hubs)?;
    let low_degree = lim.degree_sum.checked_sub(hub_degree)?;
    // n1 + n2 = low_vertices, n1 + 2 n2 = low_degree
    let n2 = low_degree.checked_sub(low_vertices)?;
    let n1 = low_vertices.checked_sub(n2)?;
    let mut counts = high[1..].to_vec();
    counts[0] = n1;
    counts[1] = n2;
    let squares: usize = counts.iter().enumerate().map(|(k, &c)| (k + 1) * (k + 1) * c).sum();
    (squares == lim.square_sum).then(|| DegreeSequenceSolution::from_counts(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: usize, n: usize, q: usize) -> DoubleStarlikeParams {
        DoubleStarlikeParams::new(p, n, q).unwrap()
    }

    #[test]
    fn h352_unique() {
        let sols = solve_degree_sequences(params(3, 5, 2)).unwrap();
        assert_eq!(sols.len(), 1);
        let s = &sols[0];
        assert_eq!((s.count(4), s.count(3), s.count(2), s.count(1)), (1, 1, 3, 5));
        assert_eq!(s.max_degree, 4);
    }

    #[test]
    fn h564_unique() {
        let sols = solve_degree_sequences(params(5, 6, 4)).unwrap();
        assert_eq!(sols, vec![expected_degree_sequence(params(5, 6, 4))]);
        let s = &sols[0];
        assert_eq!((s.count(6), s.count(5), s.count(2), s.count(1)), (1, 1, 4, 9));
    }

    #[test]
    fn derived_identity_holds() {
        let (p, q) = (7i64, 4i64);
        for s in solve_degree_sequences(params(7, 6, 4)).unwrap() {
            assert_eq!(s.weighted_sum(|i| i * i - 3 * i + 2), p * p + q * q - p - q);
        }
    }

    #[test]
    fn preconditions() {
        assert!(solve_degree_sequences(params(3, 3, 2)).is_err());
        assert!(solve_degree_sequences(params(3, 5, 3)).is_err());
        assert!(solve_degree_sequences(params(3, 5, 1)).is_err());
    }
}
