//! Exact and floating identities relating a graph to its spectra.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::BOUND_TOLERANCE;
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph};
use crate::spectra::{
    adjacency_charpoly, adjacency_spectrum, closed_walks, cw4_decomposition, laplacian_charpoly,
    laplacian_matrix, laplacian_spectrum, spectrum_invariants, SpectralInvariants, SquareMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeviationCheck {
    pub max_deviation: f64,
    /// Result of the exact polynomial form of the identity, when there is one.
    pub exact: Option<bool>,
    pub passed: bool,
}

impl DeviationCheck {
    fn new(max_deviation: f64, exact: Option<bool>) -> Self {
        let passed = max_deviation <= BOUND_TOLERANCE && exact != Some(false);
        DeviationCheck { max_deviation, exact, passed }
    }
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// For a tree `T` on `n` vertices, the `n - 1` largest Laplacian
/// eigenvalues are the adjacency eigenvalues of its line graph shifted by
/// `2`. Exactly: `det(xI - L(T)) = x * phi_line(x - 2)`.
pub fn check_line_graph_shift(t: &Graph) -> Result<DeviationCheck> {
    if !t.is_tree() {
        return Err(Error::NotATree { vertices: t.order(), edges: t.size() });
    }
    let line = line_graph(t);
    let mu = laplacian_spectrum(t).eigenvalues;
    let shifted: Vec<f64> = adjacency_spectrum(&line).eigenvalues.iter().map(|l| l + 2.0).collect();
    let deviation = max_gap(&mu[..t.order() - 1], &shifted);
    let exact = laplacian_charpoly(t) == adjacency_charpoly(&line).shift(&BigInt::from(-2)).mul_x();
    Ok(DeviationCheck::new(deviation, Some(exact)))
}

/// `trace(A^4) = 2m + 4 P3 + 8 C4`, all sides exact.
pub fn check_walk_decomposition(g: &Graph) -> bool {
    closed_walks(g, 4) == cw4_decomposition(g).walk_count()
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_determinant(m: &SquareMatrix<BigInt>) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m[(i, j)].clone()).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Spanning trees by the matrix-tree theorem: any cofactor of `L`.
pub fn spanning_tree_count_by_cofactor(g: &Graph) -> BigInt {
    if g.order() == 0 {
        return BigInt::zero();
    }
    let keep: Vec<usize> = (1..g.order()).collect();
    bareiss_determinant(&laplacian_matrix(g).principal_submatrix(&keep))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantComparison {
    pub from_spectrum: SpectralInvariants,
    pub direct: SpectralInvariants,
    pub passed: bool,
}

/// Compares the invariants read off the Laplacian characteristic polynomial
/// with the same quantities counted on the graph.
pub fn check_spectral_invariants(g: &Graph) -> InvariantComparison {
    let from_spectrum = spectrum_invariants(g);
    let components = g.component_count();
    let direct = SpectralInvariants {
        vertices: g.order(),
        edges: g.size(),
        components,
        spanning_trees: if components == 1 { spanning_tree_count_by_cofactor(g) } else { BigInt::zero() },
        sum_sq_degrees: g.degrees().iter().map(|d| d * d).sum(),
    };
    let passed = from_spectrum == direct;
    InvariantComparison { from_spectrum, direct, passed }
}

/// `mu_i(complement) = n - mu_(n-i)(G)` for `i = 1..n-1`.
pub fn check_complement_relation(g: &Graph) -> DeviationCheck {
    let n = g.order();
    if n < 2 {
        return DeviationCheck::new(0.0, None);
    }
    let mu = laplacian_spectrum(g).eigenvalues;
    let comp = laplacian_spectrum(&g.complement()).eigenvalues;
    let predicted: Vec<f64> = (1..n).map(|i| n as f64 - mu[n - i - 1]).collect();
    DeviationCheck::new(max_gap(&comp[..n - 1], &predicted), None)
}
