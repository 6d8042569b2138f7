use serde::{Deserialize, Serialize};

use super::BOUND_TOLERANCE;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{laplacian_spectrum, symmetric_eigenvalues, SquareMatrix};
use crate::IntMatrix;

/// Outcome of an interlacing chain; `min_slack` is the smallest margin over
/// every inequality in the chain (negative when one is violated).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlacingCheck {
    pub inequalities: usize,
    pub min_slack: f64,
    pub passed: bool,
}

#[derive(Default)]
struct Chain {
    count: usize,
    min: f64,
}

impl Chain {
    fn new() -> Self {
        Chain { count: 0, min: f64::INFINITY }
    }

    fn ge(&mut self, big: f64, small: f64) {
        self.count += 1;
        self.min = self.min.min(big - small);
    }

    fn finish(self) -> InterlacingCheck {
        let min_slack = if self.count == 0 { 0.0 } else { self.min };
        InterlacingCheck { inequalities: self.count, min_slack, passed: min_slack >= -BOUND_TOLERANCE }
    }
}

/// `mu_i(G) >= mu_i(G - u) >= mu_(i+1)(G) - 1` for `i = 1..n-1`.
pub fn check_interlacing_vertex(g: &Graph, u: usize) -> Result<InterlacingCheck> {
    if u >= g.order() {
        return Err(Error::Precondition(format!("vertex {u} out of range")));
    }
    let full = laplacian_spectrum(g).eigenvalues;
    let del = laplacian_spectrum(&g.remove_vertex(u)?).eigenvalues;
    let mut chain = Chain::new();
    for i in 0..del.len() {
        chain.ge(full[i], del[i]);
        chain.ge(del[i], full[i + 1] - 1.0);
    }
    Ok(chain.finish())
}

/// `mu_1(G) >= mu_1(G - e) >= mu_2(G) >= ... >= mu_(n-1)(G - e) >= mu_n = 0`.
pub fn check_interlacing_edge(g: &Graph, e: (usize, usize)) -> Result<InterlacingCheck> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("({u}, {v}) is not an edge")));
    }
    let full = laplacian_spectrum(g).eigenvalues;
    let del = laplacian_spectrum(&g.remove_edge(u, v)?).eigenvalues;
    let n = full.len();
    let mut chain = Chain::new();
    for i in 0..n {
        chain.ge(full[i], del[i]);
        if i + 1 < n {
            chain.ge(del[i], full[i + 1]);
        }
    }
    Ok(chain.finish())
}

/// Cauchy interlacing for the principal submatrix on `keep`:
/// `alpha_i >= alpha'_i >= alpha_(n-m+i)`.
pub fn check_interlacing_principal(m: &IntMatrix, keep: &[usize]) -> Result<InterlacingCheck> {
    let n = m.dim();
    let mut seen = vec![false; n];
    for &k in keep {
        if k >= n || std::mem::replace(&mut seen[k], true) {
            return Err(Error::Precondition(format!("invalid or repeated index {k} for dimension {n}")));
        }
    }
    if !m.is_symmetric() {
        return Err(Error::Precondition("interlacing needs a symmetric matrix".into()));
    }
    let full = symmetric_eigenvalues(&m.to_real::<f64>());
    let sub: SquareMatrix<f64> = m.principal_submatrix(keep).to_real();
    let part = symmetric_eigenvalues(&sub);
    let k = part.len();
    let mut chain = Chain::new();
    for i in 0..k {
        chain.ge(full[i], part[i]);
        chain.ge(part[i], full[n - k + i]);
    }
    Ok(chain.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::laplacian_matrix;

    #[test]
    fn star_center_deletion() {
        let c = check_interlacing_vertex(&Graph::star(3), 0).unwrap();
        assert!(c.passed);
        assert_eq!(c.inequalities, 6);
    }

    #[test]
    fn path_edge_deletion() {
        let p4 = Graph::path(4);
        for e in p4.edges() {
            assert!(check_interlacing_edge(&p4, e).unwrap().passed);
        }
        assert!(check_interlacing_edge(&p4, (0, 3)).is_err());
    }

    #[test]
    fn full_keep_is_equality() {
        let l = laplacian_matrix(&Graph::cycle(5));
        let c = check_interlacing_principal(&l, &[0, 1, 2, 3, 4]).unwrap();
        assert!(c.passed);
        assert!(c.min_slack.abs() < 1e-12);
        assert!(check_interlacing_principal(&l, &[0, 0]).is_err());
        assert!(check_interlacing_principal(&l, &[5]).is_err());
    }
}
