//! Exact characteristic polynomials, floating-point spectra, walk counts
//! and the invariants a Laplacian spectrum determines.

mod charpoly;
mod eigen;
mod matrix;
mod poly;
mod walks;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use charpoly::char_poly;
pub use eigen::{eigen_tolerance, eigenvalues, eigenvalues_in, symmetric_eigenvalues, MatrixKind, Spectrum};
pub use matrix::{adjacency_matrix, adjacency_matrix_in, laplacian_matrix, laplacian_matrix_in, SquareMatrix};
pub use poly::Polynomial;
pub use walks::{closed_walks, cw4_decomposition, four_cycle_count, Cw4Decomposition};

/// Big integers as decimal strings in JSON.
pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub fn laplacian_charpoly(g: &Graph) -> Polynomial<BigInt> {
    char_poly(&laplacian_matrix(g))
}

pub fn adjacency_charpoly(g: &Graph) -> Polynomial<BigInt> {
    char_poly(&adjacency_matrix(g))
}

pub fn laplacian_spectrum(g: &Graph) -> Spectrum<f64> {
    eigenvalues(&laplacian_matrix_in::<i64>(g), MatrixKind::Laplacian)
}

pub fn adjacency_spectrum(g: &Graph) -> Spectrum<f64> {
    eigenvalues(&adjacency_matrix_in::<i64>(g), MatrixKind::Adjacency)
}

/// Laplacian cospectrality decided by exact coefficient comparison.
pub fn is_laplacian_cospectral(g1: &Graph, g2: &Graph) -> bool {
    g1.order() == g2.order() && g1.size() == g2.size() && laplacian_charpoly(g1) == laplacian_charpoly(g2)
}

/// Laplacian characteristic polynomial of the complement, computed from the
/// complement's own matrix.
pub fn complement_laplacian_charpoly(g: &Graph) -> Polynomial<BigInt> {
    laplacian_charpoly(&g.complement())
}

/// Graph invariants recovered from nothing but the exact Laplacian
/// characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralInvariants {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    /// `0` when the graph is disconnected.
    #[serde(with = "decimal")]
    pub spanning_trees: BigInt,
    pub sum_sq_degrees: usize,
}

/// Reads invariants off `det(xI - L)`. With `c_k` the coefficient of `x^k`:
/// the edge count is `-c_(n-1) / 2`, `trace(L^2) = c_(n-1)^2 - 2 c_(n-2)`
/// and the spanning tree count is `(-1)^(n-1) c_1 / n`.
pub fn invariants_from_laplacian_charpoly(poly: &Polynomial<BigInt>) -> SpectralInvariants {
    let n = poly.degree().unwrap_or(0);
    if n == 0 {
        return SpectralInvariants {
            vertices: 0,
            edges: 0,
            components: 0,
            spanning_trees: BigInt::zero(),
            sum_sq_degrees: 0,
        };
    }
    let e1 = -poly.coeff(n - 1);
    let e2 = if n >= 2 { poly.coeff(n - 2) } else { BigInt::zero() };
    let two_m = e1.clone();
    let trace_sq = &e1 * &e1 - BigInt::from(2) * e2;
    let components = poly.zero_root_multiplicity();
    let spanning_trees = if components == 1 {
        let c1 = poly.coeff(1);
        let signed = if (n - 1).is_even() { c1 } else { -c1 };
        let (quot, rem) = signed.div_rem(&BigInt::from(n));
        debug_assert!(rem.is_zero());
        quot
    } else {
        BigInt::zero()
    };
    SpectralInvariants {
        vertices: n,
        edges: (&two_m / BigInt::from(2)).to_usize().expect("edge count"),
        components,
        spanning_trees: spanning_trees.abs(),
        sum_sq_degrees: (trace_sq - two_m).to_usize().expect("degree square sum"),
    }
}

pub fn spectrum_invariants(g: &Graph) -> SpectralInvariants {
    invariants_from_laplacian_charpoly(&laplacian_charpoly(g))
}
