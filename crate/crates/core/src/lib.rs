//! Exact Laplacian spectra of trees, executable spectral lemmas, and an
//! exhaustive search that checks whether a double starlike tree `H(p, n, q)`
//! has a non-isomorphic Laplacian-cospectral mate.
//!
//! The numeric core is generic over the scalar type: exact characteristic
//! polynomials work over any commutative ring implementing [`Ring`]
//! (`BigInt`, `BigRational`, `i64`, ...), and the symmetric eigensolver works
//! over any [`Real`] (`f32`, `f64`). The aliases below fix the concrete types
//! the rest of the crate uses.

pub mod error;
pub mod graph;
pub mod lemmas;
pub mod scalar;
pub mod search;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{
    build_candidate, build_double_starlike, canonical_form, enumerate_free_trees,
    enumerate_trees_with_degree_multiset, graph6_decode, graph6_encode, line_graph,
    CandidateShape, DoubleStarlikeParams, FreeTrees, Graph, DEFAULT_ENUMERATION_CAP,
};
pub use lemmas::BoundCheck;
pub use scalar::{Real, Ring};
pub use search::{verify_dls, DlsReport, SearchCheckpoint, Verdict};
pub use spectra::{MatrixKind, Polynomial, Spectrum, SquareMatrix};

/// Arbitrary-precision integer matrix (adjacency, Laplacian and their
/// principal submatrices).
pub type IntMatrix = SquareMatrix<num_bigint::BigInt>;

/// Exact integer characteristic polynomial, constant term first.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;

/// Exact rational polynomial; used where division is needed.
pub type RatPolynomial = Polynomial<num_rational::BigRational>;

/// Double-precision spectrum summary.
pub type SpectrumSummary = Spectrum<f64>;

/// Single-precision spectrum, mostly useful for quick pre-filtering.
pub type SpectrumSummary32 = Spectrum<f32>;
