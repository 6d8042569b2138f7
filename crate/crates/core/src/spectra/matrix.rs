use std::ops::{Index, IndexMut};

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::scalar::{Real, Ring};

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Ring> SquareMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        SquareMatrix { dim, data }
    }

    /// Row-major construction; `rows` must be square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix rows must be square");
        SquareMatrix { dim, data: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Principal submatrix on the rows and columns in `keep` (in the given
    /// order).
    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        Self::from_fn(keep.len(), |i, j| self[(keep[i], keep[j])].clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn to_real<F: Real>(&self) -> SquareMatrix<F> {
        self.map(|v| F::from(v.to_f64().expect("entry representable as f64")).expect("cast"))
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().unwrap_or(f64::INFINITY).abs()).fold(0.0, f64::max)
    }
}

impl<F> SquareMatrix<F> {
    pub(crate) fn raw(&self) -> &[F] {
        &self.data
    }
}

pub fn adjacency_matrix_in<T: Ring>(g: &Graph) -> SquareMatrix<T> {
    let mut m = SquareMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m[(u, v)] = T::one();
        m[(v, u)] = T::one();
    }
    m
}

/// `L = D - A`.
pub fn laplacian_matrix_in<T: Ring>(g: &Graph) -> SquareMatrix<T> {
    let mut m = SquareMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m[(u, v)] = -T::one();
        m[(v, u)] = -T::one();
    }
    for v in 0..g.order() {
        m[(v, v)] = T::from_int(g.degree(v) as i64);
    }
    m
}

pub fn adjacency_matrix(g: &Graph) -> SquareMatrix<BigInt> {
    adjacency_matrix_in(g)
}

pub fn laplacian_matrix(g: &Graph) -> SquareMatrix<BigInt> {
    laplacian_matrix_in(g)
}
