//! Berkowitz's division-free characteristic polynomial.

use super::{Polynomial, SquareMatrix};
use crate::scalar::Ring;

/// `det(xI - M)` with exact coefficients in `T`, using only ring
/// operations. `O(n^4)`.
pub fn char_poly<T: Ring>(m: &SquareMatrix<T>) -> Polynomial<T> {
    let n = m.dim();
    // Coefficients highest degree first while building.
    let mut acc: Vec<T> = vec![T::one()];
    for k in 0..n {
        // Toeplitz column [1, -a_kk, -R C, -R M C, ..., -R M^(k-1) C] for the
        // leading (k+1)x(k+1) block split as [[M, C], [R, a_kk]].
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(T::one());
        toeplitz.push(-m[(k, k)].clone());
        let mut v: Vec<T> = (0..k).map(|i| m[(i, k)].clone()).collect();
        for step in 0..k {
            let dot = (0..k).fold(T::zero(), |s, j| s + m[(k, j)].clone() * v[j].clone());
            toeplitz.push(-dot);
            if step + 1 < k {
                v = (0..k)
                    .map(|i| (0..k).fold(T::zero(), |s, j| s + m[(i, j)].clone() * v[j].clone()))
                    .collect();
            }
        }
        let next: Vec<T> = (0..k + 2)
            .map(|i| {
                (0..=i.min(k))
                    .filter(|&j| i - j < toeplitz.len())
                    .fold(T::zero(), |s, j| s + toeplitz[i - j].clone() * acc[j].clone())
            })
            .collect();
        acc = next;
    }
    acc.reverse();
    Polynomial::new(acc)
}
