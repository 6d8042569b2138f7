//! Dense symmetric eigenvalues: Householder reduction to tridiagonal form
//! followed by the implicit-shift QL iteration.

use serde::{Deserialize, Serialize};

use super::SquareMatrix;
use crate::scalar::{Real, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    Other,
}

/// Eigenvalues in non-increasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum<F> {
    pub eigenvalues: Vec<F>,
    pub matrix_kind: MatrixKind,
}

impl<F: Real> Spectrum<F> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// 1-based access, matching the usual `mu_1 >= mu_2 >= ...` labels.
    pub fn nth(&self, i: usize) -> F {
        self.eigenvalues[i - 1]
    }

    pub fn power_sum(&self, k: i32) -> F {
        self.eigenvalues.iter().fold(F::zero(), |s, &v| s + v.powi(k))
    }
}

/// Eigenvalue tolerance `1e-10 * n * max|entry|`.
pub fn eigen_tolerance(dim: usize, max_abs_entry: f64) -> f64 {
    1e-10 * dim as f64 * max_abs_entry.max(1.0)
}

/// Eigenvalues of a symmetric matrix, sorted descending. Only the lower
/// triangle is read.
pub fn symmetric_eigenvalues<F: Real>(m: &SquareMatrix<F>) -> Vec<F> {
    let n = m.dim();
    if n == 0 {
        return Vec::new();
    }
    let mut a: Vec<Vec<F>> = m.raw().chunks(n).map(<[F]>::to_vec).collect();
    let (mut d, mut e) = tridiagonalize(&mut a);
    tridiagonal_ql(&mut d, &mut e);
    d.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    d
}

/// Householder reduction; returns the diagonal and the sub-diagonal, with
/// `e[i]` coupling rows `i - 1` and `i` (`e[0]` unused).
#[allow(clippy::needless_range_loop)]
fn tridiagonalize<F: Real>(a: &mut [Vec<F>]) -> (Vec<F>, Vec<F>) {
    let n = a.len();
    let mut d = vec![F::zero(); n];
    let mut e = vec![F::zero(); n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = F::zero();
        if l > 0 {
            let scale = (0..=l).fold(F::zero(), |s, k| s + a[i][k].abs());
            if scale == F::zero() {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] = a[i][k] / scale;
                    h = h + a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= F::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i][l] = f - g;
                let mut f = F::zero();
                for j in 0..=l {
                    let mut g = F::zero();
                    for k in 0..=j {
                        g = g + a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g = g + a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f = f + e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] = a[j][k] - (f * e[k] + g * a[i][k]);
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    (d, e)
}

fn tridiagonal_ql<F: Real>(d: &mut [F], e: &mut [F]) {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = F::zero();
    let eps = F::epsilon();
    let two = F::of(2.0);
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 64, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(F::one());
            let signed_r = if g >= F::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + signed_r);
            let (mut s, mut c, mut p) = (F::one(), F::one(), F::zero());
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = F::zero();
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
}

/// Spectrum of an exact symmetric matrix in precision `F`.
pub fn eigenvalues_in<F: Real, T: Ring>(m: &SquareMatrix<T>, kind: MatrixKind) -> Spectrum<F> {
    Spectrum { eigenvalues: symmetric_eigenvalues(&m.to_real::<F>()), matrix_kind: kind }
}

pub fn eigenvalues<T: Ring>(m: &SquareMatrix<T>, kind: MatrixKind) -> Spectrum<f64> {
    eigenvalues_in::<f64, T>(m, kind)
}
