use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{Real, Ring};

/// Dense univariate polynomial, constant term first. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    /// Monic polynomial with the given integer roots, `prod (x - r)`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::new(vec![T::one()]), |acc, &r| {
            acc.mul(&Self::new(vec![T::from_int(-r), T::one()]))
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_real<F: Real>(&self, x: F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| {
            acc * x + F::from(c.to_f64().expect("coefficient as f64")).expect("cast")
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn mul_x(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(T::zero());
        c.extend_from_slice(&self.coeffs);
        Polynomial { coeffs: c }
    }

    /// Exact quotient by `x`, or `None` when the constant term is non-zero.
    pub fn div_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            Some(c) if c.is_zero() => Some(Polynomial { coeffs: self.coeffs[1..].to_vec() }),
            _ => None,
        }
    }

    /// Multiplicity of `0` as a root, by repeated exact division by `x`.
    /// The zero polynomial reports `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        let mut k = 0;
        let mut p = self.clone();
        while p.degree().is_some_and(|d| d > 0) {
            match p.div_x() {
                Some(next) => {
                    p = next;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &T) -> Self {
        let lin = Self::new(vec![c.clone(), T::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::new(Vec::new()), |acc, k| acc.mul(&lin).add(&Self::new(vec![k.clone()])))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl<T: fmt::Display> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de, T> Deserialize<'de> for Polynomial<T>
where
    T: Ring + FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<T>().map_err(D::Error::custom))
            .collect::<Result<Vec<T>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl<T: fmt::Display + Ring> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}
