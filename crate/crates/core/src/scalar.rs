//! Scalar abstractions shared by the exact and floating-point kernels.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

/// A commutative ring with identity, as needed by division-free
/// determinant and characteristic polynomial algorithms.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + FromPrimitive
    + ToPrimitive
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("ring element from i64")
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + FromPrimitive
        + ToPrimitive
{
}

/// Floating-point scalar for the symmetric eigensolver.
pub trait Real: num_traits::Float + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("real from f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
