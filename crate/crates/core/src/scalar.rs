//! Scalar abstraction. Every numeric routine in the crate is generic over
//! [`Scalar`]; the crate root fixes [`crate::Rational`] as the default.
//!
//! Any exact integral domain works (`BigInt`, `BigRational`, `Rational64`).
//! Floating point types satisfy the bounds too, but nothing here is
//! designed for inexact arithmetic and no alias is provided for them.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};

pub trait Scalar:
    Num + Clone + Debug + Display + FromStr + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in scalar type")
    }

    /// `(-1)^k`.
    fn sign(k: usize) -> Self {
        if k % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    fn powi(base: &Self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * base.clone();
        }
        acc
    }
}

impl<T> Scalar for T where
    T: Num
        + Clone
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + std::ops::Neg<Output = T>
        + Send
        + Sync
{
}
