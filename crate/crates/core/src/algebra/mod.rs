//! Exact arithmetic: GF(3), polynomials over GF(3) and ℤ, dense matrices,
//! and division-free characteristic polynomials.

mod charpoly;
mod gf3;
mod matrix;
mod poly;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use charpoly::{berkowitz, charpoly_gf3, charpoly_int};
pub use gf3::Gf3;
pub use matrix::{IntMat, Mat, Matrix};
pub use poly::{ExponentTriple, IntPoly, LinearSplit, Poly, PolyParseError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("the zero polynomial has no linear factorization")]
    ZeroPolynomial,
    #[error("{len} entries cannot form a square matrix of order {order}")]
    NotSquare { order: usize, len: usize },
    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}

/// Commutative ring with the operations Berkowitz needs.
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// `Σ a[i]·b[i]`; slices have equal length.
    fn dot(a: &[Self], b: &[Self]) -> Self {
        a.iter().zip(b).fold(Self::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    }
}

impl Ring for BigInt {}

impl Ring for Gf3 {
    // One reduction per dot product instead of one per term.
    fn dot(a: &[Self], b: &[Self]) -> Self {
        let sum: u32 = a.iter().zip(b).map(|(x, y)| u32::from(x.value() * y.value())).sum();
        Gf3::new(u64::from(sum))
    }
}
