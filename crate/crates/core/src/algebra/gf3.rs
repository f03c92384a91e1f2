//! The field with three elements.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::AlgebraError;

/// An element of GF(3), stored as its canonical residue in `{0, 1, 2}`.
///
/// `2` plays the role of `-1`; the polynomial printer turns it back into a
/// minus sign where that reads better.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    /// `2 = -1`.
    pub const TWO: Gf3 = Gf3(2);
    pub const MINUS_ONE: Gf3 = Gf3(2);

    /// All three elements in residue order.
    pub const ELEMENTS: [Gf3; 3] = [Gf3(0), Gf3(1), Gf3(2)];

    /// Reduces any unsigned integer.
    pub const fn new(value: u64) -> Self {
        Gf3((value % 3) as u8)
    }

    /// Reduces any signed integer to its canonical residue.
    pub const fn from_i64(value: i64) -> Self {
        Gf3(value.rem_euclid(3) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    /// Multiplicative inverse; `1` and `2` are their own inverses.
    pub fn inv(self) -> Result<Self, AlgebraError> {
        if self.0 == 0 {
            Err(AlgebraError::ZeroInverse)
        } else {
            Ok(self)
        }
    }

    /// Signed representative in `{-1, 0, 1}`.
    pub const fn signed(self) -> i8 {
        match self.0 {
            2 => -1,
            v => v as i8,
        }
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u8> for Gf3 {
    fn from(value: u8) -> Self {
        Gf3(value % 3)
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    #[inline]
    fn add(self, rhs: Gf3) -> Gf3 {
        let s = self.0 + rhs.0;
        Gf3(if s >= 3 { s - 3 } else { s })
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    #[inline]
    fn sub(self, rhs: Gf3) -> Gf3 {
        self + (-rhs)
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    #[inline]
    fn neg(self) -> Gf3 {
        Gf3(if self.0 == 0 { 0 } else { 3 - self.0 })
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    #[inline]
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl AddAssign for Gf3 {
    fn add_assign(&mut self, rhs: Gf3) {
        *self = *self + rhs;
    }
}

impl SubAssign for Gf3 {
    fn sub_assign(&mut self, rhs: Gf3) {
        *self = *self - rhs;
    }
}

impl MulAssign for Gf3 {
    fn mul_assign(&mut self, rhs: Gf3) {
        *self = *self * rhs;
    }
}

impl Zero for Gf3 {
    fn zero() -> Self {
        Gf3::ZERO
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Gf3 {
    fn one() -> Self {
        Gf3::ONE
    }
}
