//! Coefficient rings.
//!
//! Everything downstream is generic over [`Coeff`]. The concrete rings are
//! big integers, big rationals, cyclotomic numbers and a prime field used
//! for cheap certified lower bounds on ranks.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact commutative ring without zero divisors.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// The quotient `self / rhs` if it exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self;

    /// Splits off a sign for rendering: `(negative, |self|)`. Rings without
    /// an order return `(false, self)`.
    fn sign_split(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// Whether the value needs parentheses when used as a factor.
    fn is_compound(&self) -> bool {
        false
    }
}

/// A [`Coeff`] ring that is a field.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }
}

impl Coeff for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }
}

impl FieldCoeff for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}
