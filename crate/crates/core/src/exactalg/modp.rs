//! Arithmetic modulo the Mersenne prime 2^61 - 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::scalar::{Coeff, FieldCoeff};

pub const MODULUS: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP(u64);

impl ModP {
    pub fn new(v: u64) -> Self {
        ModP(v % MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let r = n % BigInt::from(MODULUS);
        let r = if r < BigInt::zero() { r + BigInt::from(MODULUS) } else { r };
        ModP(r.to_u64().expect("reduced residue fits"))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModP(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        let s = self.0 + rhs.0;
        ModP(if s >= MODULUS { s - MODULUS } else { s })
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        ModP(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + MODULUS - rhs.0 })
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        let p = self.0 as u128 * rhs.0 as u128;
        let lo = (p as u64) & MODULUS;
        let hi = (p >> 61) as u64;
        let s = lo + hi;
        ModP(if s >= MODULUS { s - MODULUS } else { s })
    }
}

impl Zero for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for ModP {
    fn one() -> Self {
        ModP(1)
    }
}

impl Coeff for ModP {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| *self * r)
    }

    fn from_int(n: i64) -> Self {
        if n >= 0 {
            ModP::new(n as u64)
        } else {
            -ModP::new(n.unsigned_abs())
        }
    }
}

impl FieldCoeff for ModP {
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(MODULUS - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        for v in [1u64, 2, 3, 12345, MODULUS - 1] {
            let x = ModP::new(v);
            assert_eq!(x * x.inv().unwrap(), ModP::one());
        }
    }

    #[test]
    fn negative_bigint() {
        assert_eq!(ModP::from_bigint(&BigInt::from(-1)), -ModP::one());
    }
}
