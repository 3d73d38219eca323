//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element of conductor N is stored by its coordinates in the power
//! basis 1, z, .., z^(phi(N)-1) of Q[z]/Phi_N(z). Binary operations on
//! values of different conductors first lift both to the lcm.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Coeff, FieldCoeff};
use crate::error::AlgebraError;

fn phi_cache() -> &'static RwLock<BTreeMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<BTreeMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = phi_cache().read().expect("cache lock").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d, d | n, d < n
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = int_exact_quotient(&num, &den);
        }
    }
    let p = Arc::new(num);
    phi_cache().write().expect("cache lock").insert(n, p.clone());
    p
}

fn int_exact_quotient(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

#[derive(Clone, Debug)]
pub struct CycloNumber {
    n: u32,
    c: Vec<BigRational>,
}

impl CycloNumber {
    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.c
    }

    pub fn rational(q: BigRational) -> Self {
        CycloNumber { n: 1, c: vec![q] }
    }

    /// Builds `sum coeffs[j] z^j` in conductor `n`, reducing mod Phi_n.
    pub fn from_poly(n: u32, coeffs: &[BigRational]) -> Self {
        let phi = cyclotomic_poly(n);
        let d = phi.len() - 1;
        let mut r: Vec<BigRational> = coeffs.to_vec();
        if r.len() < d {
            r.resize(d, BigRational::zero());
        }
        for i in (d..r.len()).rev() {
            let c = std::mem::replace(&mut r[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate().take(d) {
                let t = &c * BigRational::from_integer(pj.clone());
                r[i - d + j] -= t;
            }
        }
        r.truncate(d);
        CycloNumber { n, c: r }
    }

    /// Re-expresses the value in conductor `m`, a multiple of the current one.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "lift target must be a multiple");
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut coeffs = vec![BigRational::zero(); (self.c.len() - 1) * step + 1];
        for (j, a) in self.c.iter().enumerate() {
            coeffs[j * step] = a.clone();
        }
        CycloNumber::from_poly(m, &coeffs)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.n.lcm(&other.n);
        (self.lift(m), other.lift(m))
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.c.iter().skip(1).all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = CycloNumber::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<BigRational> = cyclotomic_poly(self.n)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = qpoly::ext_gcd_left(&trim(self.c.clone()), &phi);
        // Phi_n is irreducible so g is a nonzero constant
        debug_assert_eq!(g.len(), 1);
        let inv_g = g[0].recip();
        let s: Vec<BigRational> = s.into_iter().map(|x| x * &inv_g).collect();
        Some(CycloNumber::from_poly(self.n, &s))
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

mod qpoly {
    //! Dense univariate polynomials over Q, lowest degree first.
    use super::trim;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn is_zero(a: &[BigRational]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut r = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            r[i] += x;
        }
        for (i, x) in b.iter().enumerate() {
            r[i] -= x;
        }
        trim(r)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] += x * y;
            }
        }
        trim(r)
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (vec![BigRational::zero()], r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        while r.len() >= b.len() && !is_zero(&r) {
            let shift = r.len() - b.len();
            let c = r.last().unwrap().clone() / &lead;
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] -= &c * bj;
            }
            q[shift] = c;
            r.pop();
            r = trim(r);
        }
        (trim(q), r)
    }

    /// Returns `(g, s)` with `s*a = g mod b`, g = gcd(a, b).
    pub fn ext_gcd_left(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r0 = a.to_vec();
        let mut r1 = trim(b.to_vec());
        let mut s0 = vec![BigRational::from_integer(1.into())];
        let mut s1 = vec![BigRational::zero()];
        while !is_zero(&r1) {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        (r0, s0)
    }
}

/// `zeta_N^k` in conductor N.
pub fn cyclo_embed(n: u32, k: i64) -> Result<CycloNumber, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::BadConductor(n as i64));
    }
    let e = k.rem_euclid(n as i64) as usize;
    let mut coeffs = vec![BigRational::zero(); e + 1];
    coeffs[e] = BigRational::one();
    Ok(CycloNumber::from_poly(n, &coeffs))
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = self.common(other);
        a.c == b.c
    }
}

impl Eq for CycloNumber {}

impl Add for CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: CycloNumber) -> CycloNumber {
        let (mut a, b) = if self.n == rhs.n { (self, rhs) } else { self.common(&rhs) };
        for (x, y) in a.c.iter_mut().zip(b.c) {
            *x += y;
        }
        a
    }
}

impl Sub for CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: CycloNumber) -> CycloNumber {
        self + (-rhs)
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(mut self) -> CycloNumber {
        for x in self.c.iter_mut() {
            *x = -std::mem::replace(x, BigRational::zero());
        }
        self
    }
}

impl Mul for CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: CycloNumber) -> CycloNumber {
        let (a, b) = if self.n == rhs.n { (self, rhs) } else { self.common(&rhs) };
        if a.n == 1 {
            return CycloNumber { n: 1, c: vec![&a.c[0] * &b.c[0]] };
        }
        let mut prod = vec![BigRational::zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloNumber::from_poly(a.n, &prod)
    }
}

impl Zero for CycloNumber {
    fn zero() -> Self {
        CycloNumber::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CycloNumber {
    fn one() -> Self {
        CycloNumber::rational(BigRational::one())
    }
}

impl From<BigInt> for CycloNumber {
    fn from(n: BigInt) -> Self {
        CycloNumber::rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.is_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "zeta({},{})", self.n, j)?;
            }
        }
        Ok(())
    }
}

impl Coeff for CycloNumber {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|r| self.clone() * r)
    }

    fn from_int(n: i64) -> Self {
        CycloNumber::from(BigInt::from(n))
    }

    fn sign_split(&self) -> (bool, Self) {
        match self.is_rational() {
            Some(q) if q.is_negative() => (true, -self.clone()),
            _ => (false, self.clone()),
        }
    }

    fn is_compound(&self) -> bool {
        self.c.iter().filter(|x| !x.is_zero()).count() > 1
    }
}

impl FieldCoeff for CycloNumber {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNumber {
        cyclo_embed(n, k).unwrap()
    }

    #[test]
    fn small_cyclotomic_polys() {
        let as_i = |n| cyclotomic_poly(n).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(as_i(1), "-1,1");
        assert_eq!(as_i(2), "1,1");
        assert_eq!(as_i(3), "1,1,1");
        assert_eq!(as_i(4), "1,0,1");
        assert_eq!(as_i(6), "1,-1,1");
        assert_eq!(as_i(12), "1,0,-1,0,1");
    }

    #[test]
    fn embed_examples() {
        assert_eq!(z(1, 0), CycloNumber::one());
        assert_eq!(z(2, 1), -CycloNumber::one());
        assert_eq!(z(3, 1) + z(3, 2), -CycloNumber::one());
    }

    #[test]
    fn order_and_minimal_polynomial() {
        for n in 1..=12u32 {
            let zeta = z(n, 1);
            assert_eq!(zeta.pow(n as u64), CycloNumber::one(), "zeta_{n}^{n}");
            for d in 1..n {
                assert_ne!(zeta.pow(d as u64), CycloNumber::one(), "order of zeta_{n}");
            }
            let mut acc = CycloNumber::zero();
            for (j, c) in cyclotomic_poly(n).iter().enumerate() {
                acc = acc + CycloNumber::from(c.clone()) * zeta.pow(j as u64);
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
        }
    }

    #[test]
    fn mixed_conductors() {
        // zeta_2 * zeta_3 = zeta_6^(3+2)
        assert_eq!(z(2, 1) * z(3, 1), z(6, 5));
        assert_eq!(z(4, 1) * z(4, 1), z(2, 1));
    }

    #[test]
    fn inverses() {
        for n in [3u32, 5, 8, 12] {
            let a = CycloNumber::one() + z(n, 1) + z(n, 1) + z(n, 2);
            let inv = a.inverse().unwrap();
            assert_eq!(a * inv, CycloNumber::one());
        }
    }

    #[test]
    fn display() {
        assert_eq!(z(3, 1).to_string(), "zeta(3,1)");
        assert_eq!((z(3, 2)).to_string(), "-1-zeta(3,1)");
    }
}
