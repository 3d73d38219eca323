//! Sparse multivariate Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Coeff, FieldCoeff};
use crate::error::AlgebraError;

/// Exponent vector; negative entries allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { names(i) } else { format!("{}^{}", names(i), e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A Laurent polynomial in `nvars` variables with coefficients in `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Laurent<C> {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Laurent::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Laurent::from_terms(self.nvars, self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            let v = a.clone() * c.clone();
            if !v.is_zero() {
                terms.insert(e.mul(m), v);
            }
        }
        Laurent { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Laurent::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    fn degree_box(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for m in it {
            for (i, &e) in m.0.iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / rhs`, or `None` if `rhs` does not divide.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero(self.nvars));
        }
        if let Some((m, c)) = rhs.as_monomial() {
            let inv = m.inv();
            let mut terms = BTreeMap::new();
            for (e, a) in &self.terms {
                terms.insert(e.mul(&inv), a.exact_div(c)?);
            }
            return Some(Laurent { nvars: self.nvars, terms });
        }
        // every quotient exponent lies in this box when the division is exact
        let (alo, ahi) = self.degree_box()?;
        let (blo, bhi) = rhs.degree_box()?;
        let qlo: Vec<i32> = alo.iter().zip(&blo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i32> = ahi.iter().zip(&bhi).map(|(a, b)| a - b).collect();
        let (lm, lc) = rhs.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut r = self.clone();
        let mut q = Laurent::zero(self.nvars);
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(&lm);
            if m.0.iter().enumerate().any(|(i, &e)| e < qlo[i] || e > qhi[i]) {
                return None;
            }
            let c = rc.exact_div(&lc)?;
            for (e, a) in &rhs.terms {
                r.add_term(e.mul(&m), -(a.clone() * c.clone()));
            }
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Replaces every monomial via `image`, which returns a coefficient and a
    /// monomial in `target_nvars` variables.
    pub fn substitute_monomials<D: Coeff>(
        &self,
        target_nvars: usize,
        cmap: impl Fn(&C) -> D,
        image: impl Fn(&Monomial) -> (D, Monomial),
    ) -> Laurent<D> {
        let mut out = Laurent::zero(target_nvars);
        for (m, c) in &self.terms {
            let (k, mm) = image(m);
            out.add_term(mm, cmap(c) * k);
        }
        out
    }

    /// Evaluates at a point of the torus (all coordinates nonzero).
    pub fn eval<F: FieldCoeff>(&self, point: &[F], cmap: impl Fn(&C) -> F) -> Result<F, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::Arity { expected: self.nvars, got: point.len() });
        }
        // inverses are only needed for variables with a negative exponent
        let mut need = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                need[i] |= e < 0;
            }
        }
        let inv: Vec<Option<F>> = point.iter().zip(&need).map(|(x, &n)| if n { x.inv() } else { None }).collect();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut v = cmap(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if e > 0 {
                    point[i].clone()
                } else {
                    inv[i].clone().expect("torus point coordinates are nonzero")
                };
                v = v * pow_field(&base, e.unsigned_abs());
            }
            acc = acc + v;
        }
        Ok(acc)
    }

    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        let mut out = String::new();
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let (neg, mag) = c.sign_split();
            if neg {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            let mono = m.render(names);
            let unit = mag.is_one();
            if m.is_one() {
                if mag.is_compound() {
                    out.push_str(&format!("({mag})"));
                } else {
                    out.push_str(&mag.to_string());
                }
            } else if unit {
                out.push_str(&mono);
            } else if mag.is_compound() {
                out.push_str(&format!("({mag})*{mono}"));
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

fn pow_field<F: FieldCoeff>(x: &F, mut e: u32) -> F {
    let mut acc = F::one();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        base = base.clone() * base;
        e >>= 1;
    }
    acc
}

/// `1 + m + m^2 + .. + m^(l-1)` for a monomial `m`.
pub fn p_poly<C: Coeff>(l: u32, m: &Laurent<C>) -> Result<Laurent<C>, AlgebraError> {
    let (mono, c) = m.as_monomial().ok_or(AlgebraError::NotMonomial)?;
    let mut out = Laurent::zero(m.nvars());
    let mut cur_m = Monomial::one(m.nvars());
    let mut cur_c = C::one();
    for _ in 0..l {
        out.add_term(cur_m.clone(), cur_c.clone());
        cur_m = cur_m.mul(mono);
        cur_c = cur_c * c.clone();
    }
    Ok(out)
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|i| format!("t{i}")))
    }
}

impl<'a, C: Coeff> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1.clone() * c2.clone();
                match out.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        out.insert(m, c);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Laurent { nvars: self.nvars, terms: out }
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<C: Coeff> $tr<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $f(self, rhs: Laurent<C>) -> Laurent<C> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Laurent<BigInt>;

    fn t(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn p_poly_small() {
        let x = t(1, 0);
        assert_eq!(p_poly(0, &x).unwrap(), P::zero(1));
        assert_eq!(p_poly(1, &x).unwrap(), P::one(1));
        assert_eq!(p_poly(2, &x).unwrap(), &P::one(1) + &x);
        let m = &t(2, 0) * &t(2, 1);
        assert_eq!(p_poly(3, &m).unwrap().to_string(), "t0^2*t1^2+t0*t1+1");
        assert!(p_poly(2, &(&x + &x)).is_ok());
        assert_eq!(p_poly(2, &(&x + &P::one(1))), Err(AlgebraError::NotMonomial));
    }

    #[test]
    fn render_order_and_signs() {
        // -(t0*t1+1)*(t1-1)
        let p = -(&(&(&t(3, 0) * &t(3, 1)) + &P::one(3)) * &(&t(3, 1) - &P::one(3)));
        assert_eq!(p.to_string(), "-t0*t1^2+t0*t1-t1+1");
        let q = &t(2, 0).mul_monomial(&Monomial(vec![-2, 0]), &BigInt::from(3)) - &t(2, 1);
        assert_eq!(q.to_string(), "-t1+3*t0^-1");
    }

    #[test]
    fn division() {
        let a = &(&t(2, 0) * &t(2, 1)) - &P::one(2);
        let b = &(&t(2, 0) + &P::one(2)) * &t(2, 1).mul_monomial(&Monomial(vec![-1, -3]), &BigInt::from(1));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(b));
        let c = &t(2, 0) + &P::constant(2, BigInt::from(2));
        assert_eq!(a.exact_div(&c), None);
    }
}
