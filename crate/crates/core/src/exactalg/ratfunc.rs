//! Rational functions as unnormalized fractions of Laurent polynomials.

use std::fmt;

use super::laurent::Laurent;
use super::scalar::Coeff;

#[derive(Clone, Debug)]
pub struct RatFunc<C> {
    num: Laurent<C>,
    den: Laurent<C>,
}

impl<C: Coeff> RatFunc<C> {
    pub fn new(num: Laurent<C>, den: Laurent<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn from_poly(p: Laurent<C>) -> Self {
        let den = Laurent::one(p.nvars());
        RatFunc { num: p, den }
    }

    pub fn num(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn den(&self) -> &Laurent<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc { num: &self.num + &o.num, den: self.den.clone() };
        }
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    /// Returns the polynomial value if the fraction is one.
    pub fn to_poly(&self) -> Option<Laurent<C>> {
        self.num.exact_div(&self.den)
    }
}

impl<C: Coeff> PartialEq for RatFunc<C> {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl<C: Coeff> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |i: usize| format!("s{}", i + 1);
        if let Some(p) = self.to_poly() {
            return f.write_str(&p.render(&names));
        }
        write!(f, "({})/({})", self.num.render(&names), self.den.render(&names))
    }
}
