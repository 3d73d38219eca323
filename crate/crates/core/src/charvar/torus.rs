//! Torsion-translated subtori of `(C*)^n` in binomial form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::TorusError;
use crate::exactalg::lattice::{hermite, smith, small, to_big, IntMatrix};
use crate::exactalg::{cyclo_embed, CycloNumber, Laurent, Monomial, RatFunc};
use crate::{Coeff, LaurentPoly};

/// A root of unity `exp(2 pi i num/den)`, stored as a reduced fraction in
/// `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    num: i64,
    den: i64,
}

impl Root {
    pub const ONE: Root = Root { num: 0, den: 1 };
    pub const MINUS_ONE: Root = Root { num: 1, den: 2 };

    pub fn new(num: i64, den: i64) -> Root {
        assert!(den > 0, "root denominator must be positive");
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        Root { num: num / g, den: den / g }
    }

    /// `zeta_n^j`.
    pub fn zeta(n: i64, j: i64) -> Root {
        Root::new(j, n)
    }

    pub fn num(self) -> i64 {
        self.num
    }

    /// The order of the root.
    pub fn order(self) -> i64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn add(self, o: Root) -> Root {
        let den = self.den.lcm(&o.den);
        Root::new(self.num * (den / self.den) + o.num * (den / o.den), den)
    }

    pub fn scale(self, k: i64) -> Root {
        Root::new(self.num * k.rem_euclid(self.den), self.den)
    }

    pub fn neg(self) -> Root {
        Root::new(-self.num, self.den)
    }

    fn from_big(num: &BigInt, den: &BigInt) -> Root {
        let r = num.mod_floor(den);
        Root::new(r.to_i64().expect("small"), den.to_i64().expect("small"))
    }

    pub fn to_cyclo(self) -> CycloNumber {
        cyclo_embed(self.den as u32, self.num).expect("positive conductor")
    }

    /// The value as an integer when it is `1` or `-1`.
    pub fn as_sign(self) -> Option<i64> {
        match (self.num, self.den) {
            (0, 1) => Some(1),
            (1, 2) => Some(-1),
            _ => None,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_sign() {
            Some(1) => write!(f, "1"),
            Some(_) => write!(f, "-1"),
            None => write!(f, "zeta({},{})", self.den, self.num),
        }
    }
}

/// `prod x_i^{a_i} = value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub exps: Vec<i64>,
    pub value: Root,
}

impl Constraint {
    pub fn new(exps: Vec<i64>, value: Root) -> Self {
        Constraint { exps, value }
    }

    pub fn render(&self) -> String {
        let m = Monomial(self.exps.iter().map(|&e| e as i32).collect());
        format!("{} = {}", m.render(&|i| format!("t{i}")), self.value)
    }
}

/// The common zero set of binomial constraints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionTorus {
    n: usize,
    constraints: Vec<Constraint>,
    pub name: Option<String>,
}

/// Result of normalizing a torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub nonempty: bool,
    pub dim: usize,
    pub torus: TorsionTorus,
}

impl TorsionTorus {
    pub fn full(n: usize) -> Self {
        TorsionTorus { n, constraints: Vec::new(), name: None }
    }

    pub fn new(n: usize, constraints: Vec<Constraint>) -> Result<Self, TorusError> {
        for c in &constraints {
            if c.exps.len() != n {
                return Err(TorusError::Arity { expected: n, got: c.exps.len() });
            }
        }
        Ok(TorsionTorus { n, constraints, name: None })
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, c: Constraint) -> Result<(), TorusError> {
        if c.exps.len() != self.n {
            return Err(TorusError::Arity { expected: self.n, got: c.exps.len() });
        }
        self.constraints.push(c);
        Ok(())
    }

    /// Pins coordinate `i` to `value`.
    pub fn pin(&mut self, i: usize, value: Root) {
        let mut e = vec![0; self.n];
        e[i] = 1;
        self.constraints.push(Constraint::new(e, value));
    }

    fn matrix(&self) -> IntMatrix {
        to_big(&self.constraints.iter().map(|c| c.exps.clone()).collect::<Vec<_>>())
    }

    fn values_through(&self, w: &[BigInt]) -> Root {
        // the value of a combination of constraints, as a fraction of a turn
        let den: i64 = self.constraints.iter().fold(1, |acc, c| acc.lcm(&c.value.den));
        let mut num = BigInt::zero();
        for (wi, c) in w.iter().zip(&self.constraints) {
            num += wi * BigInt::from(c.value.num * (den / c.value.den));
        }
        Root::from_big(&num, &BigInt::from(den))
    }

    /// Hermite-normal constraints with their induced values.
    pub fn canonicalize(&self) -> Canonical {
        let h = hermite(&self.matrix(), self.n);
        let rank = h.rank();
        let consistent = h.w[rank..].iter().all(|w| self.values_through(w).is_one());
        if !consistent {
            let empty = Constraint::new(vec![0; self.n], Root::MINUS_ONE);
            return Canonical {
                nonempty: false,
                dim: 0,
                torus: TorsionTorus { n: self.n, constraints: vec![empty], name: self.name.clone() },
            };
        }
        let constraints = h
            .h
            .iter()
            .zip(&h.w)
            .map(|(row, w)| Constraint::new(row.iter().map(small).collect(), self.values_through(w)))
            .collect();
        Canonical {
            nonempty: true,
            dim: self.n - rank,
            torus: TorsionTorus { n: self.n, constraints, name: self.name.clone() },
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.canonicalize().nonempty
    }

    pub fn dim(&self) -> Option<usize> {
        let c = self.canonicalize();
        c.nonempty.then_some(c.dim)
    }

    /// Irreducible components, each a translated subtorus given by a
    /// monomial parametrization. Empty when the constraints are inconsistent.
    pub fn components(&self) -> Vec<TorusParametrization> {
        let canon = self.canonicalize();
        if !canon.nonempty {
            return Vec::new();
        }
        let rows = &canon.torus.constraints;
        let h = hermite(&canon.torus.matrix(), self.n);
        if h.h.iter().zip(&h.pivots).all(|(r, &p)| r[p] == BigInt::from(1)) {
            return vec![echelon_parametrization(self.n, rows, &h.pivots)];
        }
        smith_components(self.n, rows)
    }

    /// The parametrization of an irreducible torus.
    pub fn parametrize(&self) -> Result<TorusParametrization, TorusError> {
        let mut comps = self.components();
        match comps.len() {
            0 => Err(TorusError::Empty),
            1 => Ok(comps.pop().unwrap()),
            c => Err(TorusError::Reducible(c)),
        }
    }

    /// `true` for the single point `(1, .., 1)`.
    pub fn is_trivial_character(&self) -> bool {
        let comps = self.components();
        comps.len() == 1 && comps[0].nparams == 0 && comps[0].coeffs.iter().all(|r| r.is_one())
    }

    /// Membership test for a point given by roots of unity.
    pub fn contains_point(&self, point: &[Root]) -> bool {
        self.constraints.iter().all(|c| {
            let v = c.exps.iter().zip(point).fold(Root::ONE, |acc, (&e, r)| acc.add(r.scale(e)));
            v == c.value
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("torus {n}\n"));
        }
        for c in &self.constraints {
            out.push_str(&c.render());
            out.push('\n');
        }
        out
    }
}

fn echelon_parametrization(n: usize, rows: &[Constraint], pivots: &[usize]) -> TorusParametrization {
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let d = free.len();
    let mut coeffs = vec![Root::ONE; n];
    let mut exps = vec![vec![0i64; d]; n];
    for (s, &f) in free.iter().enumerate() {
        exps[f][s] = 1;
    }
    for (row, &p) in rows.iter().zip(pivots) {
        coeffs[p] = row.value;
        for (s, &f) in free.iter().enumerate() {
            exps[p][s] = -row.exps[f];
        }
    }
    TorusParametrization { nparams: d, coeffs, exps }
}

fn smith_components(n: usize, rows: &[Constraint]) -> Vec<TorusParametrization> {
    let a = to_big(&rows.iter().map(|c| c.exps.clone()).collect::<Vec<_>>());
    let s = smith(&a, n);
    let r = s.rank();
    // u q, with q the constraint values as fractions over a common denominator
    let den: i64 = rows.iter().fold(1, |acc, c| acc.lcm(&c.value.den));
    let q: Vec<BigInt> = rows.iter().map(|c| BigInt::from(c.value.num * (den / c.value.den))).collect();
    let uq: Vec<BigInt> = s.u.iter().map(|urow| urow.iter().zip(&q).map(|(a, b)| a * b).sum()).collect();
    // every choice phi_i = (uq_i / den + j) / d_i
    let mut choices: Vec<Vec<Root>> = Vec::new();
    for i in 0..r {
        let d = s.d[i].to_i64().expect("small");
        let mut opts = Vec::new();
        for j in 0..d {
            let num = &uq[i] + BigInt::from(j * den);
            opts.push(Root::from_big(&num, &BigInt::from(den * d)));
        }
        choices.push(opts);
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; r];
    loop {
        let phi: Vec<Root> = (0..r).map(|i| choices[i][idx[i]]).collect();
        let mut coeffs = Vec::with_capacity(n);
        let mut exps = Vec::with_capacity(n);
        for m in 0..n {
            let c = (0..r).fold(Root::ONE, |acc, i| acc.add(phi[i].scale(small(&s.v[m][i]))));
            coeffs.push(c);
            exps.push((r..n).map(|i| small(&s.v[m][i])).collect());
        }
        out.push(TorusParametrization { nparams: n - r, coeffs, exps });
        // odometer
        let mut pos = 0;
        loop {
            if pos == r {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// `x_m = coeffs[m] * prod_j s_j^exps[m][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusParametrization {
    pub nparams: usize,
    pub coeffs: Vec<Root>,
    pub exps: Vec<Vec<i64>>,
}

impl TorusParametrization {
    pub fn identity(n: usize) -> Self {
        TorusParametrization {
            nparams: n,
            coeffs: vec![Root::ONE; n],
            exps: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    /// Image of an ambient monomial: a root and a monomial in the parameters.
    pub fn image(&self, m: &Monomial) -> (Root, Monomial) {
        let mut root = Root::ONE;
        let mut e = vec![0i32; self.nparams];
        for (i, &a) in m.exps().iter().enumerate() {
            if a == 0 {
                continue;
            }
            root = root.add(self.coeffs[i].scale(a as i64));
            for (j, x) in e.iter_mut().enumerate() {
                *x += (a as i64 * self.exps[i][j]) as i32;
            }
        }
        (root, Monomial(e))
    }

    /// Least common order of the roots this parametrization can produce.
    pub fn conductor(&self) -> i64 {
        self.coeffs.iter().fold(1, |acc, r| acc.lcm(&r.order()))
    }

    /// Substitutes into a polynomial over a ring containing the roots.
    pub fn apply<C: Coeff>(&self, p: &LaurentPoly, root: impl Fn(Root) -> C) -> Laurent<C> {
        p.substitute_monomials(self.nparams, bigint_to::<C>, |m| {
            let (r, mm) = self.image(m);
            (root(r), mm)
        })
    }

    pub fn render(&self) -> String {
        let names = |j: usize| format!("s{}", j + 1);
        let parts: Vec<String> = (0..self.arity())
            .map(|i| {
                let m = Monomial(self.exps[i].iter().map(|&e| e as i32).collect());
                let mono = m.render(&names);
                let v = match (self.coeffs[i].as_sign(), m.is_one()) {
                    (Some(1), _) => mono,
                    (Some(_), true) => "-1".to_string(),
                    (Some(_), false) => format!("-{mono}"),
                    (None, true) => self.coeffs[i].to_string(),
                    (None, false) => format!("{}*{mono}", self.coeffs[i]),
                };
                format!("t{i} -> {v}")
            })
            .collect();
        parts.join(", ")
    }
}

fn bigint_to<C: Coeff>(c: &BigInt) -> C {
    match c.to_i64() {
        Some(v) => C::from_int(v),
        None => {
            // split into base-2^32 digits
            let (sign, digits) = c.to_u32_digits();
            let base = C::from_int(1 << 32);
            let mut acc = C::zero();
            for d in digits.iter().rev() {
                acc = acc * base.clone() + C::from_int(*d as i64);
            }
            if sign == num_bigint::Sign::Minus {
                -acc
            } else {
                acc
            }
        }
    }
}

/// Exact image of `p` on the parametrized torus, as a fraction.
pub fn substitute(p: &LaurentPoly, point: &TorusParametrization) -> Result<RatFunc<CycloNumber>, TorusError> {
    if p.nvars() != point.arity() {
        return Err(TorusError::Arity { expected: point.arity(), got: p.nvars() });
    }
    let img = point.apply(p, Root::to_cyclo);
    let d = point.nparams;
    let mut shift = vec![0i32; d];
    for (m, _) in img.terms() {
        for (j, &e) in m.exps().iter().enumerate() {
            shift[j] = shift[j].min(e);
        }
    }
    let shift = Monomial(shift.iter().map(|e| -e).collect());
    let num = img.mul_monomial(&shift, &CycloNumber::from_int(1));
    Ok(RatFunc::new(num, Laurent::monomial(shift)))
}

/// Intersection, canonicalized.
pub fn torus_intersect(a: &TorsionTorus, b: &TorsionTorus) -> Result<TorsionTorus, TorusError> {
    if a.n != b.n {
        return Err(TorusError::Arity { expected: a.n, got: b.n });
    }
    let mut cs = a.constraints.clone();
    cs.extend(b.constraints.iter().cloned());
    let mut t = TorsionTorus { n: a.n, constraints: cs, name: None };
    if let (Some(x), Some(y)) = (&a.name, &b.name) {
        t.name = Some(format!("{x}&{y}"));
    }
    Ok(t.canonicalize().torus)
}

/// The tori `x^a = zeta_l^j`, `j = 1..l-1`: the zero set of `p_l(x^a)`.
pub fn solve_pl_constraint(l: u32, a: &[i64], n: usize) -> Result<Vec<TorsionTorus>, TorusError> {
    if a.len() != n {
        return Err(TorusError::Arity { expected: n, got: a.len() });
    }
    Ok((1..l as i64)
        .map(|j| TorsionTorus { n, constraints: vec![Constraint::new(a.to_vec(), Root::zeta(l as i64, j))], name: None })
        .collect())
}

/// Parses one constraint line `t0*t1^-1 = zeta(3,1)`.
pub fn parse_constraint(line: &str, n: usize) -> Result<Constraint, String> {
    let (lhs, rhs) = line.split_once('=').ok_or("expected '='")?;
    let mut exps = vec![0i64; n];
    let lhs = lhs.trim();
    if lhs != "1" {
        for factor in lhs.split('*') {
            let factor = factor.trim();
            let (var, e) = match factor.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim().parse::<i64>().map_err(|_| format!("bad exponent in {factor:?}"))?),
                None => (factor, 1),
            };
            let idx: usize = var
                .strip_prefix('t')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| format!("bad variable {var:?}"))?;
            if idx >= n {
                return Err(format!("variable t{idx} out of range (arity {n})"));
            }
            exps[idx] += e;
        }
    }
    let rhs = rhs.trim();
    let value = match rhs {
        "1" => Root::ONE,
        "-1" => Root::MINUS_ONE,
        _ => {
            let inner = rhs
                .strip_prefix("zeta(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| format!("bad value {rhs:?}"))?;
            let (a, b) = inner.split_once(',').ok_or("expected zeta(N,j)")?;
            let nn: i64 = a.trim().parse().map_err(|_| "bad conductor")?;
            let j: i64 = b.trim().parse().map_err(|_| "bad exponent")?;
            if nn < 1 {
                return Err("conductor must be positive".into());
            }
            Root::zeta(nn, j)
        }
    };
    Ok(Constraint::new(exps, value))
}

/// Parses a torus file: optional `torus <name>` headers, one constraint per
/// line, `#` comments.
pub fn parse_tori(text: &str, n: usize) -> Result<Vec<TorsionTorus>, TorusError> {
    let mut out: Vec<TorsionTorus> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix("torus") {
            let name = name.trim();
            let name = if name.is_empty() { format!("T{}", out.len() + 1) } else { name.to_string() };
            out.push(TorsionTorus::full(n).named(&name));
            continue;
        }
        if out.is_empty() {
            out.push(TorsionTorus::full(n).named("T1"));
        }
        let c = parse_constraint(line, n).map_err(|msg| TorusError::Parse { line: ln + 1, msg })?;
        out.last_mut().unwrap().constraints.push(c);
    }
    Ok(out)
}

pub fn render_tori(tori: &[TorsionTorus]) -> String {
    tori.iter()
        .enumerate()
        .map(|(i, t)| {
            let mut t = t.clone();
            if t.name.is_none() {
                t.name = Some(format!("T{}", i + 1));
            }
            t.render()
        })
        .collect()
}
