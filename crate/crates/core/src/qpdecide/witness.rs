//! Tabulated witnesses, instantiated in the co-cyclic coordinates of the
//! whole graph. Vertices outside the pattern have all their generators
//! pinned to 1.

use std::collections::BTreeSet;

use super::{Embedding, PatternKind};
use crate::charvar::{Constraint, ObstructionWitness, Root, TorsionTorus};
use crate::error::DecideError;
use crate::graph::LabeledGraph;
use crate::presentation::{abelianize, cocyclic_presentation, Abelianization, CocyclicLayout, Gen};

/// One generator of a proof ideal, as a condition on a monomial.
#[derive(Clone, Debug)]
enum Cond {
    /// The monomial equals 1.
    One(Vec<Gen>),
    /// The monomial equals -1.
    MinusOne(Vec<Gen>),
    /// `p_l` of the monomial vanishes.
    Pl(u32, Vec<Gen>),
}

struct Ctx<'a> {
    ab: Abelianization,
    layout: CocyclicLayout,
    pattern: BTreeSet<&'a str>,
}

impl Ctx<'_> {
    fn exps(&self, gens: &[Gen]) -> Vec<i64> {
        let mut e = vec![0i64; self.ab.nvars()];
        for g in gens {
            let m = self.ab.image(g).unwrap_or_else(|| panic!("generator {g} in the co-cyclic presentation"));
            for (x, &y) in e.iter_mut().zip(m.exps()) {
                *x += y as i64;
            }
        }
        e
    }

    fn pins(&self) -> Vec<Constraint> {
        self.layout
            .generators()
            .into_iter()
            .filter(|g| match g {
                Gen::Vertex(x) | Gen::Copy(x, _) => !self.pattern.contains(x.as_str()),
                Gen::Bar(_) => false,
            })
            .map(|g| Constraint::new(self.exps(&[g]), Root::ONE))
            .filter(|c| c.exps.iter().any(|&e| e != 0))
            .collect()
    }

    fn tori(&self, conds: &[Cond], name: &str) -> Vec<TorsionTorus> {
        let n = self.ab.nvars();
        let mut base = TorsionTorus::full(n);
        for c in self.pins() {
            base.push(c).expect("arity");
        }
        let mut out = vec![base];
        for c in conds {
            let (gens, values) = match c {
                Cond::One(g) => (g, vec![Root::ONE]),
                Cond::MinusOne(g) => (g, vec![Root::MINUS_ONE]),
                Cond::Pl(l, g) => (g, (1..*l as i64).map(|j| Root::zeta(*l as i64, j)).collect()),
            };
            let e = self.exps(gens);
            let mut next = Vec::new();
            for t in &out {
                for v in &values {
                    let mut t = t.clone();
                    t.push(Constraint::new(e.clone(), *v)).expect("arity");
                    next.push(t);
                }
            }
            out = next;
        }
        let many = out.len() > 1;
        out.into_iter()
            .enumerate()
            .map(|(i, t)| if many { t.named(&format!("{name}.{i}")) } else { t.named(name) })
            .collect()
    }
}

fn bar(u: &str) -> Gen {
    Gen::bar(u)
}

fn c(x: &str, j: u32) -> Gen {
    Gen::copy(x, j)
}

/// All copies of `x`: the generators whose product is `tbar_x`.
fn copies(x: &str, k: u32) -> Vec<Gen> {
    (0..k).map(|j| c(x, j)).collect()
}

fn with(mut a: Vec<Gen>, b: Vec<Gen>) -> Vec<Gen> {
    a.extend(b);
    a
}

/// Subgroup vertex, index and the two proof ideals of a pattern.
fn table(p: &PatternKind, e: &Embedding) -> Option<(String, u32, Vec<Cond>, Vec<Cond>)> {
    use Cond::*;
    let one = |g: Gen| One(vec![g]);
    Some(match p {
        PatternKind::NonCompleteStrictlyEven | PatternKind::RightAngledNonJoin => return None,
        PatternKind::Tri1 { r, k, l } => {
            let (u, v, w) = (e.get("u"), e.get("v"), e.get("w"));
            match (*r, *k, *l) {
                (r, _, _) if r >= 4 => {
                    let p = One(with(vec![bar(u)], copies(v, r)));
                    (
                        u.into(),
                        r,
                        vec![p.clone(), one(c(v, 0)), one(c(v, 1)), one(c(w, 0)), one(c(w, 1))],
                        vec![p, one(c(v, 0)), one(c(v, 2)), one(c(w, 0)), one(c(w, 2))],
                    )
                }
                (3, 3, _) => {
                    let common = vec![one(bar(u)), one(c(v, 1)), one(c(v, 2)), one(c(w, 0))];
                    let mut i1 = common.clone();
                    i1.push(one(c(w, 1)));
                    let mut i2 = common;
                    i2.push(one(c(w, 2)));
                    (u.into(), 3, i1, i2)
                }
                (3, 2, 2) => {
                    // the label-6 edge is v-w; the subgroup sits at w, the
                    // vertex of the two 4-edges
                    let (base, a, b) = (w, u, v);
                    let common =
                        vec![One(with(vec![bar(base)], copies(a, 2))), One(with(vec![bar(base)], copies(b, 2)))];
                    let mut i1 = common.clone();
                    i1.push(Pl(3, vec![c(a, 0), c(b, 0)]));
                    let mut i2 = common;
                    i2.push(Pl(3, vec![c(a, 1), c(b, 1)]));
                    (base.into(), 2, i1, i2)
                }
                (3, 2, 1) => {
                    // subgroup at v: u carries copies, w commutes with v
                    let p = |i: u32| MinusOne(vec![Gen::vertex(w), c(u, i)]);
                    let q = One(with(vec![bar(v)], copies(u, 3)));
                    (v.into(), 3, vec![p(0), p(1), q.clone()], vec![p(0), p(2), q])
                }
                _ => return None,
            }
        }
        PatternKind::Tri2T444 => {
            let (u, v, w) = (e.get("u"), e.get("v"), e.get("w"));
            let common = vec![One(with(vec![bar(u)], copies(v, 2))), One(with(vec![bar(u)], copies(w, 2)))];
            let mut i1 = common.clone();
            i1.push(MinusOne(vec![c(v, 0), c(w, 0)]));
            let mut i2 = common;
            i2.push(MinusOne(vec![c(v, 1), c(w, 1)]));
            (u.into(), 2, i1, i2)
        }
        PatternKind::QuadA => {
            let (u, w1, w2, w3) = (e.get("u"), e.get("w1"), e.get("w2"), e.get("w3"));
            (
                u.into(),
                2,
                vec![one(bar(u)), one(c(w1, 1)), one(c(w2, 0)), one(c(w2, 1)), one(c(w3, 0))],
                vec![one(bar(u)), one(c(w1, 0)), one(c(w1, 1)), one(c(w2, 1)), one(c(w3, 0))],
            )
        }
        PatternKind::QuadB => {
            let (u, v, w1, w2) = (e.get("u"), e.get("v"), e.get("w1"), e.get("w2"));
            let tv = Gen::vertex(v);
            (
                u.into(),
                2,
                vec![one(tv.clone()), one(bar(u)), one(c(w1, 1)), one(c(w2, 0))],
                vec![one(bar(u)), one(c(w1, 1)), one(c(w2, 0)), MinusOne(vec![c(w1, 0), tv])],
            )
        }
        PatternKind::QuadC => {
            let (u, v, w1, w2) = (e.get("u"), e.get("v"), e.get("w1"), e.get("w2"));
            let tv = Gen::vertex(v);
            let common = vec![one(bar(u)), one(c(w1, 0)), one(c(w2, 1))];
            let mut i1 = common.clone();
            i1.push(MinusOne(vec![c(w1, 1), tv.clone()]));
            let mut i2 = common;
            i2.push(MinusOne(vec![c(w2, 0), tv]));
            (u.into(), 2, i1, i2)
        }
    })
}

/// The tabulated obstruction for a matched pattern, in the abelianization
/// of the co-cyclic subgroup of the whole graph `g`. `None` for patterns
/// whose non-quasi-projectivity is quoted rather than witnessed.
pub fn witness_for(p: &PatternKind, e: &Embedding, g: &LabeledGraph) -> Result<Option<ObstructionWitness>, DecideError> {
    let Some((u, k, i1, i2)) = table(p, e) else { return Ok(None) };
    let pres = cocyclic_presentation(g, &u, k)?;
    let ab = abelianize(&pres)?;
    let layout = CocyclicLayout::new(g, &u, k)?;
    let ctx = Ctx { ab, layout, pattern: e.vertices().into_iter().collect() };
    Ok(Some(ObstructionWitness { u, k, tori1: ctx.tori(&i1, "I1"), tori2: ctx.tori(&i2, "I2") }))
}
