//! Presentations of the co-cyclic subgroup `A_{G,u,k}`, the kernel of the
//! map to `Z/k` sending `u` to 1 and every other vertex to 0.
//!
//! Generators are `u.bar = u^k`, the label-2 neighbours `v` of `u`
//! (conjugation by `u` fixes them), and copies `w.j = u^j w u^-j` of every
//! other vertex `w`, `j` in `0..k`.

use super::word::{Gen, Word};
use super::{artin_sides, braid, Presentation, Relator, RelatorRole, RelatorTag};
use crate::error::PresentationError;
use crate::graph::LabeledGraph;

/// The vertex partition behind a co-cyclic presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocyclicLayout {
    pub u: String,
    pub k: u32,
    /// Label-2 neighbours of `u`, sorted.
    pub v2: Vec<String>,
    /// All other vertices except `u`, sorted.
    pub w: Vec<String>,
}

impl CocyclicLayout {
    pub fn new(g: &LabeledGraph, u: &str, k: u32) -> Result<Self, PresentationError> {
        if k < 2 {
            return Err(PresentationError::BadIndex { min: 2, got: k });
        }
        g.index_of(u).ok_or_else(|| PresentationError::UnknownVertex(u.to_string()))?;
        let mut v2 = Vec::new();
        let mut w = Vec::new();
        for x in g.vertices() {
            if x == u {
                continue;
            }
            if g.label(u, x) == Some(2) {
                v2.push(x.clone());
            } else {
                w.push(x.clone());
            }
        }
        Ok(CocyclicLayout { u: u.to_string(), k, v2, w })
    }

    /// Column order: copies grouped by coset, then `v2`, then `u.bar`.
    pub fn generators(&self) -> Vec<Gen> {
        let mut gens = Vec::new();
        for j in 0..self.k {
            for w in &self.w {
                gens.push(Gen::copy(w, j));
            }
        }
        gens.extend(self.v2.iter().map(|v| Gen::vertex(v)));
        gens.push(Gen::bar(&self.u));
        gens
    }

    pub fn is_v2(&self, x: &str) -> bool {
        self.v2.iter().any(|v| v == x)
    }
}

/// `eps` for bracket relator `i` at `ell = c k + r`: 1 iff `r > 0` and
/// `i >= k - r`.
pub fn eps_for(ell: u32, k: u32, i: u32) -> u32 {
    let r = ell % k;
    u32::from(r > 0 && i >= k - r)
}

/// Length `c (k + 1) + r + eps` of a bracket word.
pub fn bracket_length(ell: u32, k: u32, eps: u32) -> usize {
    let (c, r) = (ell / k, ell % k);
    (c * (k + 1) + r + eps) as usize
}

/// The bracket word of length `c(k+1) + r + eps` read cyclically along
/// `x_0, .., x_{k-1}, y` starting at position `i`.
///
/// `i` ranges over `0..=k`; `i = k` starts at `y`, which is where the
/// successor of the last copy begins.
pub fn bracket_word(x: &[Gen], y: &Gen, i: usize, eps: u32, l: u32) -> Result<Word, PresentationError> {
    let k = x.len();
    if k < 1 {
        return Err(PresentationError::BadIndex { min: 1, got: 0 });
    }
    if i > k {
        return Err(PresentationError::BadIndex { min: 0, got: i as u32 });
    }
    if l < 1 {
        return Err(PresentationError::BadExponent(l as i64));
    }
    let len = bracket_length(l, k as u32, eps);
    let letters = (0..len).map(|s| {
        let p = (i + s) % (k + 1);
        let g = if p == k { y.clone() } else { x[p].clone() };
        (g, 1)
    });
    Ok(Word::new(letters))
}

/// The standard presentation of the co-cyclic subgroup.
///
/// Relators are ordered: braids among `v2`; then, coset by coset, braids
/// between `v2` and copies and among copies; then the commutators of `v2`
/// with `u.bar`; then the bracket relators per neighbour `w` and `i`.
pub fn cocyclic_presentation(g: &LabeledGraph, u: &str, k: u32) -> Result<Presentation, PresentationError> {
    let lay = CocyclicLayout::new(g, u, k)?;
    let mut rels = Vec::new();
    let a = RelatorTag::CocyclicA;
    let edges: Vec<(&str, &str, u32)> = g.edges().filter(|(x, y, _)| *x != u && *y != u).collect();
    for &(x, y, m) in &edges {
        if lay.is_v2(x) && lay.is_v2(y) {
            rels.push(braid(&Gen::vertex(x), &Gen::vertex(y), m / 2, a, RelatorRole::R2 { v: x.into(), v2: y.into() }));
        }
    }
    for j in 0..k {
        for &(x, y, m) in &edges {
            match (lay.is_v2(x), lay.is_v2(y)) {
                (true, false) => rels.push(braid(
                    &Gen::vertex(x),
                    &Gen::copy(y, j),
                    m / 2,
                    a,
                    RelatorRole::R3 { v: x.into(), w: y.into(), j },
                )),
                (false, true) => rels.push(braid(
                    &Gen::copy(x, j),
                    &Gen::vertex(y),
                    m / 2,
                    a,
                    RelatorRole::R3 { v: y.into(), w: x.into(), j },
                )),
                _ => {}
            }
        }
        for &(x, y, m) in &edges {
            if !lay.is_v2(x) && !lay.is_v2(y) {
                rels.push(braid(
                    &Gen::copy(x, j),
                    &Gen::copy(y, j),
                    m / 2,
                    a,
                    RelatorRole::R4 { w: x.into(), w2: y.into(), j },
                ));
            }
        }
    }
    let ubar = Gen::bar(u);
    for v in &lay.v2 {
        rels.push(braid(&Gen::vertex(v), &ubar, 1, a, RelatorRole::R1 { v: v.clone() }));
    }
    for w in &lay.w {
        let Some(m) = g.label(u, w) else { continue };
        let ell = m / 2;
        let copies: Vec<Gen> = (0..k).map(|j| Gen::copy(w, j)).collect();
        for i in 0..k {
            let eps = eps_for(ell, k, i);
            let lhs = bracket_word(&copies, &ubar, i as usize, eps, ell)?;
            let rhs = bracket_word(&copies, &ubar, i as usize + 1, eps, ell)?;
            rels.push(Relator::new(lhs, rhs, RelatorTag::CocyclicB, RelatorRole::B { w: w.clone(), i }));
        }
    }
    Presentation::new(lay.generators(), rels)
}

/// Rewrites `word`, read from coset `start`, into Schreier generators for
/// the section `j -> u^j`.
fn rewrite(word: &Word, u: &str, k: u32, start: u32) -> Word {
    let mut coset = start;
    let mut out = Vec::new();
    for (g, s) in word.letters() {
        let Gen::Vertex(x) = g else { unreachable!("Artin words use vertex generators") };
        if x == u {
            if s > 0 {
                if coset == k - 1 {
                    out.push((Gen::bar(u), 1));
                }
                coset = (coset + 1) % k;
            } else {
                if coset == 0 {
                    out.push((Gen::bar(u), -1));
                }
                coset = (coset + k - 1) % k;
            }
        } else {
            out.push((Gen::copy(x, coset), s));
        }
    }
    Word::new(out)
}

/// The unsimplified Reidemeister-Schreier presentation: a copy of every
/// vertex other than `u` in every coset, and every edge relator rewritten
/// from every coset.
pub fn rs_presentation_generic(g: &LabeledGraph, u: &str, k: u32) -> Result<Presentation, PresentationError> {
    CocyclicLayout::new(g, u, k)?;
    let mut gens = Vec::new();
    for j in 0..k {
        for x in g.vertices().iter().filter(|x| *x != u) {
            gens.push(Gen::copy(x, j));
        }
    }
    gens.push(Gen::bar(u));
    let mut rels = Vec::new();
    for (x, y, m) in g.edges() {
        let (lhs, rhs) = artin_sides(&Gen::vertex(x), &Gen::vertex(y), (m / 2) as i64)?;
        for j in 0..k {
            // rhs is read from the coset where lhs ends, which is `j` again
            let l = rewrite(&lhs, u, k, j);
            let r = rewrite(&rhs, u, k, j);
            rels.push(Relator::new(
                l,
                r,
                RelatorTag::Other,
                RelatorRole::Rewrite { a: x.into(), b: y.into(), coset: j },
            ));
        }
    }
    Presentation::new(gens, rels)
}
