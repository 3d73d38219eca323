//! Group presentations: Artin presentations, co-cyclic subgroup
//! presentations and abelianization.

mod abelian;
mod cocyclic;
mod word;

use std::collections::BTreeSet;
use std::fmt;

pub use abelian::{abelianize, Abelianization};
pub use cocyclic::{
    bracket_length, bracket_word, cocyclic_presentation, eps_for, rs_presentation_generic, CocyclicLayout,
};
pub use word::{Gen, Word};

use crate::error::PresentationError;
use crate::graph::LabeledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelatorTag {
    ArtinA,
    CocyclicA,
    CocyclicB,
    Other,
}

/// Where a relator comes from; used to lay out Alexander matrix blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelatorRole {
    Edge { a: String, b: String },
    /// `A_1(v, u.bar)` for a label-2 neighbour `v` of the base vertex.
    R1 { v: String },
    /// Braid relator between two label-2 neighbours.
    R2 { v: String, v2: String },
    /// Braid relator between a label-2 neighbour and a coset copy.
    R3 { v: String, w: String, j: u32 },
    /// Braid relator between two copies in the same coset.
    R4 { w: String, w2: String, j: u32 },
    /// Bracket relator `B^i` for an edge from the base vertex to `w`.
    B { w: String, i: u32 },
    /// Unsimplified rewrite of an edge relator from a coset.
    Rewrite { a: String, b: String, coset: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub lhs: Word,
    pub rhs: Word,
    pub tag: RelatorTag,
    pub role: RelatorRole,
    word: Word,
}

impl Relator {
    pub fn new(lhs: Word, rhs: Word, tag: RelatorTag, role: RelatorRole) -> Self {
        let word = lhs.concat(&rhs.inverse());
        Relator { lhs, rhs, tag, role, word }
    }

    /// The relator word `lhs * rhs^-1`, freely reduced.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn label(&self) -> String {
        match &self.role {
            RelatorRole::Edge { a, b } => format!("A({a},{b})"),
            RelatorRole::R1 { v } => format!("R1({v})"),
            RelatorRole::R2 { v, v2 } => format!("R2({v},{v2})"),
            RelatorRole::R3 { v, w, j } => format!("R3({v},{w}.{j})"),
            RelatorRole::R4 { w, w2, j } => format!("R4({w}.{j},{w2}.{j})"),
            RelatorRole::B { w, i } => format!("B{i}({w})"),
            RelatorRole::Rewrite { a, b, coset } => format!("A({a},{b})@{coset}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Gen>,
    relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<Gen>, relators: Vec<Relator>) -> Result<Self, PresentationError> {
        let declared: BTreeSet<&Gen> = generators.iter().collect();
        for r in &relators {
            for g in r.word().generators() {
                if !declared.contains(g) {
                    return Err(PresentationError::UnknownGenerator(g.to_string()));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        writeln!(f, "generators: {}", gens.join(", "))?;
        writeln!(f, "relators: {}", self.relators.len())?;
        for r in &self.relators {
            writeln!(f, "{} = {}    # {}", r.lhs, r.rhs, r.label())?;
        }
        Ok(())
    }
}

/// `(ab)^ell (ba)^-ell`.
pub fn artin_relator(a: &Gen, b: &Gen, ell: i64) -> Result<Word, PresentationError> {
    let (lhs, rhs) = artin_sides(a, b, ell)?;
    Ok(lhs.concat(&rhs.inverse()))
}

pub(crate) fn artin_sides(a: &Gen, b: &Gen, ell: i64) -> Result<(Word, Word), PresentationError> {
    if ell < 1 {
        return Err(PresentationError::BadExponent(ell));
    }
    if a == b {
        return Err(PresentationError::SameGenerator(a.to_string()));
    }
    let ab = Word::new([(a.clone(), 1), (b.clone(), 1)]);
    let ba = Word::new([(b.clone(), 1), (a.clone(), 1)]);
    Ok((ab.pow(ell as u32), ba.pow(ell as u32)))
}

pub(crate) fn braid(a: &Gen, b: &Gen, ell: u32, tag: RelatorTag, role: RelatorRole) -> Relator {
    let (lhs, rhs) = artin_sides(a, b, ell as i64).expect("distinct generators, positive exponent");
    Relator::new(lhs, rhs, tag, role)
}

/// One generator per vertex and one braid relator per edge.
pub fn artin_presentation(g: &LabeledGraph) -> Presentation {
    let gens = g.vertices().iter().map(|v| Gen::vertex(v)).collect();
    let rels = g
        .edges()
        .map(|(a, b, m)| {
            braid(
                &Gen::vertex(a),
                &Gen::vertex(b),
                m / 2,
                RelatorTag::ArtinA,
                RelatorRole::Edge { a: a.into(), b: b.into() },
            )
        })
        .collect();
    Presentation::new(gens, rels).expect("edge endpoints are vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn artin_relators() {
        let (a, b) = (Gen::vertex("a"), Gen::vertex("b"));
        assert_eq!(artin_relator(&a, &b, 1).unwrap().to_string(), "a*b*a^-1*b^-1");
        assert_eq!(artin_relator(&a, &b, 2).unwrap().to_string(), "a*b*a*b*a^-1*b^-1*a^-1*b^-1");
        assert!(artin_relator(&a, &a, 1).is_err());
        assert!(artin_relator(&a, &b, 0).is_err());
    }

    #[test]
    fn artin_presentations() {
        let k2 = LabeledGraph::kbar(&["a", "b"]).unwrap();
        let p = artin_presentation(&k2);
        assert_eq!((p.generators().len(), p.relators().len()), (2, 0));

        let t = LabeledGraph::triangle(["a", "b", "c"], [4, 2, 4]).unwrap();
        let p = artin_presentation(&t);
        let lines: Vec<String> = p.relators().iter().map(|r| format!("{}={}", r.lhs, r.rhs)).collect();
        assert_eq!(lines, vec!["a*b*a*b=b*a*b*a", "a*c*a*c=c*a*c*a", "b*c=c*b"]);
    }
}
