//! Quasi-projectivity of even Artin groups: factor classification, the
//! forbidden-pattern scan and the obstruction witnesses behind it.

mod scan;
mod witness;

use std::fmt;

pub use scan::forbidden_pattern_scan;
pub use witness::witness_for;

use crate::charvar::{verify_obstruction, ObstructionReport, ObstructionWitness};
use crate::error::DecideError;
use crate::graph::{classify_factor, join_decompose, FactorKind, LabeledGraph};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    /// A non-complete graph with some label at least 4.
    NonCompleteStrictlyEven,
    /// A right-angled factor that is not a join of discrete graphs.
    RightAngledNonJoin,
    /// `T(2r, 2k, 2l)` with `r >= k >= l`, `r >= 3`, `k >= 2`.
    Tri1 { r: u32, k: u32, l: u32 },
    Tri2T444,
    QuadA,
    QuadB,
    QuadC,
}

impl PatternKind {
    /// The vertex roles of the pattern, in embedding order.
    pub fn roles(&self) -> &'static [&'static str] {
        match self {
            PatternKind::NonCompleteStrictlyEven | PatternKind::RightAngledNonJoin => &["x", "y", "z"],
            PatternKind::Tri1 { .. } | PatternKind::Tri2T444 => &["u", "v", "w"],
            PatternKind::QuadA => &["u", "w1", "w2", "w3"],
            PatternKind::QuadB | PatternKind::QuadC => &["u", "v", "w1", "w2"],
        }
    }

    /// Stable machine tag.
    pub fn tag(&self) -> String {
        match self {
            PatternKind::NonCompleteStrictlyEven => "non-complete-strictly-even".into(),
            PatternKind::RightAngledNonJoin => "right-angled-non-join".into(),
            PatternKind::Tri1 { r, k, l } => format!("tri1-{r}-{k}-{l}"),
            PatternKind::Tri2T444 => "tri2-444".into(),
            PatternKind::QuadA => "quad-a".into(),
            PatternKind::QuadB => "quad-b".into(),
            PatternKind::QuadC => "quad-c".into(),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::NonCompleteStrictlyEven => write!(f, "non-complete strictly even"),
            PatternKind::RightAngledNonJoin => write!(f, "right-angled, not a join"),
            PatternKind::Tri1 { r, k, l } => write!(f, "T({},{},{})", 2 * r, 2 * k, 2 * l),
            PatternKind::Tri2T444 => write!(f, "T(4,4,4)"),
            PatternKind::QuadA => write!(f, "4-vertex star 4,4,4 over T(2,2,2)"),
            PatternKind::QuadB => write!(f, "4-vertex path 4,4,4"),
            PatternKind::QuadC => write!(f, "4-vertex cycle 4,4,4,4"),
        }
    }
}

/// Pattern role to graph vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding(pub Vec<(String, String)>);

impl Embedding {
    pub fn get(&self, role: &str) -> &str {
        self.0.iter().find(|(r, _)| r == role).map(|(_, v)| v.as_str()).expect("known role")
    }

    pub fn vertices(&self) -> Vec<&str> {
        self.0.iter().map(|(_, v)| v.as_str()).collect()
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(r, v)| format!("{r}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Qp { factors: Vec<FactorKind> },
    NotQp { pattern: PatternKind, embedding: Embedding, witness: Option<ObstructionWitness> },
}

impl Verdict {
    pub fn is_qp(&self) -> bool {
        matches!(self, Verdict::Qp { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Qp { factors } => {
                let parts: Vec<String> = factors.iter().map(|k| k.to_string()).collect();
                write!(f, "QP: {}", parts.join(" *₂ "))
            }
            Verdict::NotQp { pattern, embedding, .. } => write!(f, "NOT QP ({pattern} pattern at {embedding})"),
        }
    }
}

pub fn decide_qp(g: &LabeledGraph) -> Result<Verdict, DecideError> {
    let factors = join_decompose(g);
    let kinds: Vec<FactorKind> = factors.iter().map(classify_factor).collect();
    match kinds.iter().position(|k| !k.is_qp()) {
        None => Ok(Verdict::Qp { factors: kinds }),
        Some(i) => {
            let (pattern, embedding) = forbidden_pattern_scan(&factors[i])?;
            let witness = witness_for(&pattern, &embedding, g)?;
            Ok(Verdict::NotQp { pattern, embedding, witness })
        }
    }
}

/// Decides and, for a NotQP verdict with a witness, checks the witness.
/// A failed check is an error: it means the witness table is wrong.
pub fn decide_and_verify(g: &LabeledGraph) -> Result<(Verdict, Option<ObstructionReport>), DecideError> {
    let v = decide_qp(g)?;
    let report = match &v {
        Verdict::NotQp { witness: Some(w), .. } => {
            let r = verify_obstruction(g, w)?;
            if !r.passed() {
                return Err(DecideError::VerificationFailed(r.summary()));
            }
            Some(r)
        }
        _ => None,
    };
    Ok((v, report))
}
