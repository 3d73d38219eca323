//! Machine-readable decision records and their re-verification.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use artinqp::charvar::{ObstructionReport, ObstructionWitness, PairReport, TorusReport};
use artinqp::graph::LabeledGraph;
use artinqp::qpdecide::{Embedding, Verdict};

pub const FORMAT: &str = "artinqp-certificate/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, u32)>,
}

impl GraphRecord {
    pub fn of(g: &LabeledGraph) -> Self {
        GraphRecord {
            vertices: g.vertices().to_vec(),
            edges: g.edges().map(|(a, b, l)| (a.to_string(), b.to_string(), l)).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<LabeledGraph, String> {
        let es: Vec<(&str, &str, u64)> = self.edges.iter().map(|(a, b, l)| (a.as_str(), b.as_str(), *l as u64)).collect();
        let vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        LabeledGraph::new(&vs, &es).map_err(|e| e.to_string())
    }
}

/// SHA-256 of the canonical graph text.
pub fn graph_digest(g: &LabeledGraph) -> String {
    hex::encode(Sha256::digest(g.to_string().as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub kind: String,
    pub description: String,
    pub embedding: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusText {
    pub name: String,
    pub constraints: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub u: String,
    pub k: u32,
    pub variables: Vec<String>,
    pub tori1: Vec<TorusText>,
    pub tori2: Vec<TorusText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusRecord {
    pub name: String,
    pub nonempty: bool,
    pub dim: usize,
    pub components: usize,
    pub rank: usize,
    pub corank: usize,
    pub depth: usize,
    pub trivial_character: bool,
}

impl From<&TorusReport> for TorusRecord {
    fn from(t: &TorusReport) -> Self {
        TorusRecord {
            name: t.name.clone(),
            nonempty: t.nonempty,
            dim: t.dim,
            components: t.components,
            rank: t.rank,
            corank: t.corank,
            depth: t.depth,
            trivial_character: t.trivial_character,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub first: usize,
    pub second: usize,
    pub torus: TorusRecord,
    pub depth_jump: bool,
}

impl From<&PairReport> for PairRecord {
    fn from(p: &PairReport) -> Self {
        PairRecord { first: p.first, second: p.second, torus: (&p.torus).into(), depth_jump: p.c3a }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub rows: usize,
    pub cols: usize,
    pub generic_rank: usize,
    pub generic_depth: usize,
    pub tori1: Vec<TorusRecord>,
    pub tori2: Vec<TorusRecord>,
    pub pairs: Vec<PairRecord>,
    pub c1: bool,
    pub c2: bool,
    pub c3a: bool,
    pub c3b: bool,
    pub passed: bool,
}

impl From<&ObstructionReport> for VerificationRecord {
    fn from(r: &ObstructionReport) -> Self {
        VerificationRecord {
            rows: r.rows,
            cols: r.cols,
            generic_rank: r.generic_rank,
            generic_depth: r.generic_depth,
            tori1: r.tori1.iter().map(Into::into).collect(),
            tori2: r.tori2.iter().map(Into::into).collect(),
            pairs: r.pairs.iter().map(Into::into).collect(),
            c1: r.c1,
            c2: r.c2,
            c3a: r.c3a,
            c3b: r.c3b,
            passed: r.passed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub tool_version: String,
    pub graph_sha256: String,
    pub graph: GraphRecord,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationRecord>,
}

fn pattern_record(p: &artinqp::qpdecide::PatternKind, e: &Embedding) -> PatternRecord {
    PatternRecord { kind: p.tag(), description: p.to_string(), embedding: e.0.clone() }
}

pub fn witness_record(w: &ObstructionWitness, variables: Vec<String>) -> WitnessRecord {
    let text = |list: &[artinqp::charvar::TorsionTorus], tag: &str| -> Vec<TorusText> {
        list.iter()
            .enumerate()
            .map(|(i, t)| TorusText {
                name: t.name.clone().unwrap_or_else(|| format!("{tag}.{i}")),
                constraints: t.constraints().iter().map(|c| c.render()).collect(),
            })
            .collect()
    };
    WitnessRecord { u: w.u.clone(), k: w.k, variables, tori1: text(&w.tori1, "I1"), tori2: text(&w.tori2, "I2") }
}

pub fn build(g: &LabeledGraph, v: &Verdict, report: Option<&ObstructionReport>) -> Certificate {
    let mut c = Certificate {
        format: FORMAT.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        graph_sha256: graph_digest(g),
        graph: GraphRecord::of(g),
        verdict: if v.is_qp() { "QP".into() } else { "NotQP".into() },
        factors: None,
        pattern: None,
        witness: None,
        verification: None,
    };
    match v {
        Verdict::Qp { factors } => c.factors = Some(factors.iter().map(|f| f.to_string()).collect()),
        Verdict::NotQp { pattern, embedding, witness } => {
            c.pattern = Some(pattern_record(pattern, embedding));
            if let (Some(w), Some(r)) = (witness, report) {
                c.witness = Some(witness_record(w, r.var_names.clone()));
                c.verification = Some(r.into());
            }
        }
    }
    c
}
