use std::fmt::Write as _;

use serde::Serialize;

use artinqp::alexander::{artin_matrix, cocyclic_matrix, AlexMatrix};
use artinqp::charvar::{
    depth_from_rank, generic_rank, parse_constraint, parse_tori, rank_on_torus, verify_obstruction,
    ObstructionReport, ObstructionWitness, TorsionTorus,
};
use artinqp::error::{DecideError, TorusError};
use artinqp::graph::LabeledGraph;
use artinqp::presentation::{artin_presentation, cocyclic_presentation};
use artinqp::qpdecide::{decide_qp, Verdict};

use crate::certificate::{self, graph_digest, Certificate, VerificationRecord};
use crate::graphfile::parse_graph;
use crate::{CliError, Outcome, EXIT_NOT_QP, EXIT_QP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocyclic {
    pub u: String,
    pub k: u32,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn matrix(g: &LabeledGraph, cc: Option<&Cocyclic>) -> Result<AlexMatrix, CliError> {
    match cc {
        None => Ok(artin_matrix(g)),
        Some(c) => cocyclic_matrix(g, &c.u, c.k).map_err(usage),
    }
}

pub fn present(graph: &str, cc: Option<&Cocyclic>) -> Result<Outcome, CliError> {
    let g = parse_graph(graph)?;
    let p = match cc {
        None => artin_presentation(&g),
        Some(c) => cocyclic_presentation(&g, &c.u, c.k).map_err(usage)?,
    };
    Ok(Outcome::ok(p.to_string()))
}

#[derive(Serialize)]
struct BlockJson {
    name: String,
    rows: [usize; 2],
    cols: Vec<String>,
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    variables: Vec<String>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<Vec<String>>,
    blocks: Vec<BlockJson>,
}

pub fn matrix_json(m: &AlexMatrix) -> String {
    let j = MatrixJson {
        rows: m.nrows(),
        cols: m.ncols(),
        variables: m.var_names.clone(),
        row_labels: m.rows.iter().map(|r| r.label.clone()).collect(),
        col_labels: m.cols.iter().map(|c| c.to_string()).collect(),
        entries: m.entry_strings(),
        blocks: m
            .blocks
            .iter()
            .map(|b| BlockJson {
                name: b.name.clone(),
                rows: [b.rows.start, b.rows.end],
                cols: b.cols.iter().map(|&c| m.cols[c].to_string()).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable") + "\n"
}

pub fn alexander(graph: &str, cc: Option<&Cocyclic>, json: bool) -> Result<Outcome, CliError> {
    let g = parse_graph(graph)?;
    let m = matrix(&g, cc)?;
    Ok(Outcome::ok(if json { matrix_json(&m) } else { m.render() }))
}

pub fn rank(graph: &str, cc: Option<&Cocyclic>, tori: Option<&str>) -> Result<Outcome, CliError> {
    let g = parse_graph(graph)?;
    let m = matrix(&g, cc)?;
    let mut out = String::new();
    let _ = writeln!(out, "matrix {} x {}", m.nrows(), m.ncols());
    let legend: Vec<String> = m.var_names.iter().enumerate().map(|(i, v)| format!("t{i}={v}")).collect();
    let _ = writeln!(out, "variables: {}", legend.join(" "));
    let r = generic_rank(&m);
    let _ = writeln!(out, "generic rank {r} corank {} depth {}", m.ncols() - r, depth_from_rank(&m, r));
    if let Some(text) = tori {
        let list = parse_tori(text, m.nvars()).map_err(|e| match e {
            TorusError::Parse { line, msg } => CliError::Input { line, msg, detail: String::new() },
            other => usage(other),
        })?;
        for t in &list {
            let name = t.name.clone().unwrap_or_default();
            let canon = t.canonicalize();
            if !canon.nonempty {
                let _ = writeln!(out, "torus {name}: empty torus");
                continue;
            }
            let r = rank_on_torus(&m, t).map_err(usage)?;
            let _ = writeln!(
                out,
                "torus {name}: dim {} components {} rank {r} corank {} depth {}{}",
                canon.dim,
                t.components().len(),
                m.ncols() - r,
                depth_from_rank(&m, r),
                if t.is_trivial_character() { " (trivial character)" } else { "" }
            );
        }
    }
    Ok(Outcome::ok(out))
}

/// One-line summary of the strongest pair in a passing report.
pub fn headline(r: &ObstructionReport) -> String {
    let good: Vec<_> = r.pairs.iter().filter(|p| p.torus.nonempty && p.torus.dim >= 1).collect();
    let best = good.iter().find(|p| p.c3a).or_else(|| good.first());
    match best {
        Some(p) => format!(
            "witness verified: coranks {},{} → {}; dim(∩)={}",
            r.tori1[p.first].corank, r.tori2[p.second].corank, p.torus.corank, p.torus.dim
        ),
        None => "witness failed: no intersection of positive dimension".into(),
    }
}

fn internal(e: DecideError) -> CliError {
    match e {
        DecideError::Presentation(p) => usage(p),
        other => CliError::Internal(other.to_string()),
    }
}

fn verified(g: &LabeledGraph, v: &Verdict) -> Result<Option<ObstructionReport>, CliError> {
    let Verdict::NotQp { witness: Some(w), .. } = v else { return Ok(None) };
    let r = verify_obstruction(g, w).map_err(|e| CliError::Internal(e.to_string()))?;
    if !r.passed() {
        return Err(CliError::Internal(format!("obstruction witness failed verification:\n{}", r.summary())));
    }
    Ok(Some(r))
}

pub fn decide(graph: &str, verify: bool, json: bool) -> Result<Outcome, CliError> {
    let g = parse_graph(graph)?;
    let v = decide_qp(&g).map_err(internal)?;
    let code = if v.is_qp() { EXIT_QP } else { EXIT_NOT_QP };
    let report = if verify || json { verified(&g, &v)? } else { None };
    if json {
        let c = certificate::build(&g, &v, report.as_ref());
        return Ok(Outcome { stdout: serde_json::to_string_pretty(&c).expect("serializable") + "\n", code });
    }
    let mut out = format!("{v}\n");
    if verify {
        match (&v, &report) {
            (_, Some(r)) => {
                out.push_str(&r.summary());
                out.push_str(&headline(r));
                out.push('\n');
            }
            (Verdict::NotQp { .. }, None) => {
                out.push_str("no witness tabulated for this pattern; the verdict rests on the classification\n")
            }
            _ => {}
        }
    }
    Ok(Outcome { stdout: out, code })
}

fn rebuild_witness(c: &Certificate, nvars: usize) -> Result<Option<ObstructionWitness>, String> {
    let Some(w) = &c.witness else { return Ok(None) };
    let tori = |list: &[certificate::TorusText]| -> Result<Vec<TorsionTorus>, String> {
        list.iter()
            .map(|t| {
                let mut torus = TorsionTorus::full(nvars).named(&t.name);
                for line in &t.constraints {
                    torus.push(parse_constraint(line, nvars)?).map_err(|e| e.to_string())?;
                }
                Ok(torus)
            })
            .collect()
    };
    Ok(Some(ObstructionWitness { u: w.u.clone(), k: w.k, tori1: tori(&w.tori1)?, tori2: tori(&w.tori2)? }))
}

/// Re-checks a certificate: graph digest, verdict, and for NotQP every
/// recorded rank, dimension and condition.
pub fn verify_certificate(text: &str) -> Result<Outcome, CliError> {
    let c: Certificate = serde_json::from_str(text).map_err(|e| CliError::Input {
        line: e.line(),
        msg: "malformed certificate".into(),
        detail: format!(": {e}"),
    })?;
    let mut problems = Vec::new();
    if c.format != certificate::FORMAT {
        problems.push(format!("unknown format {:?}", c.format));
    }
    let g = c.graph.to_graph().map_err(usage)?;
    if graph_digest(&g) != c.graph_sha256 {
        problems.push("graph digest mismatch".to_string());
    }
    let v = decide_qp(&g).map_err(internal)?;
    let fresh = certificate::build(&g, &v, None);
    if fresh.verdict != c.verdict {
        problems.push(format!("verdict {} recorded, {} recomputed", c.verdict, fresh.verdict));
    }
    if fresh.factors != c.factors {
        problems.push("factor list differs".to_string());
    }
    if let Some(w) = &c.witness {
        let m = cocyclic_matrix(&g, &w.u, w.k).map_err(usage)?;
        if m.var_names != w.variables {
            problems.push("witness variables differ from the co-cyclic abelianization".to_string());
        }
        match rebuild_witness(&c, m.nvars()) {
            Err(e) => problems.push(format!("witness tori: {e}")),
            Ok(Some(wit)) => {
                let r = verify_obstruction(&g, &wit).map_err(|e| CliError::Internal(e.to_string()))?;
                let rec = VerificationRecord::from(&r);
                if Some(&rec) != c.verification.as_ref() {
                    problems.push("recorded ranks differ from recomputation".to_string());
                }
                if !r.passed() {
                    problems.push("witness does not pass the obstruction check".to_string());
                }
            }
            Ok(None) => {}
        }
    } else if c.verification.is_some() {
        problems.push("verification record without a witness".to_string());
    }
    if problems.is_empty() {
        Ok(Outcome::ok(format!("certificate OK: {} ({})\n", c.verdict, c.graph_sha256)))
    } else {
        let mut out = String::from("certificate REJECTED\n");
        for p in problems {
            let _ = writeln!(out, "  {p}");
        }
        Ok(Outcome { stdout: out, code: 1 })
    }
}
