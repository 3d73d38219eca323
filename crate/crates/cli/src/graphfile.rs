//! The line-oriented graph format: `vertex <name>` and
//! `edge <name> <name> <label>` lines, `#` comments.

use artinqp::error::GraphError;
use artinqp::graph::{valid_vertex_name, LabeledGraph};

use crate::CliError;

fn at(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Input { line, msg: msg.into(), detail: String::new() }
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph, CliError> {
    let mut vertices: Vec<(String, usize)> = Vec::new();
    let mut edges: Vec<(String, String, u64, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["vertex", name] => {
                if !valid_vertex_name(name) {
                    return Err(at(ln, format!("invalid vertex name {name:?}")));
                }
                if vertices.iter().any(|(v, _)| v == name) {
                    return Err(at(ln, format!("duplicate vertex {name}")));
                }
                vertices.push((name.to_string(), ln));
            }
            ["edge", a, b, label] => {
                let l: u64 = label.parse().map_err(|_| at(ln, format!("bad label {label:?}")))?;
                edges.push((a.to_string(), b.to_string(), l, ln));
            }
            ["vertex", ..] => return Err(at(ln, "expected: vertex <name>")),
            ["edge", ..] => return Err(at(ln, "expected: edge <name> <name> <label>")),
            _ => return Err(at(ln, format!("unknown directive {:?}", toks[0]))),
        }
    }
    let names: Vec<&str> = vertices.iter().map(|(v, _)| v.as_str()).collect();
    // validate edge by edge so failures carry their line
    let mut seen: Vec<(String, String)> = Vec::new();
    for (a, b, l, ln) in &edges {
        let one = [(a.as_str(), b.as_str(), *l)];
        let pair_names: Vec<&str> = names.clone();
        if let Err(e) = LabeledGraph::new(&pair_names, &one) {
            let (msg, detail) = describe(&e);
            return Err(CliError::Input { line: *ln, msg, detail });
        }
        let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if seen.contains(&key) {
            return Err(at(*ln, format!("duplicate edge {a} {b}")));
        }
        seen.push(key);
    }
    let es: Vec<(&str, &str, u64)> = edges.iter().map(|(a, b, l, _)| (a.as_str(), b.as_str(), *l)).collect();
    LabeledGraph::new(&names, &es).map_err(|e| at(0, e.to_string()))
}

fn describe(e: &GraphError) -> (String, String) {
    match e {
        GraphError::OddLabel { a, b, label } => ("odd label".into(), format!(": {label} on edge {a} {b}")),
        GraphError::Loop(a) => ("loop".into(), format!(" at vertex {a}")),
        GraphError::DanglingEndpoint(a) => ("unknown vertex".into(), format!(" {a}")),
        other => (other.to_string(), String::new()),
    }
}
