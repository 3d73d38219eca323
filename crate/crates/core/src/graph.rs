//! Labeled graphs with even edge labels, the 2-join and its finest
//! factorization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::GraphError;

/// A simple graph whose edges carry even labels `m >= 2`.
///
/// Vertices are kept sorted; edges are stored by index pairs `(i, j)` with
/// `i < j` into the vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    vertices: Vec<String>,
    edges: BTreeMap<(usize, usize), u32>,
}

pub fn valid_vertex_name(s: &str) -> bool {
    !s.is_empty() && !s.contains('.') && !s.chars().any(|c| c.is_whitespace() || c == '#')
}

/// Checks and canonicalizes raw graph data.
pub fn validate_graph<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u64)]) -> Result<LabeledGraph, GraphError> {
    let mut names = BTreeSet::new();
    for v in vertices {
        let v = v.as_ref();
        if !valid_vertex_name(v) {
            return Err(GraphError::InvalidName(v.to_string()));
        }
        if !names.insert(v.to_string()) {
            return Err(GraphError::DuplicateVertex(v.to_string()));
        }
    }
    let vertices: Vec<String> = names.into_iter().collect();
    let mut g = LabeledGraph { vertices, edges: BTreeMap::new() };
    for (a, b, label) in edges {
        let (a, b, label) = (a.as_ref(), b.as_ref(), *label);
        if a == b {
            return Err(GraphError::Loop(a.to_string()));
        }
        let ia = g.index_of(a).ok_or_else(|| GraphError::DanglingEndpoint(a.to_string()))?;
        let ib = g.index_of(b).ok_or_else(|| GraphError::DanglingEndpoint(b.to_string()))?;
        if label < 2 {
            return Err(GraphError::LabelTooSmall { a: a.into(), b: b.into(), label });
        }
        if label % 2 == 1 {
            return Err(GraphError::OddLabel { a: a.into(), b: b.into(), label });
        }
        let key = (ia.min(ib), ia.max(ib));
        if g.edges.insert(key, label as u32).is_some() {
            return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
        }
    }
    Ok(g)
}

impl LabeledGraph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u64)]) -> Result<Self, GraphError> {
        validate_graph(vertices, edges)
    }

    pub fn empty() -> Self {
        LabeledGraph { vertices: Vec::new(), edges: BTreeMap::new() }
    }

    /// `r` isolated vertices.
    pub fn kbar<S: AsRef<str>>(names: &[S]) -> Result<Self, GraphError> {
        validate_graph::<&str>(&names.iter().map(|s| s.as_ref()).collect::<Vec<_>>(), &[])
    }

    /// Two vertices joined by one edge.
    pub fn segment(a: &str, b: &str, label: u64) -> Result<Self, GraphError> {
        validate_graph(&[a, b], &[(a, b, label)])
    }

    /// Triangle with labels on `ab`, `bc`, `ca`.
    pub fn triangle(names: [&str; 3], labels: [u64; 3]) -> Result<Self, GraphError> {
        let [a, b, c] = names;
        validate_graph(&[a, b, c], &[(a, b, labels[0]), (b, c, labels[1]), (c, a, labels[2])])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn label_at(&self, i: usize, j: usize) -> Option<u32> {
        self.edges.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn label(&self, a: &str, b: &str) -> Option<u32> {
        self.label_at(self.index_of(a)?, self.index_of(b)?)
    }

    /// Edges as `(a, b, label)` with `a < b`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u32)> + '_ {
        self.edges
            .iter()
            .map(|(&(i, j), &l)| (self.vertices[i].as_str(), self.vertices[j].as_str(), l))
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn neighbors(&self, i: usize) -> Vec<(usize, u32)> {
        (0..self.len()).filter(|&j| j != i).filter_map(|j| self.label_at(i, j).map(|l| (j, l))).collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    pub fn is_right_angled(&self) -> bool {
        self.edges.values().all(|&l| l == 2)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, _) in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Applies a renaming to every vertex.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Self, GraphError> {
        let vs: Vec<String> = self.vertices.iter().map(|v| f(v)).collect();
        let es: Vec<(String, String, u64)> = self.edges().map(|(a, b, l)| (f(a), f(b), l as u64)).collect();
        validate_graph(&vs, &es)
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for (a, b, l) in self.edges() {
            writeln!(f, "edge {a} {b} {l}")?;
        }
        Ok(())
    }
}

/// Disjoint union of both graphs plus every cross edge with label 2.
pub fn two_join(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<LabeledGraph, GraphError> {
    if let Some(v) = g1.vertices.iter().find(|v| g2.index_of(v).is_some()) {
        return Err(GraphError::NameCollision(v.clone()));
    }
    let vs: Vec<&str> = g1.vertices.iter().chain(&g2.vertices).map(String::as_str).collect();
    let mut es: Vec<(&str, &str, u64)> = g1.edges().chain(g2.edges()).map(|(a, b, l)| (a, b, l as u64)).collect();
    for a in &g1.vertices {
        for b in &g2.vertices {
            es.push((a, b, 2));
        }
    }
    validate_graph(&vs, &es)
}

/// Induced subgraph on `keep`.
pub fn v_subgraph<S: AsRef<str>>(g: &LabeledGraph, keep: &[S]) -> Result<LabeledGraph, GraphError> {
    let mut idx = BTreeSet::new();
    for k in keep {
        let i = g.index_of(k.as_ref()).ok_or_else(|| GraphError::UnknownVertex(k.as_ref().to_string()))?;
        idx.insert(i);
    }
    let vs: Vec<&str> = idx.iter().map(|&i| g.vertices[i].as_str()).collect();
    let es: Vec<(&str, &str, u64)> = g
        .edge_indices()
        .filter(|(i, j, _)| idx.contains(i) && idx.contains(j))
        .map(|(i, j, l)| (g.vertices[i].as_str(), g.vertices[j].as_str(), l as u64))
        .collect();
    validate_graph(&vs, &es)
}

/// Vertex classes of the finest 2-join factorization, each sorted, listed by
/// smallest vertex.
pub fn join_classes(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut comp = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                // x and y are tied unless joined by a label-2 edge
                if y != x && comp[y] == usize::MAX && g.label_at(x, y) != Some(2) {
                    comp[y] = id;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// The finest 2-join factorization.
pub fn join_decompose(g: &LabeledGraph) -> Vec<LabeledGraph> {
    join_classes(g)
        .into_iter()
        .map(|c| {
            let keep: Vec<&str> = c.iter().map(|&i| g.vertices[i].as_str()).collect();
            v_subgraph(g, &keep).expect("class vertices belong to g")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Kbar(usize),
    Segment(u32),
    T442,
    Other,
}

impl FactorKind {
    pub fn is_qp(&self) -> bool {
        !matches!(self, FactorKind::Other)
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Kbar(r) => write!(f, "Kbar({r})"),
            FactorKind::Segment(l) => write!(f, "S_{l}"),
            FactorKind::T442 => write!(f, "T(4,4,2)"),
            FactorKind::Other => write!(f, "Other"),
        }
    }
}

pub fn classify_factor(g: &LabeledGraph) -> FactorKind {
    let labels: Vec<u32> = {
        let mut l: Vec<u32> = g.edges.values().copied().collect();
        l.sort_unstable();
        l
    };
    match (g.len(), labels.as_slice()) {
        (r, []) if r > 0 => FactorKind::Kbar(r),
        (2, [l]) if *l >= 4 => FactorKind::Segment(*l),
        (3, [2, 4, 4]) => FactorKind::T442,
        _ => FactorKind::Other,
    }
}
