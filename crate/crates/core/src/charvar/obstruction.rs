//! Checking a pair of torus families against the three obstruction
//! conditions.

use rayon::prelude::*;

use super::rank::{depth_from_rank, generic_rank, rank_on_torus};
use super::torus::{torus_intersect, TorsionTorus};
use crate::alexander::{cocyclic_matrix, AlexMatrix};
use crate::error::TorusError;
use crate::graph::LabeledGraph;

/// A co-cyclic subgroup together with two families of tori in its
/// abelianization.
#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionWitness {
    pub u: String,
    pub k: u32,
    pub tori1: Vec<TorsionTorus>,
    pub tori2: Vec<TorsionTorus>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusReport {
    pub name: String,
    pub nonempty: bool,
    pub dim: usize,
    pub components: usize,
    pub rank: usize,
    pub corank: usize,
    pub depth: usize,
    pub trivial_character: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub first: usize,
    pub second: usize,
    pub torus: TorusReport,
    /// Strict depth jump over both factors.
    pub c3a: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub u: String,
    pub k: u32,
    pub rows: usize,
    pub cols: usize,
    pub var_names: Vec<String>,
    pub generic_rank: usize,
    pub generic_depth: usize,
    pub tori1: Vec<TorusReport>,
    pub tori2: Vec<TorusReport>,
    pub pairs: Vec<PairReport>,
    pub c1: bool,
    pub c2: bool,
    pub c3a: bool,
    pub c3b: bool,
    pub failures: Vec<String>,
}

impl ObstructionReport {
    pub fn c3(&self) -> bool {
        self.c3a || self.c3b
    }

    pub fn passed(&self) -> bool {
        self.c1 && self.c2 && self.c3()
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "subgroup u={} k={}: matrix {}x{}, generic corank {}\n",
            self.u,
            self.k,
            self.rows,
            self.cols,
            self.cols - self.generic_rank
        );
        for list in [&self.tori1, &self.tori2] {
            for t in list.iter() {
                out.push_str(&format!(
                    "  {}: dim {} components {} corank {} depth {}{}\n",
                    t.name,
                    t.dim,
                    t.components,
                    t.corank,
                    t.depth,
                    if t.trivial_character { " (trivial character)" } else { "" }
                ));
            }
        }
        for p in &self.pairs {
            if p.torus.nonempty {
                out.push_str(&format!(
                    "  I1[{}]+I2[{}]: dim {} corank {} depth {}\n",
                    p.first, p.second, p.torus.dim, p.torus.corank, p.torus.depth
                ));
            } else {
                out.push_str(&format!("  I1[{}]+I2[{}]: empty\n", p.first, p.second));
            }
        }
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        out.push_str(&format!(
            "  C1 {}  C2 {}  C3 {}{}\n",
            mark(self.c1),
            mark(self.c2),
            mark(self.c3()),
            if self.c3a { " (depth jump)" } else if self.c3b { " (irreducible)" } else { "" }
        ));
        out.push_str(if self.passed() { "PASS\n" } else { "FAIL\n" });
        for f in &self.failures {
            out.push_str(&format!("  {f}\n"));
        }
        out
    }
}

fn torus_report(m: &AlexMatrix, t: &TorsionTorus, name: String) -> Result<TorusReport, TorusError> {
    let canon = t.canonicalize();
    if !canon.nonempty {
        return Ok(TorusReport {
            name,
            nonempty: false,
            dim: 0,
            components: 0,
            rank: 0,
            corank: 0,
            depth: 0,
            trivial_character: false,
        });
    }
    let rank = rank_on_torus(m, t)?;
    Ok(TorusReport {
        name,
        nonempty: true,
        dim: canon.dim,
        components: t.components().len(),
        rank,
        corank: m.ncols() - rank,
        depth: depth_from_rank(m, rank),
        trivial_character: t.is_trivial_character(),
    })
}

fn label(t: &TorsionTorus, list: &str, i: usize) -> String {
    t.name.clone().unwrap_or_else(|| format!("{list}.{i}"))
}

/// Runs the three checks on the co-cyclic subgroup named by the witness.
pub fn verify_obstruction(g: &LabeledGraph, w: &ObstructionWitness) -> Result<ObstructionReport, TorusError> {
    if w.tori1.is_empty() {
        return Err(TorusError::EmptyWitness(1));
    }
    if w.tori2.is_empty() {
        return Err(TorusError::EmptyWitness(2));
    }
    let m = cocyclic_matrix(g, &w.u, w.k)?;
    for t in w.tori1.iter().chain(&w.tori2) {
        if t.arity() != m.nvars() {
            return Err(TorusError::Arity { expected: m.nvars(), got: t.arity() });
        }
    }
    let grank = generic_rank(&m);
    let gdepth = depth_from_rank(&m, grank);
    let reports = |list: &[TorsionTorus], tag: &str| -> Result<Vec<TorusReport>, TorusError> {
        list.par_iter().enumerate().map(|(i, t)| torus_report(&m, t, label(t, tag, i))).collect()
    };
    let r1 = reports(&w.tori1, "I1")?;
    let r2 = reports(&w.tori2, "I2")?;

    let mut failures = Vec::new();
    let mut c1 = true;
    for r in r1.iter().chain(&r2) {
        if !r.nonempty {
            c1 = false;
            failures.push(format!("C1: torus {} is empty", r.name));
        } else if r.depth < 1 || r.depth <= gdepth {
            c1 = false;
            failures.push(format!("C1: torus {} has depth {} (generic {gdepth})", r.name, r.depth));
        }
    }

    let idx: Vec<(usize, usize)> = (0..w.tori1.len()).flat_map(|i| (0..w.tori2.len()).map(move |j| (i, j))).collect();
    let pairs: Result<Vec<PairReport>, TorusError> = idx
        .par_iter()
        .map(|&(i, j)| {
            let t = torus_intersect(&w.tori1[i], &w.tori2[j])?;
            let rep = torus_report(&m, &t, format!("{}&{}", r1[i].name, r2[j].name))?;
            let c3a = rep.nonempty && rep.depth > r1[i].depth.max(r2[j].depth);
            Ok(PairReport { first: i, second: j, torus: rep, c3a })
        })
        .collect();
    let pairs = pairs?;
    let good = |p: &&PairReport| p.torus.nonempty && p.torus.dim >= 1;
    let c2 = pairs.iter().any(|p| good(&p));
    if !c2 {
        failures.push("C2: no intersection of positive dimension".to_string());
    }
    let c3a = pairs.iter().filter(good).any(|p| p.c3a);
    let c3b = r1.len() == 1 && r2.len() == 1 && r1[0].components == 1 && r2[0].components == 1;
    if !(c3a || c3b) {
        failures.push("C3: no depth jump on the intersection and the families are not single irreducible tori".into());
    }
    Ok(ObstructionReport {
        u: w.u.clone(),
        k: w.k,
        rows: m.nrows(),
        cols: m.ncols(),
        var_names: m.var_names.clone(),
        generic_rank: grank,
        generic_depth: gdepth,
        tori1: r1,
        tori2: r2,
        pairs,
        c1,
        c2,
        c3a,
        c3b,
        failures,
    })
}
