//! Fox calculus and Alexander matrices.

use std::fmt::Write as _;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::PresentationError;
use crate::exactalg::{p_poly, Monomial};
use crate::graph::LabeledGraph;
use crate::presentation::{
    abelianize, bracket_length, cocyclic_presentation, eps_for, Abelianization, CocyclicLayout, Gen, Presentation,
    RelatorRole, RelatorTag, Word,
};
use crate::LaurentPoly;

/// Abelianized Fox derivative `d w / d g`.
pub fn fox_derivative(w: &Word, g: &Gen, ab: &Abelianization) -> Result<LaurentPoly, PresentationError> {
    let n = ab.nvars();
    let mut prefix = Monomial::one(n);
    let mut acc = LaurentPoly::zero(n);
    for (h, s) in w.letters() {
        let t = ab.image(h).ok_or_else(|| PresentationError::UnknownGenerator(h.to_string()))?;
        if s > 0 {
            if h == g {
                acc.add_term(prefix.clone(), BigInt::one());
            }
            prefix = prefix.mul(t);
        } else {
            prefix = prefix.div(t);
            if h == g {
                acc.add_term(prefix.clone(), -BigInt::one());
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoxSide {
    A,
    B,
    Other,
}

/// Derivative of `(ab)^ell (ba)^-ell` in closed form.
pub fn fox_closed_a(ell: u32, ta: &Monomial, tb: &Monomial, wrt: FoxSide) -> LaurentPoly {
    let n = ta.exps().len();
    let one = LaurentPoly::one(n);
    let p = p_poly(ell, &LaurentPoly::monomial(ta.mul(tb))).expect("monomial argument");
    match wrt {
        FoxSide::A => -(&(&LaurentPoly::monomial(tb.clone()) - &one) * &p),
        FoxSide::B => &(&LaurentPoly::monomial(ta.clone()) - &one) * &p,
        FoxSide::Other => LaurentPoly::zero(n),
    }
}

/// Data for the bracket relator `B^i` of an edge `{u, w}` with half-label
/// `ell` in the index-`k` subgroup.
#[derive(Clone, Debug)]
pub struct BracketCell {
    pub ell: u32,
    pub k: u32,
    pub i: u32,
    /// Image of `u.bar`.
    pub ubar: Monomial,
    /// Images of `w.0, .., w.{k-1}`.
    pub w: Vec<Monomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketWrt {
    Ubar,
    Copy(u32),
    Other,
}

impl BracketCell {
    fn image_at(&self, pos: u32) -> &Monomial {
        if pos == self.k {
            &self.ubar
        } else {
            &self.w[pos as usize]
        }
    }

    /// Image of `o` consecutive letters starting at position `p` of the
    /// cycle `w.0, .., w.{k-1}, u.bar`.
    fn run(&self, p: u32, o: u32) -> Monomial {
        let mut m = Monomial::one(self.ubar.exps().len());
        for s in 0..o {
            m = m.mul(self.image_at((p + s) % (self.k + 1)));
        }
        m
    }

    /// Derivative of the length-`len` run from `p` with respect to the letter
    /// at position `q`: every occurrence sits `o + s(k+1)` letters in, so the
    /// sum is a geometric series in the image of one full turn.
    fn run_derivative(&self, p: u32, q: u32, len: u32) -> LaurentPoly {
        let n = self.ubar.exps().len();
        let o = (q + self.k + 1 - p) % (self.k + 1);
        if o >= len {
            return LaurentPoly::zero(n);
        }
        let count = (len - o + self.k) / (self.k + 1);
        let turn = LaurentPoly::monomial(self.run(0, self.k + 1));
        let series = p_poly(count, &turn).expect("monomial argument");
        series.mul_monomial(&self.run(p, o), &BigInt::one())
    }

    pub fn derivative(&self, wrt: BracketWrt) -> LaurentPoly {
        let q = match wrt {
            BracketWrt::Ubar => self.k,
            BracketWrt::Copy(j) => j,
            BracketWrt::Other => return LaurentPoly::zero(self.ubar.exps().len()),
        };
        let eps = eps_for(self.ell, self.k, self.i);
        let len = bracket_length(self.ell, self.k, eps) as u32;
        let first = self.run_derivative(self.i, q, len);
        let second = self.run_derivative(self.i + 1, q, len);
        // d(S T^-1) = dS - phi(S) phi(T)^-1 dT
        let shift = self.run(self.i, len).div(&self.run(self.i + 1, len));
        &first - &second.mul_monomial(&shift, &BigInt::one())
    }
}

/// Derivative of the bracket relator `B^i` in closed form.
pub fn fox_closed_b(cell: &BracketCell, wrt: BracketWrt) -> LaurentPoly {
    cell.derivative(wrt)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowInfo {
    pub label: String,
    pub tag: RelatorTag,
}

/// A named rectangle of the matrix; entries of its rows outside `cols` are
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub rows: Range<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlexMatrix {
    pub rows: Vec<RowInfo>,
    /// One column per generator.
    pub cols: Vec<Gen>,
    pub var_names: Vec<String>,
    /// Image of each column's generator in `H_1`.
    pub images: Vec<Monomial>,
    pub entries: Vec<Vec<LaurentPoly>>,
    pub blocks: Vec<Block>,
}

impl AlexMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r][c]
    }

    pub fn col_index(&self, g: &Gen) -> Option<usize> {
        self.cols.iter().position(|h| h == g)
    }

    /// The rows and columns of one block as a matrix of its own.
    pub fn submatrix(&self, rows: Range<usize>, cols: &[usize]) -> AlexMatrix {
        AlexMatrix {
            rows: self.rows[rows.clone()].to_vec(),
            cols: cols.iter().map(|&c| self.cols[c].clone()).collect(),
            var_names: self.var_names.clone(),
            images: cols.iter().map(|&c| self.images[c].clone()).collect(),
            entries: self.entries[rows].iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect(),
            blocks: Vec::new(),
        }
    }

    pub fn block(&self, name: &str) -> Option<AlexMatrix> {
        let b = self.blocks.iter().find(|b| b.name == name)?;
        Some(self.submatrix(b.rows.clone(), &b.cols))
    }

    /// Rows whose entries stray outside their block's columns.
    pub fn zero_block_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for b in &self.blocks {
            for r in b.rows.clone() {
                for c in 0..self.ncols() {
                    if !b.cols.contains(&c) && !self.entries[r][c].is_zero() {
                        bad.push((r, c));
                    }
                }
            }
        }
        bad
    }

    /// Checks `sum_g (dR/dg)(t_g - 1) = 0` on every row.
    pub fn satisfies_fox_identity(&self) -> bool {
        let n = self.nvars();
        self.entries.iter().all(|row| {
            let mut acc = LaurentPoly::zero(n);
            for (e, m) in row.iter().zip(&self.images) {
                acc = &acc + &(e * &(&LaurentPoly::monomial(m.clone()) - &LaurentPoly::one(n)));
            }
            acc.is_zero()
        })
    }

    pub fn var_name(&self, i: usize) -> String {
        format!("t{i}")
    }

    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        let names = |i: usize| format!("t{i}");
        self.entries.iter().map(|row| row.iter().map(|e| e.render(&names)).collect()).collect()
    }

    /// Aligned text rendering with a variable legend and block list.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "matrix {} x {}", self.nrows(), self.ncols());
        let legend: Vec<String> = self.var_names.iter().enumerate().map(|(i, v)| format!("t{i}={v}")).collect();
        let _ = writeln!(out, "variables: {}", legend.join(" "));
        if self.nrows() == 0 {
            let _ = writeln!(out, "0 relators");
        }
        let cells = self.entry_strings();
        let label_w = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.ncols())
            .map(|c| {
                let head = self.cols[c].to_string().len();
                cells.iter().map(|row| row[c].len()).max().unwrap_or(0).max(head)
            })
            .collect();
        let mut line = format!("{:label_w$}", "");
        for (c, w) in widths.iter().enumerate() {
            let _ = write!(line, "  {:>w$}", self.cols[c].to_string());
        }
        let _ = writeln!(out, "{}", line.trim_end());
        for (r, row) in cells.iter().enumerate() {
            let mut line = format!("{:label_w$}", self.rows[r].label);
            for (c, w) in widths.iter().enumerate() {
                let _ = write!(line, "  {:>w$}", row[c]);
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
        for b in &self.blocks {
            let cols: Vec<String> = b.cols.iter().map(|&c| self.cols[c].to_string()).collect();
            let _ = writeln!(out, "block {}: rows {}..{} cols {}", b.name, b.rows.start, b.rows.end, cols.join(","));
        }
        out
    }
}

/// Matrix of abelianized Fox derivatives, one row per relator and one
/// column per generator.
pub fn alexander_matrix(p: &Presentation, ab: &Abelianization) -> Result<AlexMatrix, PresentationError> {
    let cols = p.generators().to_vec();
    let mut entries = Vec::new();
    for r in p.relators() {
        let row = cols.iter().map(|g| fox_derivative(r.word(), g, ab)).collect::<Result<Vec<_>, _>>()?;
        entries.push(row);
    }
    let images = cols
        .iter()
        .map(|g| ab.image(g).cloned().ok_or_else(|| PresentationError::UnknownGenerator(g.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlexMatrix {
        rows: p.relators().iter().map(|r| RowInfo { label: r.label(), tag: r.tag }).collect(),
        cols,
        var_names: ab.var_names().to_vec(),
        images,
        entries,
        blocks: Vec::new(),
    })
}

/// Alexander matrix of the Artin presentation.
pub fn artin_matrix(g: &LabeledGraph) -> AlexMatrix {
    let p = crate::presentation::artin_presentation(g);
    let ab = abelianize(&p).expect("even Artin groups have free abelianization");
    alexander_matrix(&p, &ab).expect("generators are declared")
}

/// Alexander matrix of the co-cyclic subgroup with its block layout.
pub fn cocyclic_matrix(g: &LabeledGraph, u: &str, k: u32) -> Result<AlexMatrix, PresentationError> {
    let lay = CocyclicLayout::new(g, u, k)?;
    let p = cocyclic_presentation(g, u, k)?;
    let ab = abelianize(&p)?;
    let mut m = alexander_matrix(&p, &ab)?;
    m.blocks = layout_blocks(&lay, &p, &m);
    debug_assert!(m.zero_block_violations().is_empty());
    Ok(m)
}

fn layout_blocks(lay: &CocyclicLayout, p: &Presentation, m: &AlexMatrix) -> Vec<Block> {
    let col = |g: &Gen| m.col_index(g).expect("layout generator");
    let v2_cols: Vec<usize> = lay.v2.iter().map(|v| col(&Gen::vertex(v))).collect();
    let ubar = col(&Gen::bar(&lay.u));
    let mut blocks: Vec<Block> = Vec::new();
    let mut push = |name: String, r: usize, cols: Vec<usize>| match blocks.last_mut() {
        Some(b) if b.name == name && b.rows.end == r => b.rows.end = r + 1,
        _ => blocks.push(Block { name, rows: r..r + 1, cols }),
    };
    for (r, rel) in p.relators().iter().enumerate() {
        match &rel.role {
            RelatorRole::R2 { .. } => push("A_k".into(), r, v2_cols.clone()),
            RelatorRole::R3 { j, .. } | RelatorRole::R4 { j, .. } => {
                let mut cols: Vec<usize> = lay.w.iter().map(|w| col(&Gen::copy(w, *j))).collect();
                cols.extend(&v2_cols);
                push(format!("A_{j}"), r, cols)
            }
            RelatorRole::R1 { .. } => {
                let mut cols = v2_cols.clone();
                cols.push(ubar);
                push("V2".into(), r, cols)
            }
            RelatorRole::B { w, .. } => {
                let mut cols: Vec<usize> = (0..lay.k).map(|j| col(&Gen::copy(w, j))).collect();
                cols.push(ubar);
                push(format!("M_B({w})"), r, cols)
            }
            _ => {}
        }
    }
    blocks
}
