//! Abelianization of a presentation.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::word::Gen;
use super::Presentation;
use crate::error::PresentationError;
use crate::exactalg::lattice::{smith, small, to_big, unimodular_inverse};
use crate::exactalg::Monomial;

/// The free abelian group `H_1` with coordinates, and the image of every
/// generator as a monomial in those coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    generators: Vec<Gen>,
    var_names: Vec<String>,
    images: Vec<Monomial>,
}

impl Abelianization {
    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn rank(&self) -> usize {
        self.nvars()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    pub fn index_of(&self, g: &Gen) -> Option<usize> {
        self.generators.iter().position(|h| h == g)
    }

    pub fn image(&self, g: &Gen) -> Option<&Monomial> {
        self.index_of(g).map(|i| &self.images[i])
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    /// The coordinate a generator is identified with, when its image is a
    /// single variable.
    pub fn var_of(&self, g: &Gen) -> Option<usize> {
        let m = self.image(g)?;
        let nz: Vec<usize> = m.exps().iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, _)| i).collect();
        (nz.len() == 1 && m.exps()[nz[0]] == 1).then(|| nz[0])
    }

    /// Generators sharing each coordinate, for identification-only cases.
    pub fn classes(&self) -> Vec<Vec<Gen>> {
        let mut out = vec![Vec::new(); self.nvars()];
        for g in &self.generators {
            if let Some(v) = self.var_of(g) {
                out[v].push(g.clone());
            }
        }
        out
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Abelianizes the relators; the result must be torsion-free.
pub fn abelianize(p: &Presentation) -> Result<Abelianization, PresentationError> {
    let gens = p.generators().to_vec();
    let n = gens.len();
    let pos: BTreeMap<&Gen, usize> = gens.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let rows: Vec<Vec<i64>> = p
        .relators()
        .iter()
        .map(|r| {
            let mut row = vec![0i64; n];
            for (g, e) in r.word().syllables() {
                row[pos[g]] += e;
            }
            row
        })
        .filter(|row| row.iter().any(|&x| x != 0))
        .collect();

    let identification_only = rows.iter().all(|row| {
        let nz: Vec<i64> = row.iter().copied().filter(|&x| x != 0).collect();
        nz.len() == 2 && nz.contains(&1) && nz.contains(&-1)
    });
    if identification_only {
        let mut parent: Vec<usize> = (0..n).collect();
        for row in &rows {
            let idx: Vec<usize> = row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect();
            let (a, b) = (find(&mut parent, idx[0]), find(&mut parent, idx[1]));
            // keep the earliest generator as representative
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut var_of_root = BTreeMap::new();
        let mut names = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            if r == i {
                var_of_root.insert(r, names.len());
                names.push(gens[i].to_string());
            }
        }
        let nv = names.len();
        let images = (0..n).map(|i| Monomial::var(nv, var_of_root[&find(&mut parent, i)])).collect();
        return Ok(Abelianization { generators: gens, var_names: names, images });
    }

    let s = smith(&to_big(&rows), n);
    if let Some(d) = s.d.iter().find(|d| !d.is_one()) {
        return Err(PresentationError::Torsion(d.to_string()));
    }
    let rank = s.rank();
    let vinv = unimodular_inverse(&s.v);
    let nv = n - rank;
    let images = (0..n).map(|j| Monomial((rank..n).map(|i| small(&vinv[i][j]) as i32).collect())).collect();
    let names = (0..nv).map(|i| format!("x{i}")).collect();
    debug_assert!(s.d.iter().all(|d| !d.is_zero()));
    Ok(Abelianization { generators: gens, var_names: names, images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledGraph;
    use crate::presentation::{artin_presentation, cocyclic_presentation};

    #[test]
    fn segment_four() {
        let g = LabeledGraph::segment("u", "w", 4).unwrap();
        let ab = abelianize(&cocyclic_presentation(&g, "u", 2).unwrap()).unwrap();
        assert_eq!(ab.nvars(), 3);
        let ab = abelianize(&cocyclic_presentation(&g, "u", 3).unwrap()).unwrap();
        assert_eq!(ab.nvars(), 2);
        assert_eq!(ab.var_of(&Gen::copy("w", 0)), ab.var_of(&Gen::copy("w", 2)));
        assert_eq!(ab.var_names(), &["w.0", "u.bar"]);
    }

    #[test]
    fn artin_is_free_abelian_on_vertices() {
        let t = LabeledGraph::triangle(["a", "b", "c"], [4, 2, 4]).unwrap();
        let ab = abelianize(&artin_presentation(&t)).unwrap();
        assert_eq!(ab.var_names(), &["a", "b", "c"]);
    }
}
