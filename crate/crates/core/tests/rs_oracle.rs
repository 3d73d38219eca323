//! The simplified co-cyclic presentation against the raw Reidemeister-Schreier
//! rewrite of the same subgroup.
//!
//! Both present one group, so the abelianization rank and the dimension of
//! crossed homomorphisms at any character (the corank of the evaluated Fox
//! matrix) must agree.

use artinqp::exactalg::cyclo_embed;
use artinqp::graph::LabeledGraph;
use artinqp::presentation::{abelianize, cocyclic_presentation, rs_presentation_generic, CocyclicLayout, Gen, Presentation};
use artinqp::{alexander::fox_derivative, CycloNumber, FieldCoeff};
use num_traits::{One, Zero};
use proptest::prelude::*;

const N: u32 = 12;

fn rank(mut m: Vec<Vec<CycloNumber>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() * inv.clone();
            for j in c..cols {
                let d = f.clone() * m[r][j].clone();
                m[i][j] = m[i][j].clone() - d;
            }
        }
        r += 1;
    }
    r
}

/// Corank of the Fox matrix of `p` with generator `g` sent to `value(g)`.
fn corank_at(p: &Presentation, value: &dyn Fn(&Gen) -> CycloNumber) -> usize {
    let free = abelianize(&Presentation::new(p.generators().to_vec(), vec![]).unwrap()).unwrap();
    let mut point = vec![CycloNumber::one(); free.nvars()];
    for g in p.generators() {
        point[free.var_of(g).unwrap()] = value(g);
    }
    let rows: Vec<Vec<CycloNumber>> = p
        .relators()
        .iter()
        .map(|r| {
            p.generators()
                .iter()
                .map(|g| fox_derivative(r.word(), g, &free).unwrap().eval(&point, |c| CycloNumber::from(c.clone())).unwrap())
                .collect()
        })
        .collect();
    p.generators().len() - rank(rows)
}

fn compare(g: &LabeledGraph, u: &str, k: u32, seed: u64) -> Result<(), String> {
    let co = cocyclic_presentation(g, u, k).unwrap();
    let rs = rs_presentation_generic(g, u, k).unwrap();
    let (a_co, a_rs) = (abelianize(&co), abelianize(&rs));
    match (&a_co, &a_rs) {
        (Ok(x), Ok(y)) if x.rank() != y.rank() => return Err(format!("H1 rank {} vs {}", x.rank(), y.rank())),
        (Ok(_), Err(e)) | (Err(e), Ok(_)) => return Err(format!("only one side abelianizes: {e}")),
        (Err(_), Err(_)) => return Ok(()),
        _ => {}
    }
    let ab = a_co.unwrap();
    let lay = CocyclicLayout::new(g, u, k).unwrap();
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    let choices: Vec<Vec<i64>> = vec![
        vec![0; ab.nvars()],
        (0..ab.nvars()).map(|_| 6 * (next() % 2)).collect(),
        (0..ab.nvars()).map(|_| next() % N as i64).collect(),
        (0..ab.nvars()).map(|_| next() % N as i64).collect(),
    ];
    for ch in choices {
        let co_value = |h: &Gen| {
            let e: i64 = ab.image(h).unwrap().exps().iter().zip(&ch).map(|(a, b)| *a as i64 * b).sum();
            cyclo_embed(N, e).unwrap()
        };
        let rs_value = |h: &Gen| match h {
            Gen::Copy(x, _) if lay.is_v2(x) => co_value(&Gen::vertex(x)),
            _ => co_value(h),
        };
        let (c1, c2) = (corank_at(&co, &co_value), corank_at(&rs, &rs_value));
        if c1 != c2 {
            return Err(format!("corank {c1} vs {c2} at exponents {ch:?}"));
        }
    }
    Ok(())
}

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn graph(n: usize, labels: &[u64]) -> LabeledGraph {
    let mut edges = Vec::new();
    let mut it = labels.iter();
    for i in 0..n {
        for j in i + 1..n {
            let l = *it.next().unwrap();
            if l > 0 {
                edges.push((NAMES[i], NAMES[j], l));
            }
        }
    }
    LabeledGraph::new(&NAMES[..n], &edges).unwrap()
}

#[test]
fn small_graphs_exhaustive() {
    let opts = [0u64, 2, 4, 6, 8];
    let mut seed = 1;
    for n in 2..=3usize {
        let m = n * (n - 1) / 2;
        for code in 0..opts.len().pow(m as u32) {
            let labels: Vec<u64> = (0..m).map(|e| opts[code / opts.len().pow(e as u32) % opts.len()]).collect();
            let g = graph(n, &labels);
            for u in &NAMES[..n] {
                for k in 2..=4 {
                    seed += 1;
                    if let Err(e) = compare(&g, u, k, seed) {
                        panic!("{g} u={u} k={k}: {e}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn four_vertex_graphs(labels in prop::collection::vec(prop::sample::select(vec![0u64, 2, 4, 6, 8]), 6),
                          u in 0usize..4, k in 2u32..=4, seed in any::<u64>()) {
        let g = graph(4, &labels);
        prop_assert_eq!(compare(&g, NAMES[u], k, seed), Ok(()));
    }
}
