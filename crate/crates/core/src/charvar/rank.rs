//! Exact ranks of Laurent matrices, on the full torus and on subtori.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::torus::{Root, TorsionTorus, TorusParametrization};
use crate::alexander::AlexMatrix;
use crate::error::{AlgebraError, TorusError};
use crate::exactalg::ModP;
use crate::{Coeff, CycloNumber, FieldCoeff, Laurent, LaurentPoly};

type Mat<C> = Vec<Vec<Laurent<C>>>;

fn strip_zero<C: Coeff>(a: Mat<C>) -> Mat<C> {
    let a: Mat<C> = a.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if a.is_empty() {
        return a;
    }
    let keep: Vec<usize> = (0..a[0].len()).filter(|&c| a.iter().any(|r| !r[c].is_zero())).collect();
    a.into_iter().map(|r| keep.iter().map(|&c| r[c].clone()).collect()).collect()
}

/// Rank over the fraction field. Monomial pivots are used first, without
/// division; the remaining block goes through fraction-free elimination.
pub fn laurent_rank<C: Coeff>(a: Mat<C>) -> usize {
    let mut a = strip_zero(a);
    let mut rank = 0;
    loop {
        let mut pivot = None;
        'search: for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.nterms() == 1 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        let prow = a.swap_remove(pi);
        let p = prow[pj].clone();
        a = a
            .into_par_iter()
            .map(|row| {
                let f = &row[pj];
                if f.is_zero() {
                    return row;
                }
                row.iter().zip(&prow).map(|(x, y)| &(&p * x) - &(f * y)).collect()
            })
            .collect();
        rank += 1;
        a = strip_zero(a);
    }
    rank + bareiss_rank(a)
}

fn bareiss_rank<C: Coeff>(mut a: Mat<C>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let nv = a[0][0].nvars();
    let mut prev = Laurent::<C>::one(nv);
    let mut r = 0;
    while r < rows.min(cols) {
        // full pivoting on the sparsest entry; column swaps keep the rank
        let best = (r..rows)
            .flat_map(|i| (r..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| (a[i][j].nterms(), j, i));
        let Some((bi, bj)) = best else { break };
        a.swap(r, bi);
        for row in a.iter_mut() {
            row.swap(r, bj);
        }
        let c = r;
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        rest.par_iter_mut().for_each(|row| {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &(&prow[c] * &row[j]) - &(&f * &prow[j]);
                row[j] = v.exact_div(&prev).expect("fraction-free step divides exactly");
            }
            row[c] = Laurent::zero(nv);
        });
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn laurent_det<C: Coeff>(mut a: Mat<C>) -> Laurent<C> {
    let n = a.len();
    let nv = if n == 0 { 0 } else { a[0][0].nvars() };
    if n == 0 {
        return Laurent::one(nv);
    }
    let mut prev = Laurent::<C>::one(nv);
    let mut negate = false;
    for c in 0..n {
        let Some(best) = (c..n).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].nterms()) else {
            return Laurent::zero(nv);
        };
        if best != c {
            a.swap(c, best);
            negate = !negate;
        }
        for i in c + 1..n {
            let f = a[i][c].clone();
            for j in c + 1..n {
                let v = &(&a[c][c] * &a[i][j]) - &(&f * &a[c][j]);
                a[i][j] = v.exact_div(&prev).expect("fraction-free step divides exactly");
            }
        }
        prev = a[c][c].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn point_rank<F: FieldCoeff>(mut a: Vec<Vec<F>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            for j in c..cols {
                let v = a[i][j].clone() - f.clone() * a[r][j].clone();
                a[i][j] = v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn modp_point(nparams: usize, trial: u64) -> Vec<ModP> {
    (0..nparams as u64)
        .map(|k| {
            let x = (k + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(trial.wrapping_mul(0xBF58_476D_1CE4_E5B9));
            let v = ModP::new(x);
            if v.value() == 0 {
                ModP::new(2)
            } else {
                v
            }
        })
        .collect()
}

const SMALL_PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn cyclo_point(nparams: usize, trial: usize) -> Vec<CycloNumber> {
    (0..nparams)
        .map(|k| CycloNumber::from_int(SMALL_PRIMES[(k + trial) % SMALL_PRIMES.len()] + (k / SMALL_PRIMES.len()) as i64 * 41))
        .collect()
}

/// Upper bound from the column images: on a torus where some generator
/// has a nontrivial image, the Fox identity gives a kernel vector.
fn upper_bound(m: &AlexMatrix, p: &TorusParametrization) -> usize {
    let full = m.nrows().min(m.ncols());
    if m.ncols() == 0 {
        return 0;
    }
    let nontrivial = m.images.iter().any(|img| {
        let (r, mono) = p.image(img);
        !(r.is_one() && mono.is_one())
    });
    if nontrivial && m.satisfies_fox_identity() {
        full.min(m.ncols() - 1)
    } else {
        full
    }
}

fn certified<C: Coeff, F: FieldCoeff>(
    entries: Mat<C>,
    upper: usize,
    points: impl Iterator<Item = Vec<F>>,
    cmap: impl Fn(&C) -> F + Sync,
) -> usize {
    let mut lower = 0;
    for pt in points {
        let vals: Vec<Vec<F>> = entries
            .iter()
            .map(|r| r.iter().map(|x| x.eval(&pt, &cmap).expect("arity")).collect())
            .collect();
        lower = lower.max(point_rank(vals));
        if lower >= upper {
            return upper;
        }
    }
    laurent_rank(entries)
}

/// Exact rank of the matrix restricted to one irreducible component.
pub fn rank_on_component(m: &AlexMatrix, p: &TorusParametrization) -> Result<usize, TorusError> {
    if p.arity() != m.nvars() {
        return Err(TorusError::Arity { expected: m.nvars(), got: p.arity() });
    }
    let upper = upper_bound(m, p);
    if p.conductor() <= 2 {
        let sign = |r: Root| BigInt::from(r.as_sign().expect("real root"));
        let entries: Mat<BigInt> = m.entries.iter().map(|row| row.iter().map(|x| p.apply(x, sign)).collect()).collect();
        let pts = (0..2).map(|t| modp_point(p.nparams, t));
        Ok(certified(entries, upper, pts, ModP::from_bigint))
    } else {
        let entries: Mat<CycloNumber> =
            m.entries.iter().map(|row| row.iter().map(|x| p.apply(x, Root::to_cyclo)).collect()).collect();
        let pts = (0..2).map(|t| cyclo_point(p.nparams, t));
        Ok(certified(entries, upper, pts, |c: &CycloNumber| c.clone()))
    }
}

/// Rank on a torsion torus: the maximum over its components.
pub fn rank_on_torus(m: &AlexMatrix, t: &TorsionTorus) -> Result<usize, TorusError> {
    if t.arity() != m.nvars() {
        return Err(TorusError::Arity { expected: m.nvars(), got: t.arity() });
    }
    let comps = t.components();
    if comps.is_empty() {
        return Err(TorusError::Empty);
    }
    let ranks: Result<Vec<usize>, TorusError> = comps.par_iter().map(|p| rank_on_component(m, p)).collect();
    Ok(ranks?.into_iter().max().unwrap_or(0))
}

pub fn generic_rank(m: &AlexMatrix) -> usize {
    rank_on_component(m, &TorusParametrization::identity(m.nvars())).expect("identity has the right arity")
}

/// `max(corank - 1, 0)` with corank measured against the column count.
pub fn depth_from_rank(m: &AlexMatrix, rank: usize) -> usize {
    (m.ncols() - rank).saturating_sub(1)
}

pub fn charvar_depth(m: &AlexMatrix, t: &TorsionTorus) -> Result<usize, TorusError> {
    Ok(depth_from_rank(m, rank_on_torus(m, t)?))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else { return out };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All `order x order` minors, row subsets outer and column subsets inner,
/// both in lexicographic order.
pub fn fitting_minors(m: &AlexMatrix, order: usize) -> Result<Vec<LaurentPoly>, AlgebraError> {
    let max = m.nrows().min(m.ncols());
    if order < 1 || order > max {
        return Err(AlgebraError::OrderOutOfRange { order, max });
    }
    let rs = subsets(m.nrows(), order);
    let cs = subsets(m.ncols(), order);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = rs.iter().flat_map(|r| cs.iter().map(move |c| (r, c))).collect();
    let minors = pairs
        .par_iter()
        .map(|(r, c)| {
            let sub: Mat<BigInt> = r.iter().map(|&i| c.iter().map(|&j| m.entries[i][j].clone()).collect()).collect();
            laurent_det(sub)
        })
        .collect();
    Ok(minors)
}
