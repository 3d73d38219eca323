//! Hermite and Smith normal forms of integer matrices.
//!
//! Pivoting is deterministic: smallest absolute value, ties broken by the
//! smallest row then column index.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(a: &[Vec<i64>]) -> IntMatrix {
    a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix, inner: usize, cols: usize) -> IntMatrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("lattice entry fits in i64")
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(src_row) {
        *d -= q * s;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for x in m[r].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Row-style Hermite form: `w * a = h` stacked over zero rows.
#[derive(Clone, Debug)]
pub struct Hermite {
    /// Nonzero rows of the normal form.
    pub h: IntMatrix,
    /// Unimodular transform; its first `rank` rows produce `h`, the rest
    /// produce zero rows.
    pub w: IntMatrix,
    pub pivots: Vec<usize>,
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.h.len()
    }
}

pub fn hermite(a: &IntMatrix, ncols: usize) -> Hermite {
    let m = a.len();
    let mut a = a.clone();
    let mut w = identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let best = (r..m).filter(|&i| !a[i][col].is_zero()).min_by_key(|&i| (a[i][col].abs(), i));
            let Some(p) = best else { break };
            a.swap(r, p);
            w.swap(r, p);
            let piv = a[r][col].clone();
            let mut done = true;
            for i in r + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&piv);
                row_axpy(&mut a, i, r, &q);
                row_axpy(&mut w, i, r, &q);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][col].is_zero() {
            continue;
        }
        if a[r][col].is_negative() {
            negate_row(&mut a, r);
            negate_row(&mut w, r);
        }
        let piv = a[r][col].clone();
        for i in 0..r {
            let q = a[i][col].div_floor(&piv);
            row_axpy(&mut a, i, r, &q);
            row_axpy(&mut w, i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    Hermite { h: a, w, pivots }
}

/// Diagonalization `u * a * v = diag(d)`; divisibility of the `d` chain is
/// not enforced.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: Vec<BigInt>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.d.len()
    }
}

pub fn smith(a: &IntMatrix, ncols: usize) -> Smith {
    let m = a.len();
    let n = ncols;
    let mut a = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut d = Vec::new();
    for t in 0..m.min(n) {
        let best = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| (a[i][j].abs(), i, j));
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let piv = a[t][t].clone();
            for i in t + 1..m {
                let q = a[i][t].div_floor(&piv);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&piv);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
            }
            let col_min = (t + 1..m).filter(|&i| !a[i][t].is_zero()).min_by_key(|&i| (a[i][t].abs(), i));
            let row_min = (t + 1..n).filter(|&j| !a[t][j].is_zero()).min_by_key(|&j| (a[t][j].abs(), j));
            match (col_min, row_min) {
                (None, None) => break,
                (Some(i), r) if r.is_none_or(|j| a[i][t].abs() <= a[t][j].abs()) => {
                    a.swap(t, i);
                    u.swap(t, i);
                }
                (_, Some(j)) => {
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut v, t, j);
                }
                _ => unreachable!(),
            }
        }
        if a[t][t].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
        d.push(a[t][t].clone());
    }
    Smith { u, v, d }
}

/// Inverse of a unimodular matrix, via the Hermite form of `[m | I]`.
pub fn unimodular_inverse(mat: &IntMatrix) -> IntMatrix {
    let n = mat.len();
    let h = hermite(mat, n);
    assert_eq!(h.rank(), n, "matrix is not invertible");
    assert!(h.h.iter().enumerate().all(|(i, r)| r[i].is_one()), "matrix is not unimodular");
    // h.h is the identity, so w is the inverse
    h.w
}
