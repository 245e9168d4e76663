//! Dense exact linear algebra over `Q`: row reduction, rank, nullspace, solve.
//!
//! Matrices are row-major `Vec<Vec<Q>>`. Sizes in this crate stay below a few
//! hundred rows, so plain Gauss-Jordan elimination is sufficient.

use num_traits::{One, Zero};

use crate::rational::Q;

pub type QMatrix = Vec<Vec<Q>>;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns in increasing order.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let (pivot_row, row) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row).skip(c) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMatrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Basis of `{x : m x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(m: &QMatrix, ncols: usize) -> Vec<Vec<Q>> {
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[row][f];
            }
            v
        })
        .collect()
}

/// Some solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &QMatrix, b: &[Q]) -> Option<Vec<Q>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][ncols];
    }
    Some(x)
}

/// Solves `a X = B` for many right-hand sides at once (columns of `rhs`
/// given as separate vectors). Returns `None` if any system is inconsistent.
pub fn solve_many(a: &QMatrix, rhs: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let k = rhs.len();
    let mut aug: QMatrix = (0..nrows)
        .map(|i| {
            let mut r = a[i].clone();
            r.extend(rhs.iter().map(|b| b[i]));
            r
        })
        .collect();
    let pivots = rref_partial(&mut aug, ncols);
    for row in aug.iter().skip(pivots.len()) {
        if row[ncols..].iter().any(|x| !x.is_zero()) {
            return None;
        }
    }
    Some(
        (0..k)
            .map(|j| {
                let mut x = vec![Q::zero(); ncols];
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = aug[row][ncols + j];
                }
                x
            })
            .collect(),
    )
}

/// Like [`rref`], but only chooses pivots among the first `pivot_cols` columns.
fn rref_partial(m: &mut QMatrix, pivot_cols: usize) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for j in c..cols {
                    row[j] -= f * pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Inverse of a square matrix, if nonsingular.
pub fn invert(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let identity: Vec<Vec<Q>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    let cols = solve_many(a, &identity)?;
    if rank(a) < n {
        return None;
    }
    // `cols[j]` is column j of the inverse.
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect(),
    )
}

/// A maximal linearly independent subset of `vectors`, in row-echelon form.
pub fn row_space_basis(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut work: QMatrix = vectors.to_vec();
    let pivots = rref(&mut work);
    work.truncate(pivots.len());
    work
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Q>], v: &[Q]) -> bool {
    let mut rows = basis.to_vec();
    let r0 = rank(&rows);
    rows.push(v.to_vec());
    rank(&rows) == r0
}

pub fn mat_vec(a: &QMatrix, x: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(Q::zero(), |acc, (p, q)| acc + p * q))
        .collect()
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + row[k] * b[k][j]))
                .collect()
        })
        .collect()
}

/// Incrementally built echelon basis of a subspace of `Q^n`.
///
/// Each stored row has a 1 at its pivot and zeros at the pivots of all rows
/// inserted before it, so reducing in insertion order clears every pivot.
#[derive(Debug, Clone, Default)]
pub struct EchelonSpan {
    rows: Vec<(usize, Vec<Q>)>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let f = v[*p];
            if !f.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= inv;
        }
        self.rows.push((p, r));
        true
    }
}
