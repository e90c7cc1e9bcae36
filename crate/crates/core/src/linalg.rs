//! Dense exact linear algebra over a [`FieldDescriptor`].
//!
//! Matrices are row-major `Vec<Vec<Scalar>>`. Sizes in this crate stay in
//! the hundreds, so plain Gauss-Jordan elimination with zero-skipping is
//! enough.

use crate::field::{FieldDescriptor, Scalar};

pub type ScalarMatrix = Vec<Vec<Scalar>>;

/// Reduces `m` in place to reduced row echelon form and returns the pivot columns.
/// Zero rows are removed.
pub fn rref(m: &mut ScalarMatrix) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in m[row][col..].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    other[c] = &other[c] - &(&factor * pv);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(m: &ScalarMatrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of `{v : m v = 0}` for an `r x n` matrix, one vector per free column.
pub fn kernel(m: &ScalarMatrix, n: usize, field: FieldDescriptor) -> Vec<Vec<Scalar>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Solves `a x = b` for every column of `b`. Returns `Err(k)` with the first
/// inconsistent right-hand side column. Free variables are set to zero.
pub fn solve(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    n: usize,
    field: FieldDescriptor,
) -> Result<ScalarMatrix, usize> {
    let nrhs = b.first().map_or(0, |r| r.len());
    let mut aug: ScalarMatrix = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    let pivots = rref(&mut aug);
    if let Some(row) = pivots.iter().position(|&c| c >= n) {
        let col = pivots[row] - n;
        return Err(col);
    }
    let mut x = vec![vec![field.zero(); nrhs]; n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][n..].to_vec();
    }
    Ok(x)
}

/// Determinant of a square matrix.
pub fn det(m: &ScalarMatrix, field: FieldDescriptor) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = field.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if p != col {
            a.swap(p, col);
            acc = -&acc;
        }
        acc = &acc * &a[col][col];
        let inv = a[col][col].inv().expect("pivot is nonzero");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let pivot = a[col][col..n].to_vec();
            for (x, p) in a[r][col..n].iter_mut().zip(&pivot) {
                *x = &*x - &(&f * p);
            }
        }
    }
    acc
}
