//! Exact dense linear algebra over the scalar field.

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Scalar::zero(); cols]; rows]
}

pub fn identity(k: usize) -> Matrix {
    let mut m = zeros(k, k);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for (k, brow) in b.iter().enumerate() {
            let aik = &a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..cols {
                if !brow[j].is_zero() {
                    out[i][j] = &out[i][j] + &(aik * &brow[j]);
                }
            }
        }
    }
    out
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().flatten().all(Scalar::is_zero)
}

/// Exact inverse by Gauss-Jordan elimination; `None` when singular as a
/// matrix over the rational-function field.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let k = m.len();
    let mut a = m.clone();
    let mut inv = identity(k);
    for col in 0..k {
        let pivot_row = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        let pinv = pivot.inv();
        for j in 0..k {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..k {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..k {
                a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
            }
        }
    }
    Some(inv)
}
