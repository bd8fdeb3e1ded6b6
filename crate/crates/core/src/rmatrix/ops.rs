//! Pointwise checks and derived matrices for a braiding matrix.

use crate::rmatrix::linalg::{self, Matrix};
use crate::rmatrix::{RMatrix, RMatrixError};
use crate::scalar::Scalar;

/// A labelled nonzero entry of a residual; an empty residual list means the
/// identity under test holds exactly.
#[derive(Debug, Clone)]
pub struct EntryResidual {
    pub label: String,
    pub value: Scalar,
}

impl std::fmt::Display for EntryResidual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", self.label, self.value)
    }
}

/// Transpose in the second tensor factor: `(R^t2)^i_j{}^k_l = R^i_j{}^l_k`.
fn transpose_second(r: &RMatrix) -> RMatrix {
    let n = r.n();
    let mut out = RMatrix::new(n, r.normalization());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.set(i, j, k, l, r.get(i, j, l, k).clone());
                }
            }
        }
    }
    out
}

/// Residual of the braid equation `R12 R13 R23 - R23 R13 R12` on the
/// threefold tensor power, reported entrywise with 1-based labels.
pub fn ybe_check(r: &RMatrix) -> Vec<EntryResidual> {
    let n = r.n();
    let dim = n * n * n;
    let mut r12 = linalg::zeros(dim, dim);
    let mut r23 = linalg::zeros(dim, dim);
    let mut r13 = linalg::zeros(dim, dim);
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = r.get(i, j, k, l);
                    if v.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        r12[idx(i, k, m)][idx(j, l, m)] = v.clone();
                        r23[idx(m, i, k)][idx(m, j, l)] = v.clone();
                        r13[idx(i, m, k)][idx(j, m, l)] = v.clone();
                    }
                }
            }
        }
    }
    let lhs = linalg::mat_mul(&linalg::mat_mul(&r12, &r13), &r23);
    let rhs = linalg::mat_mul(&linalg::mat_mul(&r23, &r13), &r12);
    let diff = linalg::mat_sub(&lhs, &rhs);
    let mut residuals = Vec::new();
    for (row, drow) in diff.iter().enumerate() {
        for (col, value) in drow.iter().enumerate() {
            if !value.is_zero() {
                let (a, bc) = (row / (n * n), row % (n * n));
                let (b, c) = (bc / n, bc % n);
                let (d, ef) = (col / (n * n), col % (n * n));
                let (e, f) = (ef / n, ef % n);
                residuals.push(EntryResidual {
                    label: format!(
                        "[({},{},{}),({},{},{})]",
                        a + 1,
                        b + 1,
                        c + 1,
                        d + 1,
                        e + 1,
                        f + 1
                    ),
                    value: value.clone(),
                });
            }
        }
    }
    residuals
}

/// Residual of the real-type condition `conj(R^i_j{}^k_l) = R^l_k{}^j_i`.
pub fn real_type_check(r: &RMatrix) -> Vec<EntryResidual> {
    let n = r.n();
    let mut residuals = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let diff = &r.get(i, j, k, l).conjugate() - r.get(l, k, j, i);
                    if !diff.is_zero() {
                        residuals.push(EntryResidual {
                            label: format!("[{},{},{},{}]", i + 1, j + 1, k + 1, l + 1),
                            value: diff,
                        });
                    }
                }
            }
        }
    }
    residuals
}

/// The second inverse `R~ = ((R^t2)^-1)^t2`; errors when the
/// second-factor transpose is singular.
pub fn second_inverse(r: &RMatrix) -> Result<RMatrix, RMatrixError> {
    let transposed = transpose_second(r);
    let inv = linalg::invert(&transposed.as_operator()).ok_or_else(|| {
        RMatrixError::Singular("second-factor transpose is not invertible".into())
    })?;
    let inv_matrix = RMatrix::from_operator(r.n(), &inv, r.normalization());
    Ok(transpose_second(&inv_matrix))
}

/// The four contraction identities defining the second inverse:
///
/// ```text
/// R^i_a{}^b_k R~^a_j{}^l_b = delta^i_j delta^l_k     (sum over a, b)
/// R~^i_a{}^b_k R^a_j{}^l_b = delta^i_j delta^l_k
/// R^t2 (R~)^t2 = 1          (R~)^t2 R^t2 = 1
/// ```
pub fn second_inverse_residuals(r: &RMatrix, rt: &RMatrix) -> Vec<EntryResidual> {
    let n = r.n();
    let mut residuals = Vec::new();
    let mut push = |family: &str, i: usize, j: usize, k: usize, l: usize, value: Scalar| {
        if !value.is_zero() {
            residuals.push(EntryResidual {
                label: format!("{family}[{},{},{},{}]", i + 1, j + 1, k + 1, l + 1),
                value,
            });
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let expected = if i == j && l == k {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    let mut first = -&expected;
                    let mut second = -&expected;
                    for a in 0..n {
                        for b in 0..n {
                            first = &first + &(r.get(i, a, b, k) * rt.get(a, j, l, b));
                            second = &second + &(rt.get(i, a, b, k) * r.get(a, j, l, b));
                        }
                    }
                    push("contract-left", i, j, k, l, first);
                    push("contract-right", i, j, k, l, second);
                }
            }
        }
    }
    let nt = transpose_second(r).as_operator();
    let rtt = transpose_second(rt).as_operator();
    let eye = linalg::identity(n * n);
    for (family, prod) in [
        ("matrix-left", linalg::mat_mul(&nt, &rtt)),
        ("matrix-right", linalg::mat_mul(&rtt, &nt)),
    ] {
        let diff = linalg::mat_sub(&prod, &eye);
        for (row, drow) in diff.iter().enumerate() {
            for (col, value) in drow.iter().enumerate() {
                if !value.is_zero() {
                    residuals.push(EntryResidual {
                        label: format!("{family}[{},{}]", row + 1, col + 1),
                        value: value.clone(),
                    });
                }
            }
        }
    }
    residuals
}

/// The induced matrix `u^i_j = R~^i_a{}^a_j` (sum over `a`), which
/// normalizes the braided trace: for the standard braiding it is
/// proportional to `diag(1, q^2)`.
pub fn u_matrix(r: &RMatrix) -> Result<Matrix, RMatrixError> {
    let rt = second_inverse(r)?;
    let n = r.n();
    let mut u = linalg::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut sum = Scalar::zero();
            for a in 0..n {
                sum = &sum + rt.get(i, a, a, j);
            }
            u[i][j] = sum;
        }
    }
    Ok(u)
}
