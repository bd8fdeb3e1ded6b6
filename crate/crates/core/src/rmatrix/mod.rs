//! Braiding matrices on an `n`-dimensional space and the relation sets they
//! generate.
//!
//! An [`RMatrix`] stores the `n^4` coefficients `R^i_j{}^k_l` of an operator
//! on the twofold tensor product, viewed as an `n^2 x n^2` matrix with row
//! index `(i,k)` and column index `(j,l)`.  Every coefficient is an exact
//! [`Scalar`].  A matrix carries a [`Normalization`] tag: `Hecke` for the
//! convention in which the standard two-dimensional instance has entries
//! `q, 1, q - q^-1`, and `QuantumGroup` for the rescaled convention required
//! by the differential-calculus constructors.
//!
//! On-disk format (`.rmx`): a line `n <size>`, a line
//! `normalization <hecke|quantum-group>`, then sparse entries
//! `R[i,j,k,l] = <scalar expression>` with 1-based indices; `#` starts a
//! comment.  Omitted entries are zero.

mod linalg;
mod ops;
mod relations;

use std::fmt;

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::expr::ExprError;
use crate::freealg::FreeAlgError;
use crate::scalar::Scalar;

pub use linalg::{identity as identity_matrix, invert, is_zero_matrix, mat_mul, mat_sub, Matrix};
pub use ops::{
    real_type_check, second_inverse, second_inverse_residuals, u_matrix, ybe_check, EntryResidual,
};
pub use relations::{
    braided_sphere_relations, eq9_relations, frt_calculus_relations, frt_relations,
    graded_gen_names, orient_mixed_relations, reflection_relations, BraidedSphere,
};

/// Scaling convention attached to a braiding matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Convention with eigenvalues `q`, `-q^-1` for the standard instance.
    Hecke,
    /// The Hecke matrix rescaled by `q^(-1/2)`; required by the calculus
    /// relation generators.
    QuantumGroup,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::Hecke => write!(f, "hecke"),
            Normalization::QuantumGroup => write!(f, "quantum-group"),
        }
    }
}

/// Errors from braiding-matrix constructors and relation generators.
#[derive(Debug, Error)]
pub enum RMatrixError {
    #[error("line {line}: {message}")]
    File { line: usize, message: String },
    #[error("line {line}: {source}")]
    Expr {
        line: usize,
        #[source]
        source: ExprError,
    },
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("operation requires quantum-group normalization, found {0}")]
    NormalizationRequired(Normalization),
    #[error("expected a diagonal induced matrix, found entry u[{row}][{col}] = {value}")]
    NotDiagonal { row: usize, col: usize, value: String },
    #[error("induced matrix entry u[0][0] is zero; cannot normalize")]
    DegenerateUnit,
    #[error("relation generator only supports n = 2, found n = {0}")]
    UnsupportedSize(usize),
    #[error(transparent)]
    Algebra(#[from] FreeAlgError),
}

/// An exact braiding matrix `R^i_j{}^k_l` on an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix {
    n: usize,
    entries: Vec<Scalar>,
    normalization: Normalization,
}

impl RMatrix {
    /// The zero matrix of the given size.
    pub fn new(n: usize, normalization: Normalization) -> RMatrix {
        RMatrix {
            n,
            entries: vec![Scalar::zero(); n * n * n * n],
            normalization,
        }
    }

    /// The identity braiding `R^i_j{}^k_l = delta^i_j delta^k_l`.
    pub fn identity(n: usize, normalization: Normalization) -> RMatrix {
        let mut r = RMatrix::new(n, normalization);
        for i in 0..n {
            for k in 0..n {
                r.set(i, i, k, k, Scalar::one());
            }
        }
        r
    }

    fn index(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        debug_assert!(i < self.n && j < self.n && k < self.n && l < self.n);
        ((i * self.n + j) * self.n + k) * self.n + l
    }

    /// Coefficient `R^i_j{}^k_l` (0-based indices).
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.entries[self.index(i, j, k, l)]
    }

    /// Overwrite coefficient `R^i_j{}^k_l` (0-based indices).
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: Scalar) {
        let idx = self.index(i, j, k, l);
        self.entries[idx] = value;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    /// View as an `n^2 x n^2` matrix with row `(i,k)`, column `(j,l)`.
    pub fn as_operator(&self) -> Matrix {
        let n = self.n;
        let mut m = linalg::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        m[i * n + k][j * n + l] = self.get(i, j, k, l).clone();
                    }
                }
            }
        }
        m
    }

    /// Rebuild from an `n^2 x n^2` operator matrix (row `(i,k)`, column `(j,l)`).
    pub fn from_operator(n: usize, m: &Matrix, normalization: Normalization) -> RMatrix {
        let mut r = RMatrix::new(n, normalization);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        r.set(i, j, k, l, m[i * n + k][j * n + l].clone());
                    }
                }
            }
        }
        r
    }

    /// Rescale a Hecke-normalized matrix by `q^(-1/2)` to quantum-group
    /// normalization.  Already-converted matrices are returned unchanged.
    pub fn to_quantum_group(&self) -> RMatrix {
        match self.normalization {
            Normalization::QuantumGroup => self.clone(),
            Normalization::Hecke => {
                let c = Scalar::qhalf_pow(-1);
                RMatrix {
                    n: self.n,
                    entries: self.entries.iter().map(|e| &c * e).collect(),
                    normalization: Normalization::QuantumGroup,
                }
            }
        }
    }

    /// Parse the `.rmx` text format.
    pub fn parse_rmx(src: &str) -> Result<RMatrix, RMatrixError> {
        let mut n: Option<usize> = None;
        let mut normalization: Option<Normalization> = None;
        let mut sparse: Vec<(usize, [usize; 4], Scalar)> = Vec::new();
        for (lineno, raw) in src.lines().enumerate() {
            let line = lineno + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            if let Some(rest) = text.strip_prefix("n ") {
                let size: usize = rest.trim().parse().map_err(|_| RMatrixError::File {
                    line,
                    message: format!("invalid size `{}`", rest.trim()),
                })?;
                if size == 0 {
                    return Err(RMatrixError::File {
                        line,
                        message: "size must be positive".into(),
                    });
                }
                n = Some(size);
            } else if let Some(rest) = text.strip_prefix("normalization ") {
                normalization = Some(match rest.trim() {
                    "hecke" => Normalization::Hecke,
                    "quantum-group" => Normalization::QuantumGroup,
                    other => {
                        return Err(RMatrixError::File {
                            line,
                            message: format!(
                                "unknown normalization `{other}` (expected hecke or quantum-group)"
                            ),
                        })
                    }
                });
            } else if let Some(rest) = text.strip_prefix("R[") {
                let (idx_part, value_part) =
                    rest.split_once("=").ok_or_else(|| RMatrixError::File {
                        line,
                        message: "expected `R[i,j,k,l] = <expr>`".into(),
                    })?;
                let idx_part = idx_part.trim().strip_suffix(']').ok_or_else(|| {
                    RMatrixError::File {
                        line,
                        message: "missing `]` after indices".into(),
                    }
                })?;
                let indices: Vec<usize> = idx_part
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| RMatrixError::File {
                        line,
                        message: format!("invalid index list `{idx_part}`"),
                    })?;
                if indices.len() != 4 {
                    return Err(RMatrixError::File {
                        line,
                        message: format!("expected 4 indices, found {}", indices.len()),
                    });
                }
                if indices.iter().any(|&ix| ix == 0) {
                    return Err(RMatrixError::File {
                        line,
                        message: "indices are 1-based".into(),
                    });
                }
                let value = crate::expr::scalar_from_str(value_part.trim())
                    .map_err(|source| RMatrixError::Expr { line, source })?;
                sparse.push((
                    line,
                    [indices[0] - 1, indices[1] - 1, indices[2] - 1, indices[3] - 1],
                    value,
                ));
            } else {
                return Err(RMatrixError::File {
                    line,
                    message: format!("unrecognized directive `{text}`"),
                });
            }
        }
        let n = n.ok_or(RMatrixError::File {
            line: 0,
            message: "missing `n <size>` directive".into(),
        })?;
        let normalization = normalization.ok_or(RMatrixError::File {
            line: 0,
            message: "missing `normalization` directive".into(),
        })?;
        let mut r = RMatrix::new(n, normalization);
        for (line, [i, j, k, l], value) in sparse {
            if i >= n || j >= n || k >= n || l >= n {
                return Err(RMatrixError::File {
                    line,
                    message: format!("index out of range for n = {n}"),
                });
            }
            r.set(i, j, k, l, value);
        }
        Ok(r)
    }

    /// Serialize to the `.rmx` text format (sparse, nonzero entries only).
    pub fn emit_rmx(&self) -> String {
        let mut out = format!("n {}\nnormalization {}\n", self.n, self.normalization);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    for l in 0..self.n {
                        let v = self.get(i, j, k, l);
                        if !v.is_zero() {
                            out.push_str(&format!(
                                "R[{},{},{},{}] = {}\n",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1,
                                v
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

macro_rules! shipped_rmx {
    ($(#[$doc:meta])* $name:ident, $file:literal) => {
        $(#[$doc])*
        pub fn $name() -> RMatrix {
            static CACHE: Lazy<RMatrix> = Lazy::new(|| {
                RMatrix::parse_rmx(include_str!(concat!("../../data/", $file)))
                    .unwrap_or_else(|e| panic!("shipped matrix {}: {e}", $file))
            });
            CACHE.clone()
        }
    };
}

shipped_rmx!(
    /// The standard two-dimensional braiding in Hecke normalization:
    /// diagonal entries `q, 1, 1, q` plus one off-diagonal `q - q^-1`.
    standard,
    "standard.rmx"
);

shipped_rmx!(
    /// A diagonal braiding `R^i_j{}^k_l = r_(ik) delta^i_j delta^k_l` with
    /// `r = (1, 1, 1, t^-2)`; real-type and a solution of the braid
    /// equation, independent of `q`.
    t_diagonal,
    "tdiag.rmx"
);

/// Names of the shipped braiding matrices, for file-less lookup.
pub fn shipped_names() -> &'static [&'static str] {
    &["standard", "tdiag"]
}

/// Look up a shipped braiding matrix by name (with or without `.rmx`).
pub fn shipped(name: &str) -> Option<RMatrix> {
    match name.trim_end_matches(".rmx") {
        "standard" => Some(standard()),
        "tdiag" => Some(t_diagonal()),
        _ => None,
    }
}
