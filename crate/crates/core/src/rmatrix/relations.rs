//! Relation sets generated from a braiding matrix: exchange algebras on
//! matrix generators, braided-sphere presentations, and mixed
//! generator/one-form exchange rules for differential calculi.

use crate::freealg::{
    add_terms, free_mul, insert_term, sub_terms, GenId, Presentation, PresentationBuilder, TermMap,
};
use crate::rmatrix::linalg::{self, Matrix};
use crate::rmatrix::{u_matrix, RMatrix, RMatrixError};
use crate::scalar::Scalar;

/// A matrix with entries in a free algebra, used to multiply out operator
/// identities whose coefficients are scalars but whose entries are words.
type TermMatrix = Vec<Vec<TermMap>>;

fn constant_entry(s: &Scalar) -> TermMap {
    let mut t = TermMap::new();
    if !s.is_zero() {
        t.insert(Vec::new(), s.clone());
    }
    t
}

fn gen_entry(g: GenId) -> TermMap {
    let mut t = TermMap::new();
    t.insert(vec![g], Scalar::one());
    t
}

fn tmat_zeros(rows: usize, cols: usize) -> TermMatrix {
    vec![vec![TermMap::new(); cols]; rows]
}

fn tmat_from_scalars(m: &Matrix) -> TermMatrix {
    m.iter()
        .map(|row| row.iter().map(constant_entry).collect())
        .collect()
}

/// Entry products multiply left factors first, so words read in the order
/// the matrices are written.
fn tmat_mul(a: &TermMatrix, b: &TermMatrix) -> TermMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = tmat_zeros(rows, cols);
    for i in 0..rows {
        for (k, brow) in b.iter().enumerate() {
            if a[i][k].is_empty() {
                continue;
            }
            for j in 0..cols {
                if !brow[j].is_empty() {
                    let prod = free_mul(&a[i][k], &brow[j]);
                    out[i][j] = add_terms(&out[i][j], &prod);
                }
            }
        }
    }
    out
}

fn tmat_sub(a: &TermMatrix, b: &TermMatrix) -> TermMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| sub_terms(x, y)).collect())
        .collect()
}

/// `u (x) 1` with algebra entries: `[(i,k),(j,l)] = u^i_j delta^k_l`.
fn leg_one(n: usize, gen: &dyn Fn(usize, usize) -> GenId) -> TermMatrix {
    let mut m = tmat_zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                m[i * n + k][j * n + k] = gen_entry(gen(i, j));
            }
        }
    }
    m
}

/// `1 (x) u` with algebra entries: `[(i,k),(j,l)] = delta^i_j u^k_l`.
fn leg_two(n: usize, gen: &dyn Fn(usize, usize) -> GenId) -> TermMatrix {
    let mut m = tmat_zeros(n * n, n * n);
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                m[i * n + k][i * n + l] = gen_entry(gen(k, l));
            }
        }
    }
    m
}

/// The flipped operator `R21[(i,k),(j,l)] = R^k_l{}^i_j`.
fn flipped_operator(r: &RMatrix) -> Matrix {
    let n = r.n();
    let mut m = linalg::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    m[i * n + k][j * n + l] = r.get(k, l, i, j).clone();
                }
            }
        }
    }
    m
}

/// Generator names for the matrix coordinates `t^i_j` in row-major order.
/// Two-dimensional instances use the traditional `a, b, c, d`.
fn matrix_gen_names(n: usize) -> Vec<String> {
    if n == 2 {
        vec!["a".into(), "b".into(), "c".into(), "d".into()]
    } else {
        let mut names = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                names.push(format!("t{i}_{j}"));
            }
        }
        names
    }
}

/// Generator names for a reflection-equation algebra in row-major order;
/// the two-dimensional instance uses `α, β, γ, δ`.
fn reflection_gen_names(n: usize) -> Vec<String> {
    if n == 2 {
        vec!["α".into(), "β".into(), "γ".into(), "δ".into()]
    } else {
        let mut names = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                names.push(format!("u{i}_{j}"));
            }
        }
        names
    }
}

/// Degree-zero and degree-one generator names for the mixed exchange
/// relations consumed by the calculus layer: degree-zero coordinates in
/// row-major order followed by one-forms `e_a, e_b, e_c, e_d` (row-major
/// `e^alpha{}_beta` for sizes other than two).
pub fn graded_gen_names(n: usize, coordinates: &[String]) -> Vec<String> {
    let mut names: Vec<String> = coordinates.to_vec();
    if n == 2 {
        names.extend(["e_a".into(), "e_b".into(), "e_c".into(), "e_d".into()]);
    } else {
        for i in 1..=n {
            for j in 1..=n {
                names.push(format!("e{i}_{j}"));
            }
        }
    }
    names
}

/// The exchange algebra `R t1 t2 = t2 t1 R` on matrix coordinates `t^i_j`,
/// oriented into a rewriting presentation.  For `n = 2`,
/// `with_determinant` adjoins the central determinant relation
/// `a d - q^-1 b c = 1`.
pub fn frt_relations(r: &RMatrix, with_determinant: bool) -> Result<Presentation, RMatrixError> {
    let n = r.n();
    if with_determinant && n != 2 {
        return Err(RMatrixError::UnsupportedSize(n));
    }
    let names = matrix_gen_names(n);
    let mut builder = PresentationBuilder::new(if with_determinant {
        "frt-det"
    } else {
        "frt"
    });
    for name in &names {
        builder = builder.gen(name);
    }
    let gen = |i: usize, j: usize| (i * n + j) as GenId;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut rel = TermMap::new();
                    for a in 0..n {
                        for b in 0..n {
                            let lhs_coeff = r.get(i, a, k, b);
                            if !lhs_coeff.is_zero() {
                                insert_term(
                                    &mut rel,
                                    vec![gen(a, j), gen(b, l)],
                                    lhs_coeff.clone(),
                                );
                            }
                            let rhs_coeff = r.get(a, j, b, l);
                            if !rhs_coeff.is_zero() {
                                insert_term(&mut rel, vec![gen(k, b), gen(i, a)], -rhs_coeff);
                            }
                        }
                    }
                    if !rel.is_empty() {
                        builder = builder.relation_terms(rel);
                    }
                }
            }
        }
    }
    if with_determinant {
        builder = builder.relation("a*d - q^-1*b*c = 1");
    }
    Ok(builder.build()?)
}

/// The reflection-equation algebra `u2 R21 u1 R = R21 u1 R u2` on matrix
/// generators `u^i_j`, oriented into a rewriting presentation.  The
/// two-dimensional instance carries the star structure `α* = α`, `β* = γ`,
/// `δ* = δ`.
pub fn reflection_relations(r: &RMatrix) -> Result<Presentation, RMatrixError> {
    let n = r.n();
    let names = reflection_gen_names(n);
    let mut builder = PresentationBuilder::new("reflection");
    for name in &names {
        builder = builder.gen(name);
    }
    if n == 2 {
        builder = builder
            .star_self("α")?
            .star_pair("β", "γ")?
            .star_self("δ")?;
    }
    let gen = |i: usize, j: usize| (i * n + j) as GenId;
    let m = tmat_from_scalars(&r.as_operator());
    let m21 = tmat_from_scalars(&flipped_operator(r));
    let u1 = leg_one(n, &gen);
    let u2 = leg_two(n, &gen);
    let lhs = tmat_mul(&tmat_mul(&tmat_mul(&u2, &m21), &u1), &m);
    let rhs = tmat_mul(&tmat_mul(&tmat_mul(&m21, &u1), &m), &u2);
    let residual = tmat_sub(&lhs, &rhs);
    for row in residual {
        for rel in row {
            if !rel.is_empty() {
                builder = builder.relation_terms(rel);
            }
        }
    }
    Ok(builder.build()?)
}

/// A braided sphere: the entries of `e^2 - e` for the hermitian matrix
/// `e = (x, b; b*, a)` with `x` eliminated by the trace normalization
/// `trace(e u) = 1 + λ`, together with the oriented presentation they
/// generate on `a, b, bs`.
#[derive(Debug, Clone)]
pub struct BraidedSphere {
    /// Entries of `e^2 - e` in row-major order, as raw (unreduced) terms.
    pub relations: Vec<TermMap>,
    /// The star presentation generated by those entries.
    pub presentation: Presentation,
    /// Ratio `u^2_2 / u^1_1` of the induced diagonal matrix; the top-left
    /// projector entry is `x = (1 + λ) - ratio * a`.
    pub ratio: Scalar,
}

/// Build the braided sphere attached to a braiding matrix at deformation
/// parameter `lambda`.  Requires `n = 2` and a diagonal induced matrix `u`.
pub fn braided_sphere_relations(
    r: &RMatrix,
    lambda: &Scalar,
) -> Result<BraidedSphere, RMatrixError> {
    let n = r.n();
    if n != 2 {
        return Err(RMatrixError::UnsupportedSize(n));
    }
    let u = u_matrix(r)?;
    for (row, urow) in u.iter().enumerate() {
        for (col, entry) in urow.iter().enumerate() {
            if row != col && !entry.is_zero() {
                return Err(RMatrixError::NotDiagonal {
                    row: row + 1,
                    col: col + 1,
                    value: entry.to_string(),
                });
            }
        }
    }
    if u[0][0].is_zero() {
        return Err(RMatrixError::DegenerateUnit);
    }
    let ratio = &u[1][1] / &u[0][0];

    // Generators a(0), b(1), bs(2); x = (1 + λ) - ratio * a.
    let one_plus_lambda = &Scalar::one() + lambda;
    let mut x = constant_entry(&one_plus_lambda);
    insert_term(&mut x, vec![0], -&ratio);
    let e: TermMatrix = vec![
        vec![x, gen_entry(1)],
        vec![gen_entry(2), gen_entry(0)],
    ];
    let residual = tmat_sub(&tmat_mul(&e, &e), &e);
    let mut relations = Vec::with_capacity(4);
    let mut builder = PresentationBuilder::new("braided-sphere")
        .gen("a")
        .gen("b")
        .gen("bs")
        .star_self("a")?
        .star_pair("b", "bs")?;
    for row in residual {
        for rel in row {
            if !rel.is_empty() {
                builder = builder.relation_terms(rel.clone());
            }
            relations.push(rel);
        }
    }
    Ok(BraidedSphere {
        relations,
        presentation: builder.build()?,
        ratio,
    })
}

/// Solve a mixed relation set for its form-leading words.
///
/// Each input relation mixes words `[form, coordinate]` (generator id of the
/// first letter at least `form_threshold`) with words `[coordinate, form]`.
/// Treating the form-leading words as unknowns yields a square linear system
/// over the scalar field; the solution rewrites every form-leading word as a
/// combination of coordinate-leading words, i.e. genuine bimodule rules.
/// Errors when the system is not square or not invertible.
pub fn orient_mixed_relations(
    rels: &[TermMap],
    form_threshold: GenId,
) -> Result<Vec<TermMap>, RMatrixError> {
    use std::collections::BTreeMap;
    let mut unknowns: BTreeMap<Vec<GenId>, usize> = BTreeMap::new();
    let live: Vec<&TermMap> = rels.iter().filter(|r| !r.is_empty()).collect();
    for rel in &live {
        for word in rel.keys() {
            if word.first().is_some_and(|&g| g >= form_threshold) {
                let next = unknowns.len();
                unknowns.entry(word.clone()).or_insert(next);
            }
        }
    }
    if unknowns.len() != live.len() {
        return Err(RMatrixError::Singular(format!(
            "mixed system has {} equations for {} form-leading words",
            live.len(),
            unknowns.len()
        )));
    }
    let dim = unknowns.len();
    let mut coeffs = linalg::zeros(dim, dim);
    let mut knowns: Vec<TermMap> = vec![TermMap::new(); dim];
    for (eq, rel) in live.iter().enumerate() {
        for (word, coeff) in rel.iter() {
            match unknowns.get(word) {
                Some(&col) => coeffs[eq][col] = coeff.clone(),
                // Move known words to the right-hand side.
                None => insert_term(&mut knowns[eq], word.clone(), -coeff),
            }
        }
    }
    let inverse = linalg::invert(&coeffs).ok_or_else(|| {
        RMatrixError::Singular("mixed system does not determine the form-leading words".into())
    })?;
    let mut out = Vec::with_capacity(dim);
    for (word, &col) in &unknowns {
        let mut rule = TermMap::new();
        insert_term(&mut rule, word.clone(), Scalar::one());
        for (eq, known) in knowns.iter().enumerate() {
            let factor = &inverse[col][eq];
            if factor.is_zero() {
                continue;
            }
            for (kword, kcoeff) in known {
                insert_term(&mut rule, kword.clone(), -&(factor * kcoeff));
            }
        }
        out.push(rule);
    }
    Ok(out)
}

fn require_quantum_group(r: &RMatrix) -> Result<(), RMatrixError> {
    match r.normalization() {
        crate::rmatrix::Normalization::QuantumGroup => Ok(()),
        other => Err(RMatrixError::NormalizationRequired(other)),
    }
}

/// Mixed exchange relations between one-forms `e^m{}_n` and
/// reflection-algebra generators `u^a{}_b`:
///
/// ```text
/// R^m_α{}^a_d (R^-1)^β_n{}^d_c  e_m{}^n u^c_b  =  u^a_c e_m{}^n  R^m_α{}^c_d R^d_b{}^β_n
/// ```
///
/// Returns the 16 differences (left minus right) indexed by
/// `(α, β, a, b)` in row-major order over words whose generator ids are
/// `u^a_b -> 2a + b` and `e^α_β -> 4 + 2α + β` (0-based indices).
/// Requires quantum-group normalization.
pub fn eq9_relations(r: &RMatrix) -> Result<Vec<TermMap>, RMatrixError> {
    require_quantum_group(r)?;
    let n = r.n();
    if n != 2 {
        return Err(RMatrixError::UnsupportedSize(n));
    }
    let m = r.as_operator();
    let minv = linalg::invert(&m)
        .ok_or_else(|| RMatrixError::Singular("braiding matrix is not invertible".into()))?;
    // (R^-1)^i_j{}^k_l lives at minv[(i,k),(j,l)].
    let rinv = |i: usize, j: usize, k: usize, l: usize| &minv[i * n + k][j * n + l];
    let ugen = |a: usize, b: usize| (a * n + b) as GenId;
    let egen = |al: usize, be: usize| (n * n + al * n + be) as GenId;

    let mut out = Vec::with_capacity(16);
    for alpha in 0..n {
        for beta in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let mut rel = TermMap::new();
                    for mm in 0..n {
                        for nn in 0..n {
                            for d in 0..n {
                                for c in 0..n {
                                    let left =
                                        r.get(mm, alpha, a, d) * rinv(beta, nn, d, c);
                                    if !left.is_zero() {
                                        insert_term(
                                            &mut rel,
                                            vec![egen(mm, nn), ugen(c, b)],
                                            left,
                                        );
                                    }
                                    let right = r.get(mm, alpha, c, d) * r.get(d, b, beta, nn);
                                    if !right.is_zero() {
                                        insert_term(
                                            &mut rel,
                                            vec![ugen(a, c), egen(mm, nn)],
                                            -&right,
                                        );
                                    }
                                }
                            }
                        }
                    }
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}

/// Mixed exchange relations between one-forms and matrix coordinates
/// `t^a_b` of the exchange algebra:
///
/// ```text
/// e_α{}^β t^a_b  =  t^a_c e_m{}^n R^m_α{}^c_d R^d_b{}^β_n
/// ```
///
/// Returns the 16 differences (left minus right) indexed by
/// `(α, β, a, b)` in row-major order, with the same generator-id
/// convention as [`eq9_relations`].  Requires quantum-group normalization.
pub fn frt_calculus_relations(r: &RMatrix) -> Result<Vec<TermMap>, RMatrixError> {
    require_quantum_group(r)?;
    let n = r.n();
    if n != 2 {
        return Err(RMatrixError::UnsupportedSize(n));
    }
    let tgen = |a: usize, b: usize| (a * n + b) as GenId;
    let egen = |al: usize, be: usize| (n * n + al * n + be) as GenId;
    let mut out = Vec::with_capacity(16);
    for alpha in 0..n {
        for beta in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let mut rel = TermMap::new();
                    insert_term(
                        &mut rel,
                        vec![egen(alpha, beta), tgen(a, b)],
                        Scalar::one(),
                    );
                    for c in 0..n {
                        for d in 0..n {
                            for mm in 0..n {
                                for nn in 0..n {
                                    let coeff =
                                        r.get(mm, alpha, c, d) * r.get(d, b, beta, nn);
                                    if !coeff.is_zero() {
                                        insert_term(
                                            &mut rel,
                                            vec![tgen(a, c), egen(mm, nn)],
                                            -&coeff,
                                        );
                                    }
                                }
                            }
                        }
                    }
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}
