//! Noncommutative polynomial algebras presented by oriented rewrite rules.
//!
//! A [`Presentation`] fixes an ordered generator alphabet, a star structure,
//! and a set of relations; relations are oriented into rewrite rules whose
//! left-hand word is strictly greatest in the weighted degree-lexicographic
//! word order, so that exhaustive rewriting terminates and (once local
//! confluence is checked) computes canonical forms.  [`NcElement`] values are
//! scalar-weighted sums of words kept in canonical form.

mod confluence;
mod element;
mod file;
mod hom;
mod presentation;
mod rewrite;
pub mod shipped;

pub use confluence::{check_local_confluence, Disagreement};
pub use element::NcElement;
pub use file::{emit_alg, parse_alg, AlgFile};
pub use hom::{centrality_check, CoeffMap, HomReport, Morphism};
pub use presentation::{GenInfo, Presentation, PresentationBuilder, Rule};

use crate::expr::ExprError;
use crate::scalar::{Scalar, ScalarError};
use std::collections::BTreeMap;
use thiserror::Error;

/// Index of a generator within its presentation's alphabet.
pub type GenId = u32;

/// A word in the free monoid on the generators.
pub type Word = Vec<GenId>;

/// Scalar-weighted sum of words; absent words have coefficient zero.
pub type TermMap = BTreeMap<Word, Scalar>;

/// Default rewrite-step budget; override per presentation or via the CLI.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

#[derive(Error, Debug)]
pub enum FreeAlgError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has no declared star")]
    StarUndefined(String),
    #[error("star map is not involutive on `{0}`")]
    StarNotInvolutive(String),
    #[error("a relation reduces to a nonzero scalar; the presentation is inconsistent")]
    InconsistentRelation,
    #[error("rule `{0}` rewrites to a word that is not strictly smaller")]
    BadOrientation(String),
    #[error("rule `{0}` does not preserve the graded degree")]
    DegreeMismatch(String),
    #[error("rewriting exceeded the step budget while reducing `{0}`")]
    BudgetExceeded(String),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("presentation file: {0}")]
    File(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Merge `coeff · word` into a term map, dropping cancelled entries.
pub(crate) fn insert_term(map: &mut TermMap, word: Word, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(word) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = &*e.get() + &coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Free product of two term maps (words concatenate; no rewriting).
pub(crate) fn free_mul(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = Vec::with_capacity(wa.len() + wb.len());
            w.extend_from_slice(wa);
            w.extend_from_slice(wb);
            insert_term(&mut out, w, ca * cb);
        }
    }
    out
}

/// Scale a term map by a scalar.
pub(crate) fn scale_terms(a: &TermMap, s: &Scalar) -> TermMap {
    if s.is_zero() {
        return TermMap::new();
    }
    a.iter().map(|(w, c)| (w.clone(), c * s)).collect()
}

/// Sum of two term maps.
pub(crate) fn add_terms(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = a.clone();
    for (w, c) in b {
        insert_term(&mut out, w.clone(), c.clone());
    }
    out
}

/// Difference of two term maps.
pub(crate) fn sub_terms(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = a.clone();
    for (w, c) in b {
        insert_term(&mut out, w.clone(), -c);
    }
    out
}
