//! Local confluence via critical pairs.
//!
//! For every pair of rules whose left-hand sides overlap — a suffix of one
//! matching a prefix of the other, or one contained in the other (which also
//! covers two rules sharing a left-hand side) — reduce the overlap word both
//! ways and fully normalize.  Any difference witnesses a failure of local
//! confluence; since rewriting terminates, an empty report means canonical
//! forms are well defined.

use super::rewrite::{apply_rule_at, normalize_terms};
use super::{sub_terms, FreeAlgError, Presentation, TermMap, Word};

/// A critical pair whose two reductions disagree.
#[derive(Clone, Debug)]
pub struct Disagreement {
    /// The overlap word that reduces two different ways.
    pub word: Word,
    /// Indices of the two rules involved.
    pub rules: (usize, usize),
    /// Normal form of (first reduction) - (second reduction).
    pub difference: TermMap,
}

/// Check all critical pairs with overlap words of length at most `max_len`.
pub fn check_local_confluence(
    pres: &Presentation,
    max_len: usize,
) -> Result<Vec<Disagreement>, FreeAlgError> {
    let rules = pres.rules();
    let mut found = Vec::new();
    let check = |word: &Word,
                     r1: usize,
                     p1: usize,
                     r2: usize,
                     p2: usize,
                     found: &mut Vec<Disagreement>|
     -> Result<(), FreeAlgError> {
        let a = normalize_terms(pres, apply_rule_at(pres, word, &rules[r1], p1))?;
        let b = normalize_terms(pres, apply_rule_at(pres, word, &rules[r2], p2))?;
        let diff = sub_terms(&a, &b);
        if !diff.is_empty() {
            found.push(Disagreement {
                word: word.clone(),
                rules: (r1, r2),
                difference: diff,
            });
        }
        Ok(())
    };

    for (i1, r1) in rules.iter().enumerate() {
        for (i2, r2) in rules.iter().enumerate() {
            let l1 = &r1.lhs;
            let l2 = &r2.lhs;
            // Suffix of `l1` equal to a prefix of `l2`.
            for k in 1..=l1.len().min(l2.len()) {
                if i1 == i2 && k == l1.len() {
                    continue; // a rule trivially agrees with itself
                }
                if l1[l1.len() - k..] != l2[..k] {
                    continue;
                }
                let mut word = l1.clone();
                word.extend_from_slice(&l2[k..]);
                if word.len() > max_len {
                    continue;
                }
                check(&word, i1, 0, i2, l1.len() - k, &mut found)?;
            }
            // `l2` contained in `l1` away from the right edge (the edge case
            // is the k = l2.len() overlap above).
            if l2.len() < l1.len() && l1.len() <= max_len {
                for p in 0..l1.len() - l2.len() {
                    if l1[p..p + l2.len()] == l2[..] {
                        check(l1, i1, 0, i2, p, &mut found)?;
                    }
                }
            }
        }
    }
    Ok(found)
}
