//! Exhaustive rewriting of term maps to canonical form.
//!
//! Rules only ever replace a word by strictly smaller words (in the
//! presentation's word order, which is compatible with concatenation), so the
//! process terminates; a step budget still guards against pathological
//! blow-ups in intermediate term counts.

use super::presentation::Rule;
use super::{insert_term, FreeAlgError, GenId, Presentation, TermMap};

/// Leftmost redex: the smallest position at which some rule's left-hand side
/// occurs, together with the first such rule in presentation order.
pub(crate) fn find_redex(pres: &Presentation, word: &[GenId]) -> Option<(usize, usize)> {
    let rules = pres.rules();
    for pos in 0..word.len() {
        for (ri, rule) in rules.iter().enumerate() {
            let l = rule.lhs.len();
            if pos + l <= word.len() && word[pos..pos + l] == rule.lhs[..] {
                return Some((ri, pos));
            }
        }
    }
    None
}

/// Replace the occurrence of `rule.lhs` at `pos` by the rule's right-hand
/// side, producing the resulting term map (still to be reduced further).
pub(crate) fn apply_rule_at(
    pres: &Presentation,
    word: &[GenId],
    rule: &Rule,
    pos: usize,
) -> TermMap {
    let _ = pres;
    let l = rule.lhs.len();
    debug_assert_eq!(&word[pos..pos + l], &rule.lhs[..]);
    let mut out = TermMap::new();
    for (mid, coeff) in &rule.rhs {
        let mut w = Vec::with_capacity(word.len() - l + mid.len());
        w.extend_from_slice(&word[..pos]);
        w.extend_from_slice(mid);
        w.extend_from_slice(&word[pos + l..]);
        insert_term(&mut out, w, coeff.clone());
    }
    out
}

/// Rewrite every word of `terms` until no rule applies, merging coefficients
/// as words collide.  Fails with [`FreeAlgError::BudgetExceeded`] when the
/// number of rule applications exceeds the presentation's budget.
pub(crate) fn normalize_terms(
    pres: &Presentation,
    terms: TermMap,
) -> Result<TermMap, FreeAlgError> {
    let mut pending = terms;
    pending.retain(|_, c| !c.is_zero());
    let mut done = TermMap::new();
    let mut steps: u64 = 0;
    let budget = pres.budget();
    while let Some((word, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        match find_redex(pres, &word) {
            None => insert_term(&mut done, word, coeff),
            Some((ri, pos)) => {
                steps += 1;
                if steps > budget {
                    return Err(FreeAlgError::BudgetExceeded(pres.word_to_string(&word)));
                }
                let rule = &pres.rules()[ri];
                for (w, c) in apply_rule_at(pres, &word, rule, pos) {
                    insert_term(&mut pending, w, &c * &coeff);
                }
            }
        }
    }
    Ok(done)
}
