//! Elements of a presented algebra, kept in canonical (fully rewritten) form.

use super::rewrite::normalize_terms;
use super::{
    add_terms, free_mul, insert_term, scale_terms, sub_terms, FreeAlgError, Presentation, TermMap,
    Word,
};
use crate::expr;
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An element of a presented algebra: a scalar-weighted sum of irreducible
/// words together with the presentation it lives in.
#[derive(Clone, Debug)]
pub struct NcElement {
    pres: Presentation,
    terms: TermMap,
}

impl PartialEq for NcElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.pres.same(&other.pres), "comparing across presentations");
        self.terms == other.terms
    }
}

impl Eq for NcElement {}

impl NcElement {
    pub fn zero(pres: &Presentation) -> Self {
        NcElement {
            pres: pres.clone(),
            terms: TermMap::new(),
        }
    }

    pub fn one(pres: &Presentation) -> Self {
        NcElement::scalar(pres, Scalar::one())
    }

    pub fn scalar(pres: &Presentation, s: Scalar) -> Self {
        let mut terms = TermMap::new();
        insert_term(&mut terms, Vec::new(), s);
        NcElement {
            pres: pres.clone(),
            terms,
        }
    }

    /// The generator with the given (display or alias) name.
    pub fn gen(pres: &Presentation, name: &str) -> Result<Self, FreeAlgError> {
        let id = pres
            .gen_id(name)
            .ok_or_else(|| FreeAlgError::UnknownGenerator(name.to_owned()))?;
        let mut terms = TermMap::new();
        terms.insert(vec![id], Scalar::one());
        Ok(NcElement {
            pres: pres.clone(),
            terms,
        })
    }

    /// Canonical form of an arbitrary term map.
    pub fn from_terms(pres: &Presentation, terms: TermMap) -> Result<Self, FreeAlgError> {
        Ok(NcElement {
            pres: pres.clone(),
            terms: normalize_terms(pres, terms)?,
        })
    }

    /// Parse and canonicalize an expression in this presentation.
    pub fn parse(pres: &Presentation, src: &str) -> Result<Self, FreeAlgError> {
        let value = expr::eval_str(src, pres)?;
        NcElement::from_terms(pres, value)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn terms(&self) -> &TermMap {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coeff(&self, word: &[u32]) -> Scalar {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// The scalar value, if the element is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        expr::as_scalar(&self.terms)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        NcElement {
            pres: self.pres.clone(),
            terms: scale_terms(&self.terms, s),
        }
    }

    /// Product in the algebra (concatenate, then rewrite to canonical form).
    pub fn mul(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.check_same(other)?;
        NcElement::from_terms(&self.pres, free_mul(&self.terms, &other.terms))
    }

    pub fn pow(&self, n: u32) -> Result<Self, FreeAlgError> {
        let mut acc = NcElement::one(&self.pres);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Star (antilinear antihomomorphism), in canonical form.
    pub fn star(&self) -> Result<Self, FreeAlgError> {
        let starred = self.pres.star_terms_free(&self.terms)?;
        NcElement::from_terms(&self.pres, starred)
    }

    /// `self * other - p * other * self`, in canonical form.
    pub fn bracket(&self, other: &Self, p: &Scalar) -> Result<Self, FreeAlgError> {
        self.check_same(other)?;
        let fwd = free_mul(&self.terms, &other.terms);
        let back = scale_terms(&free_mul(&other.terms, &self.terms), p);
        NcElement::from_terms(&self.pres, sub_terms(&fwd, &back))
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.bracket(other, &Scalar::one())
    }

    /// Re-run rewriting (a no-op on well-formed elements; used by tests to
    /// confirm idempotence).
    pub fn renormalize(&self) -> Result<Self, FreeAlgError> {
        NcElement::from_terms(&self.pres, self.terms.clone())
    }

    fn check_same(&self, other: &Self) -> Result<(), FreeAlgError> {
        if self.pres.same(&other.pres) {
            Ok(())
        } else {
            Err(FreeAlgError::PresentationMismatch)
        }
    }
}

impl Add for &NcElement {
    type Output = NcElement;
    fn add(self, rhs: &NcElement) -> NcElement {
        assert!(self.pres.same(&rhs.pres), "adding across presentations");
        NcElement {
            pres: self.pres.clone(),
            terms: add_terms(&self.terms, &rhs.terms),
        }
    }
}

impl Sub for &NcElement {
    type Output = NcElement;
    fn sub(self, rhs: &NcElement) -> NcElement {
        assert!(self.pres.same(&rhs.pres), "subtracting across presentations");
        NcElement {
            pres: self.pres.clone(),
            terms: sub_terms(&self.terms, &rhs.terms),
        }
    }
}

impl Neg for &NcElement {
    type Output = NcElement;
    fn neg(self) -> NcElement {
        NcElement {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&terms_to_string(&self.pres, &self.terms))
    }
}

/// Render a term map with words in descending word order, e.g.
/// `q^2*a*b - λ*b`.
pub(crate) fn terms_to_string(pres: &Presentation, terms: &TermMap) -> String {
    if terms.is_empty() {
        return "0".to_owned();
    }
    let mut words: Vec<&Word> = terms.keys().collect();
    words.sort_by(|a, b| pres.word_cmp(b, a));
    let mut out = String::new();
    for (k, w) in words.iter().enumerate() {
        let c = &terms[*w];
        let (sign_neg, mag) = if c.display_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        if k == 0 {
            if sign_neg {
                out.push('-');
            }
        } else {
            out.push_str(if sign_neg { " - " } else { " + " });
        }
        out.push_str(&term_to_string(pres, w, &mag));
    }
    out
}

fn term_to_string(pres: &Presentation, word: &[u32], coeff: &Scalar) -> String {
    if word.is_empty() {
        return coeff.to_string();
    }
    let word_str = pres.word_to_string(word);
    if coeff.is_one() {
        return word_str;
    }
    let coeff_str = if coeff.needs_parens_in_product() {
        format!("({coeff})")
    } else {
        coeff.to_string()
    };
    format!("{coeff_str}*{word_str}")
}
