//! Algebra morphisms between presentations, with machine-checked residuals.

use super::{free_mul, scale_terms, FreeAlgError, NcElement, Presentation, TermMap};
use crate::scalar::{Scalar, ScalarError, Var};

#[derive(Clone, Debug)]
enum CoeffOp {
    /// Substitute an expression for a parameter.
    Subst(Var, Scalar),
    /// Substitute for the square of a parameter; odd powers are an error.
    SubstEven(Var, Scalar),
}

/// How ground-field parameters transform under a morphism.  Operations are
/// applied in insertion order, so compositions simply concatenate.
#[derive(Clone, Debug, Default)]
pub struct CoeffMap {
    ops: Vec<CoeffOp>,
}

impl CoeffMap {
    /// The identity on all parameters.
    pub fn identity() -> Self {
        CoeffMap::default()
    }

    /// Then substitute `value` for `var`.
    pub fn subst(mut self, var: Var, value: Scalar) -> Self {
        self.ops.push(CoeffOp::Subst(var, value));
        self
    }

    /// Then substitute `value` for `var^2` (requires even powers of `var`).
    pub fn subst_even(mut self, var: Var, value: Scalar) -> Self {
        self.ops.push(CoeffOp::SubstEven(var, value));
        self
    }

    pub fn apply(&self, s: &Scalar) -> Result<Scalar, ScalarError> {
        let mut out = s.clone();
        for op in &self.ops {
            out = match op {
                CoeffOp::Subst(v, val) => out.substitute(*v, val)?,
                CoeffOp::SubstEven(v, val) => out.substitute_even(*v, val)?,
            };
        }
        Ok(out)
    }

    /// First apply `first`, then `self`.
    pub fn after(&self, first: &CoeffMap) -> CoeffMap {
        let mut ops = first.ops.clone();
        ops.extend(self.ops.iter().cloned());
        CoeffMap { ops }
    }
}

/// An algebra map determined by generator images and a parameter map.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Presentation,
    target: Presentation,
    images: Vec<NcElement>,
    coeffs: CoeffMap,
}

/// Residuals produced by [`Morphism::check`]; the map is a well-defined
/// *-algebra morphism exactly when all residuals vanish.
#[derive(Clone, Debug)]
pub struct HomReport {
    /// Image of each defining relation (should be zero).
    pub relation_residuals: Vec<(String, NcElement)>,
    /// `star(image(g)) - coeffs(c) * image(h)` for each `g* = c·h` (should be
    /// zero); generators without star are skipped.
    pub star_residuals: Vec<(String, NcElement)>,
}

impl HomReport {
    pub fn all_zero(&self) -> bool {
        self.relation_residuals
            .iter()
            .chain(&self.star_residuals)
            .all(|(_, r)| r.is_zero())
    }

    pub fn failures(&self) -> Vec<String> {
        self.relation_residuals
            .iter()
            .chain(&self.star_residuals)
            .filter(|(_, r)| !r.is_zero())
            .map(|(label, r)| format!("{label}: {r}"))
            .collect()
    }
}

impl Morphism {
    /// Build a morphism from generator images given as expression strings in
    /// the target presentation.  Every source generator needs an image.
    pub fn parse(
        source: &Presentation,
        target: &Presentation,
        images: &[(&str, &str)],
        coeffs: CoeffMap,
    ) -> Result<Morphism, FreeAlgError> {
        let mut resolved: Vec<Option<NcElement>> = vec![None; source.gen_count()];
        for (name, image_src) in images {
            let id = source
                .gen_id(name)
                .ok_or_else(|| FreeAlgError::UnknownGenerator((*name).to_owned()))?;
            resolved[id as usize] = Some(NcElement::parse(target, image_src)?);
        }
        let images = resolved
            .into_iter()
            .enumerate()
            .map(|(id, img)| {
                img.ok_or_else(|| {
                    FreeAlgError::UnknownGenerator(format!(
                        "no image for generator `{}`",
                        source.gen_name(id as u32)
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            images,
            coeffs,
        })
    }

    /// Build a morphism from explicit image elements, in generator order.
    pub fn from_images(
        source: &Presentation,
        target: &Presentation,
        images: Vec<NcElement>,
        coeffs: CoeffMap,
    ) -> Result<Morphism, FreeAlgError> {
        if images.len() != source.gen_count() {
            return Err(FreeAlgError::UnknownGenerator(
                "image list does not match the generator count".to_owned(),
            ));
        }
        for img in &images {
            if !img.presentation().same(target) {
                return Err(FreeAlgError::PresentationMismatch);
            }
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            images,
            coeffs,
        })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn image_of(&self, name: &str) -> Option<&NcElement> {
        self.source.gen_id(name).map(|id| &self.images[id as usize])
    }

    /// Apply to a raw term map from the source algebra.
    pub fn apply_terms(&self, terms: &TermMap) -> Result<NcElement, FreeAlgError> {
        let mut acc = TermMap::new();
        for (word, coeff) in terms {
            let mapped_coeff = self.coeffs.apply(coeff)?;
            if mapped_coeff.is_zero() {
                continue;
            }
            let mut prod = TermMap::new();
            prod.insert(Vec::new(), Scalar::one());
            for &g in word {
                prod = free_mul(&prod, self.images[g as usize].terms());
            }
            for (w, c) in scale_terms(&prod, &mapped_coeff) {
                super::insert_term(&mut acc, w, c);
            }
        }
        NcElement::from_terms(&self.target, acc)
    }

    /// Apply to an element of the source algebra.
    pub fn apply(&self, el: &NcElement) -> Result<NcElement, FreeAlgError> {
        if !el.presentation().same(&self.source) {
            return Err(FreeAlgError::PresentationMismatch);
        }
        self.apply_terms(el.terms())
    }

    /// `self ∘ first` (apply `first`, then `self`).
    pub fn compose(&self, first: &Morphism) -> Result<Morphism, FreeAlgError> {
        if !first.target.same(&self.source) {
            return Err(FreeAlgError::PresentationMismatch);
        }
        let mut images = Vec::with_capacity(first.images.len());
        for img in &first.images {
            // Map the image's words through `self`, but its coefficients were
            // already expressed in `first.target = self.source`, so only
            // `self`'s parameter map applies.
            images.push(self.apply(img)?);
        }
        Ok(Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            images,
            coeffs: self.coeffs.after(&first.coeffs),
        })
    }

    /// Whether every generator maps to itself (source and target must share
    /// the same alphabet for this to hold).
    pub fn is_identity_on_gens(&self) -> Result<bool, FreeAlgError> {
        for (id, img) in self.images.iter().enumerate() {
            let name = self.source.gen_name(id as u32);
            let target_gen = match NcElement::gen(&self.target, name) {
                Ok(g) => g,
                Err(_) => return Ok(false),
            };
            if *img != target_gen {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Residuals of all defining relations and of star compatibility.
    pub fn check(&self) -> Result<HomReport, FreeAlgError> {
        let mut relation_residuals = Vec::new();
        for (k, rel) in self.source.relations().iter().enumerate() {
            let residual = self.apply_terms(rel)?;
            relation_residuals.push((format!("relation #{k}"), residual));
        }
        let mut star_residuals = Vec::new();
        for (id, info) in self.source.gens().iter().enumerate() {
            if let Some((h, c)) = &info.star {
                let lhs = self.images[id].star()?;
                let rhs = self.images[*h as usize].scale(&self.coeffs.apply(c)?);
                star_residuals.push((
                    format!("star of {}", info.name),
                    &lhs - &rhs,
                ));
            }
        }
        Ok(HomReport {
            relation_residuals,
            star_residuals,
        })
    }
}

/// Commutator of an element with each generator of its presentation; the
/// element is central exactly when all residuals vanish.
pub fn centrality_check(el: &NcElement) -> Result<Vec<(String, NcElement)>, FreeAlgError> {
    let pres = el.presentation().clone();
    let mut out = Vec::new();
    for info in pres.gens() {
        let g = NcElement::gen(&pres, &info.name)?;
        out.push((info.name.clone(), el.commutator(&g)?));
    }
    Ok(out)
}
