//! Graded differential calculi over presented algebras.
//!
//! A [`GradedPresentation`] pairs a [`Presentation`] whose generators carry
//! graded degrees (0 for coordinate functions, 1 for coframe letters) with a
//! distinguished degree-1 element `theta` and a scalar scale `sigma`; the
//! differential is the scaled graded commutator
//!
//! ```text
//! d(x) = sigma * (theta*x - (-1)^{|x|} x*theta)
//! ```
//!
//! extended additively over homogeneous parts.  Sign bookkeeping lives here,
//! in the differential and in the check routines — the rewrite rules of the
//! underlying presentation are ordinary relations whose signs are written
//! out explicitly.
//!
//! Three calculi ship as data files (`omega_bqsu2`, `omega_cqsu2`,
//! `omega_uqsu2`, extending the presentation format with `degree`, `weight`,
//! `theta` and `sigma` directives); a fourth, [`omega_qfuzzy`], is the
//! quotient of the braided calculus by a trace slice and a coframe
//! constraint, built at construction time from the shipped rules.

use crate::freealg::{
    insert_term, parse_alg, AlgFile, FreeAlgError, NcElement, Presentation, PresentationBuilder,
    TermMap, Word,
};
use crate::rmatrix::{self, RMatrix, RMatrixError};
use crate::scalar::Scalar;
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum DgaError {
    #[error("presentation file has no `theta` directive")]
    MissingTheta,
    #[error("theta must be homogeneous of odd degree, got `{0}`")]
    ThetaNotOdd(String),
    #[error("sigma must be a nonzero scalar")]
    ZeroSigma,
    #[error("an element of `{0}` was given to a calculus over `{1}`")]
    ForeignElement(String, String),
    #[error("quotient collapsed: `{0}` reduces to zero")]
    DegenerateQuotient(String),
    #[error("calculus construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Algebra(#[from] FreeAlgError),
    #[error(transparent)]
    Braiding(#[from] RMatrixError),
}

/// A residual that should have been zero, labelled by what produced it.
#[derive(Clone, Debug)]
pub struct GradedFailure {
    pub label: String,
    pub residual: NcElement,
}

impl std::fmt::Display for GradedFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.label, self.residual)
    }
}

/// A presented algebra with graded generators, an inner differential
/// `d = sigma*[theta, .]` (graded commutator) and the sign conventions that
/// go with it.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pres: Presentation,
    theta: NcElement,
    sigma: Scalar,
}

impl GradedPresentation {
    /// Wrap a presentation with its inner-differential data.  `theta` must be
    /// a homogeneous element of odd degree of the same presentation and
    /// `sigma` must be nonzero.
    pub fn new(pres: &Presentation, theta: NcElement, sigma: Scalar) -> Result<Self, DgaError> {
        if !theta.presentation().same(pres) {
            return Err(DgaError::ForeignElement(
                theta.presentation().name().to_owned(),
                pres.name().to_owned(),
            ));
        }
        match homogeneous_degree(pres, theta.terms()) {
            Some(d) if d % 2 != 0 => {}
            _ => return Err(DgaError::ThetaNotOdd(theta.to_string())),
        }
        if sigma.is_zero() {
            return Err(DgaError::ZeroSigma);
        }
        Ok(GradedPresentation {
            pres: pres.clone(),
            theta,
            sigma,
        })
    }

    /// Build from a parsed presentation file; requires a `theta` directive,
    /// while `sigma` defaults to 1.
    pub fn from_alg(file: &AlgFile) -> Result<Self, DgaError> {
        let theta_src = file.theta.as_ref().ok_or(DgaError::MissingTheta)?;
        let theta = NcElement::parse(&file.presentation, theta_src)?;
        let sigma = file.sigma.clone().unwrap_or_else(Scalar::one);
        GradedPresentation::new(&file.presentation, theta, sigma)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn theta(&self) -> &NcElement {
        &self.theta
    }

    pub fn sigma(&self) -> &Scalar {
        &self.sigma
    }

    /// Parse an expression in this calculus.
    pub fn element(&self, src: &str) -> Result<NcElement, DgaError> {
        Ok(NcElement::parse(&self.pres, src)?)
    }

    /// The graded degree of a homogeneous element; `None` for zero or for an
    /// element mixing degrees.
    pub fn degree(&self, x: &NcElement) -> Option<i64> {
        homogeneous_degree(&self.pres, x.terms())
    }

    /// Split an element into its homogeneous components, keyed by degree.
    pub fn homogeneous_parts(&self, x: &NcElement) -> BTreeMap<i64, NcElement> {
        let mut buckets: BTreeMap<i64, TermMap> = BTreeMap::new();
        for (w, c) in x.terms() {
            buckets
                .entry(self.pres.word_degree(w))
                .or_default()
                .insert(w.clone(), c.clone());
        }
        buckets
            .into_iter()
            .map(|(deg, terms)| {
                let el = NcElement::from_terms(&self.pres, terms)
                    .expect("terms of a canonical element stay canonical");
                (deg, el)
            })
            .collect()
    }

    /// The differential: `sigma*(theta*x - (-1)^{|x|} x*theta)` on each
    /// homogeneous part, summed.
    pub fn d(&self, x: &NcElement) -> Result<NcElement, DgaError> {
        self.check_element(x)?;
        let mut acc = NcElement::zero(&self.pres);
        for (deg, part) in self.homogeneous_parts(x) {
            let left = self.theta.mul(&part)?;
            let right = part.mul(&self.theta)?;
            let bracket = if deg.rem_euclid(2) == 0 {
                &left - &right
            } else {
                &left + &right
            };
            acc = &acc + &bracket.scale(&self.sigma);
        }
        Ok(acc)
    }

    /// Star the degree-0 prefix of every term in place — reverse it, star
    /// each letter, conjugate the coefficient — while leaving the coframe
    /// part of the word untouched.  This is the conjugate that makes sense
    /// when the coframe itself carries no star structure.
    pub fn star_coefficients(&self, x: &NcElement) -> Result<NcElement, DgaError> {
        self.check_element(x)?;
        let mut out = TermMap::new();
        for (w, c) in x.terms() {
            let split = w
                .iter()
                .position(|&g| self.pres.gen_info(g).degree != 0)
                .unwrap_or(w.len());
            let (prefix, rest) = w.split_at(split);
            let (mut word, coeff) = self.pres.star_word_free(prefix, c)?;
            word.extend_from_slice(rest);
            insert_term(&mut out, word, coeff);
        }
        Ok(NcElement::from_terms(&self.pres, out)?)
    }

    /// Check `d(xy) = d(x)y + (-1)^{|x|} x d(y)` on `samples` seeded random
    /// pairs of monomials of length at most `max_len`; returns the failing
    /// cases (empty means the rule held on every sample).
    pub fn leibniz_check(
        &self,
        seed: u64,
        samples: usize,
        max_len: usize,
    ) -> Result<Vec<GradedFailure>, DgaError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        for _ in 0..samples {
            let xw = sample_word(&self.pres, &mut rng, max_len);
            let yw = sample_word(&self.pres, &mut rng, max_len);
            let xdeg = self.pres.word_degree(&xw);
            let x = self.monomial(&xw)?;
            let y = self.monomial(&yw)?;
            let product_rule = self.d(&x.mul(&y)?)?;
            let dx_y = self.d(&x)?.mul(&y)?;
            let x_dy = x.mul(&self.d(&y)?)?;
            let signed = if xdeg.rem_euclid(2) == 0 {
                &dx_y + &x_dy
            } else {
                &dx_y - &x_dy
            };
            let residual = &product_rule - &signed;
            if !residual.is_zero() {
                failures.push(GradedFailure {
                    label: format!(
                        "d({} * {})",
                        self.pres.word_to_string(&xw),
                        self.pres.word_to_string(&yw)
                    ),
                    residual,
                });
            }
        }
        Ok(failures)
    }

    /// Check `d(d(x)) = 0` on every generator and on `samples` seeded random
    /// monomials of length at most `max_len`; returns the failing cases.
    pub fn d_squared_check(
        &self,
        seed: u64,
        samples: usize,
        max_len: usize,
    ) -> Result<Vec<GradedFailure>, DgaError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut words: Vec<Word> = (0..self.pres.gen_count() as u32).map(|g| vec![g]).collect();
        words.extend((0..samples).map(|_| sample_word(&self.pres, &mut rng, max_len)));
        let mut failures = Vec::new();
        for w in words {
            let x = self.monomial(&w)?;
            let residual = self.d(&self.d(&x)?)?;
            if !residual.is_zero() {
                failures.push(GradedFailure {
                    label: format!("d(d({}))", self.pres.word_to_string(&w)),
                    residual,
                });
            }
        }
        Ok(failures)
    }

    fn monomial(&self, w: &Word) -> Result<NcElement, FreeAlgError> {
        let mut terms = TermMap::new();
        insert_term(&mut terms, w.clone(), Scalar::one());
        NcElement::from_terms(&self.pres, terms)
    }

    fn check_element(&self, x: &NcElement) -> Result<(), DgaError> {
        if x.presentation().same(&self.pres) {
            Ok(())
        } else {
            Err(DgaError::ForeignElement(
                x.presentation().name().to_owned(),
                self.pres.name().to_owned(),
            ))
        }
    }
}

fn homogeneous_degree(pres: &Presentation, terms: &TermMap) -> Option<i64> {
    let mut degree = None;
    for w in terms.keys() {
        let d = pres.word_degree(w);
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => return None,
            Some(_) => {}
        }
    }
    degree
}

fn sample_word(pres: &Presentation, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| rng.gen_range(0..pres.gen_count() as u32))
        .collect()
}

macro_rules! shipped_calculus {
    ($(#[$doc:meta])* $fn_name:ident, $file:literal) => {
        $(#[$doc])*
        pub fn $fn_name() -> GradedPresentation {
            static CACHE: Lazy<GradedPresentation> = Lazy::new(|| {
                let file = parse_alg(include_str!(concat!("../../data/", $file)))
                    .unwrap_or_else(|e| panic!("shipped file {} is invalid: {e}", $file));
                GradedPresentation::from_alg(&file)
                    .unwrap_or_else(|e| panic!("shipped file {} is not a calculus: {e}", $file))
            });
            CACHE.clone()
        }
    };
}

shipped_calculus!(
    /// First-order calculus on braided SU(2) (`sigma = (1 - q^-2)^-1`).
    omega_bqsu2,
    "omega_bqsu2.alg"
);
shipped_calculus!(
    /// First-order calculus on the quantum SU(2) coordinate algebra
    /// (`sigma = (1 - q^-2)^-1`).
    omega_cqsu2,
    "omega_cqsu2.alg"
);
shipped_calculus!(
    /// The localized calculus on the quantized enveloping algebra of su(2)
    /// (`sigma = 1`).
    omega_uqsu2,
    "omega_uqsu2.alg"
);

/// Source text of a shipped calculus file, addressed by name (with or
/// without the `.alg` suffix).
pub fn source(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".alg").unwrap_or(name);
    Some(match stem {
        "omega_bqsu2" => include_str!("../../data/omega_bqsu2.alg"),
        "omega_cqsu2" => include_str!("../../data/omega_cqsu2.alg"),
        "omega_uqsu2" => include_str!("../../data/omega_uqsu2.alg"),
        _ => return None,
    })
}

/// File names of the shipped calculi.
pub fn names() -> &'static [&'static str] {
    &["omega_bqsu2", "omega_cqsu2", "omega_uqsu2"]
}

/// The calculus on the trace slice of braided SU(2): the braided calculus
/// with the degree-0 slice rule `q^-1*α + q*δ = t + t^-1`, the exchange
/// rules restricted to the surviving generators α, β, γ, and a coframe
/// constraint (adjoined together with its star-conjugate) that makes the
/// form module non-free.
///
/// The rule set is terminating but deliberately *not* completed to local
/// confluence: the two-sided ideal generated by the constraint contains,
/// after finitely many critical-pair closures, a unit multiple of a single
/// coframe letter, so any confluent completion collapses the whole form
/// module to zero.  The quotient is therefore presented by exactly the
/// stated rules; normal forms are strategy-dependent on the open overlaps.
pub fn omega_qfuzzy() -> Result<GradedPresentation, DgaError> {
    static CACHE: Lazy<Result<GradedPresentation, String>> =
        Lazy::new(|| build_qfuzzy().map_err(|e| e.to_string()));
    CACHE.clone().map_err(DgaError::Construction)
}

/// The coframe constraint of the trace-slice calculus as an element of the
/// braided calculus (nonzero there; zero in the quotient).
pub fn qfuzzy_constraint(base: &GradedPresentation) -> Result<NcElement, DgaError> {
    base.element(
        "(t + t^-1)*(e_a + e_d) - q^-1*(1 + q^-1)*(α*e_d + δ*e_a - q^-1*β*e_b - q*γ*e_c)",
    )
}

fn build_qfuzzy() -> Result<GradedPresentation, DgaError> {
    let base = omega_bqsu2();
    let bp = base.presentation();
    let delta = bp
        .gen_id("δ")
        .ok_or_else(|| DgaError::Construction("the braided calculus has no δ".into()))?;

    // On the slice, δ is no longer an independent generator: the slice rule
    // rewrites it into α and constants before a coframe letter ever has to
    // move past it.  The four upstream exchange rules for `e_*·δ` must
    // therefore be dropped — keeping them would also impose the four
    // commutators `[e_*, q^-1*α + q*δ]`, and together with the slice those
    // collapse the whole form module (their scalar combinations become
    // invertible).  The surviving exchange rules are the ones for α, β, γ.
    let eliminates_delta = |rel: &TermMap| {
        rel.keys().any(|w| {
            w.len() == 2 && bp.gen_info(w[0]).degree != 0 && w[1] == delta
        })
    };

    // Stage 1: the trace slice.  Rebuild the braided calculus minus the δ
    // exchange rules, with the degree-0 slice rule added.
    let sliced = {
        let mut builder = skeleton(bp, "omega_qfuzzy");
        for rel in bp.relations() {
            if !eliminates_delta(rel) {
                builder = builder.relation_terms(rel.clone());
            }
        }
        builder
            .relation("q^-1*α + q*δ = t + t^-1")
            .build()?
    };

    // Stage 2: the coframe constraint, normalized in the sliced calculus so
    // that δ is already eliminated, then oriented by the builder (its
    // greatest word is γ*e_c).
    let constraint = NcElement::parse(
        &sliced,
        "(t + t^-1)*(e_a + e_d) - q^-1*(1 + q^-1)*(α*e_d + δ*e_a - q^-1*β*e_b - q*γ*e_c)",
    )?;
    if constraint.is_zero() {
        return Err(DgaError::DegenerateQuotient("coframe constraint".into()));
    }

    // Stage 3: star-closure.  The coframe letters carry no star of their
    // own, so the conjugate constraint is obtained by starring the degree-0
    // prefix of each term (its greatest word is γ*e_b).  Adjoining it keeps
    // the quotient ideal star-closed.
    let conjugate = {
        let mut out = TermMap::new();
        for (w, c) in constraint.terms() {
            let split = w
                .iter()
                .position(|&g| sliced.gen_info(g).degree != 0)
                .unwrap_or(w.len());
            let (prefix, rest) = w.split_at(split);
            let (mut word, coeff) = sliced.star_word_free(prefix, c)?;
            word.extend_from_slice(rest);
            insert_term(&mut out, word, coeff);
        }
        NcElement::from_terms(&sliced, out)?
    };

    // No completion pass follows: closing the critical pairs of the
    // constraint rules eventually derives a unit multiple of a coframe
    // letter and collapses the form module, so the quotient ships with
    // exactly these rules (terminating, not locally confluent).
    let mut builder = skeleton(bp, "omega_qfuzzy");
    for rel in sliced.relations() {
        builder = builder.relation_terms(rel.clone());
    }
    builder = builder.relation_terms(constraint.terms().clone());
    if !conjugate.is_zero() && conjugate.terms() != constraint.terms() {
        builder = builder.relation_terms(conjugate.terms().clone());
    }
    let pres = builder.build()?;
    let theta = NcElement::parse(&pres, "e_a + e_d")?;
    if theta.is_zero() {
        return Err(DgaError::DegenerateQuotient(
            "the coframe trace normalizes to zero".into(),
        ));
    }
    GradedPresentation::new(&pres, theta, base.sigma().clone())
}

/// A builder carrying the generators, degrees, weights, stars, inverse pairs
/// and budget of an existing presentation, but none of its relations.
fn skeleton(pres: &Presentation, name: &str) -> PresentationBuilder {
    let mut builder = PresentationBuilder::new(name);
    for g in pres.gens() {
        builder = builder.gen_graded(&g.name, g.alias.as_deref(), g.degree);
        if g.weight != 1 {
            builder = builder
                .weight(&g.name, g.weight)
                .expect("generator was just declared");
        }
    }
    let mut starred = vec![false; pres.gen_count()];
    for (id, g) in pres.gens().iter().enumerate() {
        if starred[id] {
            continue;
        }
        if let Some((h, ca)) = &g.star {
            let (_, cb) = pres
                .gen_info(*h)
                .star
                .clone()
                .expect("star maps are involutive pairs");
            builder = builder
                .star_scaled(&g.name, pres.gen_name(*h), ca, &cb)
                .expect("generators were just declared");
            starred[id] = true;
            starred[*h as usize] = true;
        }
    }
    for &(g, ginv) in pres.inverse_pairs() {
        builder = builder
            .inverse_pair(pres.gen_name(g), pres.gen_name(ginv))
            .expect("generators were just declared");
    }
    builder.step_budget(pres.budget())
}

/// Cross-check the braided calculus' bimodule rules against the exchange
/// relations generated from a braiding: the raw relations must normalize to
/// zero in the calculus, and solving them for the form-leading words must
/// reproduce the calculus' degree-1 rules exactly.  Returns the list of
/// failures (empty means the two constructions agree).
pub fn eq9_crosscheck_with(r: &RMatrix) -> Result<Vec<String>, DgaError> {
    let calculus = omega_bqsu2();
    let pres = calculus.presentation();
    let mut failures = Vec::new();

    let generated = rmatrix::eq9_relations(r)?;
    if generated.len() != 16 {
        failures.push(format!(
            "expected 16 generated exchange relations, got {}",
            generated.len()
        ));
    }

    // Every generated relation lies in the calculus' ideal.
    for (k, rel) in generated.iter().enumerate() {
        let reduced = NcElement::from_terms(pres, rel.clone())?;
        if !reduced.is_zero() {
            failures.push(format!("generated relation {k} survives: {reduced}"));
        }
    }

    // Solving the generated relations for the form-leading words reproduces
    // the calculus' degree-1 rules verbatim.  A solved relation carries its
    // form-leading word at coefficient 1; splitting it there recovers the
    // rewrite rule it encodes.
    let degree0_gens = pres.gens().iter().filter(|g| g.degree == 0).count() as u32;
    match rmatrix::orient_mixed_relations(&generated, degree0_gens) {
        Err(e) => failures.push(format!("generated relations are not solvable: {e}")),
        Ok(oriented) => {
            let mut generated_rules: BTreeMap<Word, TermMap> = BTreeMap::new();
            for rel in oriented {
                let mut lhs = None;
                let mut rhs = TermMap::new();
                for (w, c) in rel {
                    if w.first().is_some_and(|&g| g >= degree0_gens) {
                        lhs = Some(w);
                    } else {
                        insert_term(&mut rhs, w, -&c);
                    }
                }
                match lhs {
                    Some(word) => {
                        generated_rules.insert(word, rhs);
                    }
                    None => failures.push("solved relation lost its leading word".into()),
                }
            }
            let calculus_rules: BTreeMap<Word, TermMap> = pres
                .rules()
                .iter()
                .filter(|r| {
                    pres.word_degree(&r.lhs) == 1
                        && r.lhs.iter().any(|&g| pres.gen_info(g).degree == 0)
                })
                .map(|r| (r.lhs.clone(), r.rhs.clone()))
                .collect();
            if generated_rules.len() != calculus_rules.len() {
                failures.push(format!(
                    "rule count mismatch: {} generated vs {} in the calculus",
                    generated_rules.len(),
                    calculus_rules.len()
                ));
            }
            for (lhs, rhs) in &generated_rules {
                match calculus_rules.get(lhs) {
                    None => failures.push(format!(
                        "no calculus rule for {}",
                        pres.word_to_string(lhs)
                    )),
                    Some(expected) if expected != rhs => failures.push(format!(
                        "rule {} disagrees with the calculus",
                        pres.word_to_string(lhs)
                    )),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(failures)
}

/// [`eq9_crosscheck_with`] against the standard braiding in quantum-group
/// normalization — the configuration the shipped calculus was built from.
pub fn eq9_crosscheck() -> Result<Vec<String>, DgaError> {
    eq9_crosscheck_with(&rmatrix::standard().to_quantum_group())
}
