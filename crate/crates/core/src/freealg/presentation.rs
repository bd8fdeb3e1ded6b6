//! Presentations: generator alphabets, star structure, oriented rules.

use super::{
    insert_term, scale_terms, sub_terms, FreeAlgError, GenId, TermMap, Word, DEFAULT_STEP_BUDGET,
};
use crate::expr::{self, EvalScope};
use crate::scalar::{GaussRat, Scalar, Var};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// One generator: canonical display name, optional ASCII alias accepted by
/// the parser, star data `g* = coeff · h`, graded degree, and the weight it
/// contributes to the word order.
#[derive(Clone, Debug)]
pub struct GenInfo {
    pub name: String,
    pub alias: Option<String>,
    pub star: Option<(GenId, Scalar)>,
    pub degree: i64,
    pub weight: u64,
}

/// An oriented rewrite rule `lhs -> rhs`; every word of `rhs` is strictly
/// smaller than `lhs` in the presentation's word order.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: TermMap,
}

#[derive(Debug)]
struct PresentationInner {
    name: String,
    gens: Vec<GenInfo>,
    rules: Vec<Rule>,
    relations: Vec<TermMap>,
    inverse_pairs: Vec<(GenId, GenId)>,
    budget: u64,
}

/// A shared, immutable presentation.  Cloning is cheap; two handles compare
/// as the *same* presentation only if they share storage.
#[derive(Clone, Debug)]
pub struct Presentation {
    inner: Arc<PresentationInner>,
}

impl Presentation {
    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn gens(&self) -> &[GenInfo] {
        &self.inner.gens
    }

    pub fn gen_count(&self) -> usize {
        self.inner.gens.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.inner.rules
    }

    /// The relation elements (each equal to zero in the algebra) recorded at
    /// build time, after star closure and deduplication.
    pub fn relations(&self) -> &[TermMap] {
        &self.inner.relations
    }

    pub fn inverse_pairs(&self) -> &[(GenId, GenId)] {
        &self.inner.inverse_pairs
    }

    pub fn budget(&self) -> u64 {
        self.inner.budget
    }

    /// Whether two handles refer to the same underlying presentation.
    pub fn same(&self, other: &Presentation) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Look up a generator by display name or alias.
    pub fn gen_id(&self, name: &str) -> Option<GenId> {
        self.inner.gens.iter().position(|g| {
            g.name == name || g.alias.as_deref() == Some(name)
        }).map(|i| i as GenId)
    }

    pub fn gen_name(&self, id: GenId) -> &str {
        &self.inner.gens[id as usize].name
    }

    pub fn gen_info(&self, id: GenId) -> &GenInfo {
        &self.inner.gens[id as usize]
    }

    /// Total weight of a word (used as the primary key of the word order).
    pub fn word_weight(&self, w: &[GenId]) -> u64 {
        w.iter().map(|&g| self.inner.gens[g as usize].weight).sum()
    }

    /// Total graded degree of a word.
    pub fn word_degree(&self, w: &[GenId]) -> i64 {
        w.iter().map(|&g| self.inner.gens[g as usize].degree).sum()
    }

    /// Weighted degree-lexicographic word order: compare total weight, then
    /// length, then generator ids left to right.  Compatible with
    /// concatenation on both sides, so oriented rewriting terminates.
    pub fn word_cmp(&self, a: &[GenId], b: &[GenId]) -> Ordering {
        self.word_weight(a)
            .cmp(&self.word_weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    /// Star of a single generator: `(image, coefficient)`.
    pub fn star_gen(&self, id: GenId) -> Option<(GenId, Scalar)> {
        self.inner.gens[id as usize].star.clone()
    }

    /// Free star of `coeff · word`: reverse the word, star each letter, and
    /// conjugate the coefficient.  Fails if some letter has no star.
    pub fn star_word_free(
        &self,
        word: &[GenId],
        coeff: &Scalar,
    ) -> Result<(Word, Scalar), FreeAlgError> {
        let mut out = Vec::with_capacity(word.len());
        let mut c = coeff.conjugate();
        for &g in word.iter().rev() {
            let (h, factor) = self
                .star_gen(g)
                .ok_or_else(|| FreeAlgError::StarUndefined(self.gen_name(g).to_owned()))?;
            out.push(h);
            c = &c * &factor;
        }
        Ok((out, c))
    }

    /// Free star of a whole term map (no rewriting).
    pub fn star_terms_free(&self, terms: &TermMap) -> Result<TermMap, FreeAlgError> {
        let mut out = TermMap::new();
        for (w, c) in terms {
            let (sw, sc) = self.star_word_free(w, c)?;
            insert_term(&mut out, sw, sc);
        }
        Ok(out)
    }

    /// Render a word with `*` between generator names; the empty word is `1`.
    pub fn word_to_string(&self, w: &[GenId]) -> String {
        if w.is_empty() {
            "1".to_owned()
        } else {
            w.iter()
                .map(|&g| self.gen_name(g))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Same presentation with a different rewrite budget.
    pub fn with_budget(&self, budget: u64) -> Presentation {
        let inner = &self.inner;
        Presentation {
            inner: Arc::new(PresentationInner {
                name: inner.name.clone(),
                gens: inner.gens.clone(),
                rules: inner.rules.clone(),
                relations: inner.relations.clone(),
                inverse_pairs: inner.inverse_pairs.clone(),
                budget,
            }),
        }
    }

    /// Substitute a value for one of the ground-field parameters in every
    /// rule, star and relation coefficient.  Rule orientation is untouched:
    /// left-hand sides carry unit coefficient and the word order does not
    /// depend on scalars.  Fails if any coefficient has a pole at the value.
    pub fn specialized(&self, var: Var, value: &GaussRat) -> Result<Presentation, FreeAlgError> {
        let spec = |s: &Scalar| s.specialize_var(var, value);
        let inner = &self.inner;
        let mut gens = Vec::with_capacity(inner.gens.len());
        for g in &inner.gens {
            let star = match &g.star {
                Some((h, c)) => Some((*h, spec(c)?)),
                None => None,
            };
            gens.push(GenInfo { star, ..g.clone() });
        }
        let spec_terms = |terms: &TermMap| -> Result<TermMap, FreeAlgError> {
            let mut out = TermMap::new();
            for (w, c) in terms {
                insert_term(&mut out, w.clone(), spec(c)?);
            }
            Ok(out)
        };
        let mut rules = Vec::with_capacity(inner.rules.len());
        for r in &inner.rules {
            rules.push(Rule {
                lhs: r.lhs.clone(),
                rhs: spec_terms(&r.rhs)?,
            });
        }
        let mut relations = Vec::with_capacity(inner.relations.len());
        for r in &inner.relations {
            relations.push(spec_terms(r)?);
        }
        Ok(Presentation {
            inner: Arc::new(PresentationInner {
                name: format!("{}[{}={}]", inner.name, var.display_name(), value),
                gens,
                rules,
                relations,
                inverse_pairs: inner.inverse_pairs.clone(),
                budget: inner.budget,
            }),
        })
    }
}

impl EvalScope for Presentation {
    fn lookup_gen(&self, name: &str) -> Option<u32> {
        self.gen_id(name)
    }

    fn star_of(&self, id: u32) -> Option<(u32, Scalar)> {
        self.star_gen(id)
    }

    fn inverse_of(&self, id: u32) -> Option<u32> {
        self.inner
            .inverse_pairs
            .iter()
            .find_map(|&(g, ginv)| match () {
                _ if g == id => Some(ginv),
                _ if ginv == id => Some(g),
                _ => None,
            })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation {}", self.name())?;
        let names: Vec<&str> = self.gens().iter().map(|g| g.name.as_str()).collect();
        writeln!(f, "  generators: {}", names.join(", "))?;
        for r in self.rules() {
            writeln!(
                f,
                "  {} -> {}",
                self.word_to_string(&r.lhs),
                super::element::terms_to_string(self, &r.rhs)
            )?;
        }
        Ok(())
    }
}

enum RawRelation {
    Text(String),
    Terms(TermMap),
}

/// Incremental construction of a [`Presentation`].
///
/// Relations may be given as equations in the expression language or as
/// prebuilt term maps; at [`build`](PresentationBuilder::build) time they are
/// star-closed (where every involved generator has a star), oriented on their
/// greatest word, deduplicated and validated.
pub struct PresentationBuilder {
    name: String,
    gens: Vec<GenInfo>,
    raw: Vec<RawRelation>,
    inverse_pairs: Vec<(GenId, GenId)>,
    budget: u64,
}

impl PresentationBuilder {
    pub fn new(name: &str) -> Self {
        PresentationBuilder {
            name: name.to_owned(),
            gens: Vec::new(),
            raw: Vec::new(),
            inverse_pairs: Vec::new(),
            budget: DEFAULT_STEP_BUDGET,
        }
    }

    /// Declare a generator; declaration order is the generator order.
    pub fn gen(self, name: &str) -> Self {
        self.gen_full(name, None, 0)
    }

    /// Declare a generator with an ASCII alias accepted by the parser.
    pub fn gen_aliased(self, name: &str, alias: &str) -> Self {
        self.gen_full(name, Some(alias), 0)
    }

    /// Declare a generator with an explicit graded degree.
    pub fn gen_graded(self, name: &str, alias: Option<&str>, degree: i64) -> Self {
        self.gen_full(name, alias, degree)
    }

    fn gen_full(mut self, name: &str, alias: Option<&str>, degree: i64) -> Self {
        self.gens.push(GenInfo {
            name: name.to_owned(),
            alias: alias.map(str::to_owned),
            star: None,
            degree,
            weight: 1,
        });
        self
    }

    fn find(&self, name: &str) -> Result<GenId, FreeAlgError> {
        self.gens
            .iter()
            .position(|g| g.name == name || g.alias.as_deref() == Some(name))
            .map(|i| i as GenId)
            .ok_or_else(|| FreeAlgError::UnknownGenerator(name.to_owned()))
    }

    /// Override the word-order weight of a generator (default 1).
    pub fn weight(mut self, name: &str, weight: u64) -> Result<Self, FreeAlgError> {
        let id = self.find(name)? as usize;
        self.gens[id].weight = weight;
        Ok(self)
    }

    /// Override the graded degree of a generator (default 0).
    pub fn set_degree(mut self, name: &str, degree: i64) -> Result<Self, FreeAlgError> {
        let id = self.find(name)? as usize;
        self.gens[id].degree = degree;
        Ok(self)
    }

    /// Declare `a* = b` and `b* = a`.
    pub fn star_pair(self, a: &str, b: &str) -> Result<Self, FreeAlgError> {
        let one = Scalar::one();
        self.star_scaled(a, b, &one, &one)
    }

    /// Declare `g* = g`.
    pub fn star_self(self, g: &str) -> Result<Self, FreeAlgError> {
        let one = Scalar::one();
        self.star_scaled(g, g, &one, &one)
    }

    /// Declare `a* = ca · b` and `b* = cb · a`.  Involutivity requires
    /// `conj(ca) · cb = 1`; this is validated at build time.
    pub fn star_scaled(
        mut self,
        a: &str,
        b: &str,
        ca: &Scalar,
        cb: &Scalar,
    ) -> Result<Self, FreeAlgError> {
        let ia = self.find(a)?;
        let ib = self.find(b)?;
        self.gens[ia as usize].star = Some((ib, ca.clone()));
        self.gens[ib as usize].star = Some((ia, cb.clone()));
        Ok(self)
    }

    /// Declare mutually inverse generators; unit relations are added
    /// automatically.
    pub fn inverse_pair(mut self, g: &str, ginv: &str) -> Result<Self, FreeAlgError> {
        let ig = self.find(g)?;
        let iv = self.find(ginv)?;
        self.inverse_pairs.push((ig, iv));
        Ok(self)
    }

    /// Add a relation written as `lhs = rhs` in the expression language.
    pub fn relation(mut self, equation: &str) -> Self {
        self.raw.push(RawRelation::Text(equation.to_owned()));
        self
    }

    /// Add a relation as a prebuilt term map equal to zero.
    pub fn relation_terms(mut self, terms: TermMap) -> Self {
        self.raw.push(RawRelation::Terms(terms));
        self
    }

    pub fn step_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn build(self) -> Result<Presentation, FreeAlgError> {
        // Unique names and aliases.
        let mut seen = BTreeMap::new();
        for (i, g) in self.gens.iter().enumerate() {
            for key in std::iter::once(&g.name).chain(g.alias.iter()) {
                if seen.insert(key.clone(), i).is_some() {
                    return Err(FreeAlgError::DuplicateGenerator(key.clone()));
                }
            }
        }

        // Star involutivity: g** = g with unit total coefficient.
        for (i, g) in self.gens.iter().enumerate() {
            if let Some((h, c)) = &g.star {
                let (back, c2) = self.gens[*h as usize]
                    .star
                    .clone()
                    .ok_or_else(|| FreeAlgError::StarUndefined(self.gens[*h as usize].name.clone()))?;
                let round_trip = &c.conjugate() * &c2;
                if back as usize != i || !round_trip.is_one() {
                    return Err(FreeAlgError::StarNotInvolutive(g.name.clone()));
                }
            }
        }

        // A skeleton presentation provides the evaluation scope for relation
        // strings and the word order used for orientation.
        let proto = Presentation {
            inner: Arc::new(PresentationInner {
                name: self.name.clone(),
                gens: self.gens.clone(),
                rules: Vec::new(),
                relations: Vec::new(),
                inverse_pairs: self.inverse_pairs.clone(),
                budget: self.budget,
            }),
        };

        let mut relations: Vec<TermMap> = Vec::new();
        for raw in &self.raw {
            match raw {
                RawRelation::Text(eq) => {
                    let (lhs, rhs) = split_equation(eq)?;
                    let l = expr::eval_str(lhs, &proto)?;
                    let r = expr::eval_str(rhs, &proto)?;
                    relations.push(sub_terms(&l, &r));
                }
                RawRelation::Terms(t) => relations.push(t.clone()),
            }
        }
        for &(g, ginv) in &self.inverse_pairs {
            for pair in [[g, ginv], [ginv, g]] {
                let mut rel = TermMap::new();
                insert_term(&mut rel, pair.to_vec(), Scalar::one());
                insert_term(&mut rel, Vec::new(), -&Scalar::one());
                relations.push(rel);
            }
        }

        // Star closure: append r* whenever every generator of r has a star.
        let mut closed = relations.clone();
        for rel in &relations {
            let starrable = rel
                .keys()
                .flatten()
                .all(|&g| self.gens[g as usize].star.is_some());
            if starrable {
                closed.push(proto.star_terms_free(rel)?);
            }
        }

        // Scale each relation so its greatest word has unit coefficient (this
        // also makes duplicates that differ by a scalar factor collide), drop
        // zeros, reject nonzero constants, deduplicate.
        let mut relation_set: Vec<TermMap> = Vec::new();
        for rel in closed {
            if rel.is_empty() {
                continue;
            }
            if rel.keys().all(|w| w.is_empty()) {
                return Err(FreeAlgError::InconsistentRelation);
            }
            let lead_word = rel
                .keys()
                .max_by(|a, b| proto.word_cmp(a, b))
                .expect("nonempty relation")
                .clone();
            let lead = rel[&lead_word].clone();
            let monic = scale_terms(&rel, &lead.inv());
            if !relation_set.contains(&monic) {
                relation_set.push(monic);
            }
        }

        // Orient each relation on its greatest word.
        let mut rules: Vec<Rule> = Vec::new();
        for rel in &relation_set {
            let lhs = rel
                .keys()
                .max_by(|a, b| proto.word_cmp(a, b))
                .expect("nonempty relation")
                .clone();
            let mut rhs = TermMap::new();
            for (w, c) in rel {
                if *w != lhs {
                    insert_term(&mut rhs, w.clone(), -c);
                }
            }
            let rule = Rule { lhs, rhs };
            if !rules
                .iter()
                .any(|r| r.lhs == rule.lhs && r.rhs == rule.rhs)
            {
                rules.push(rule);
            }
        }

        // Validate orientation and graded-degree compatibility.
        for rule in &rules {
            let label = proto.word_to_string(&rule.lhs);
            let ldeg = proto.word_degree(&rule.lhs);
            for w in rule.rhs.keys() {
                if proto.word_cmp(w, &rule.lhs) != Ordering::Less {
                    return Err(FreeAlgError::BadOrientation(label));
                }
                if proto.word_degree(w) != ldeg {
                    return Err(FreeAlgError::DegreeMismatch(label));
                }
            }
        }

        Ok(Presentation {
            inner: Arc::new(PresentationInner {
                name: self.name,
                gens: self.gens,
                rules,
                relations: relation_set,
                inverse_pairs: self.inverse_pairs,
                budget: self.budget,
            }),
        })
    }
}

/// Split `lhs = rhs` at the unique top-level `=`.
fn split_equation(eq: &str) -> Result<(&str, &str), FreeAlgError> {
    let mut parts = eq.splitn(2, '=');
    let lhs = parts.next().unwrap_or("");
    let rhs = parts
        .next()
        .ok_or_else(|| FreeAlgError::File(format!("relation `{eq}` has no `=`")))?;
    if rhs.contains('=') {
        return Err(FreeAlgError::File(format!(
            "relation `{eq}` has more than one `=`"
        )));
    }
    Ok((lhs, rhs))
}
