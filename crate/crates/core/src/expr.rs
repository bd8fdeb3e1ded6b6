//! A small expression language for algebra elements and scalar formulas.
//!
//! Grammar (precedence from loosest to tightest: sum, product, prefix minus,
//! power/star postfixes):
//!
//! ```text
//! sum      := product (('+' | '-') product)*
//! product  := factor (('*' | '/') factor)*
//! factor   := '-' factor | postfix
//! postfix  := atom ('^' exponent | '†')*
//! exponent := INT | '-' INT | '(' '-'? INT '/' INT ')'
//! atom     := INT | IDENT | 'd' '(' sum ')' | 'adj' '(' sum ')'
//!           | '(' sum ')' | '[' sum ',' sum ']' ('_' postfix)?
//! ```
//!
//! `i` is the imaginary unit and `q` the deformation parameter; both are
//! reserved.  Multiplication is always written explicitly with `*`.  `d(...)`
//! applies a differential supplied by the evaluation scope, `adj(...)` and
//! the postfix dagger apply the star, and `[x, y]_p` is the deformed
//! commutator `x*y - p*y*x` (with `p = 1` when the subscript is omitted).
//! Evaluation is *free*: words concatenate and no rewriting happens, so the
//! results are usable as defining relations.

use crate::freealg::TermMap;
use crate::scalar::{Scalar, ScalarError, Var};
use num::BigInt;
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum ExprError {
    #[error("parse error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("division by an element that is not a nonzero scalar")]
    NonScalarDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("half-integer powers are only defined for `q`")]
    HalfPower,
    #[error("negative power of `{0}` which has no declared inverse")]
    NoInverse(String),
    #[error("the star is not defined here: {0}")]
    StarUnavailable(String),
    #[error("`d(...)` is not available in this context")]
    NoDifferential,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Name resolution and star/inverse data supplied by the caller.
///
/// The default implementations resolve nothing, star nothing and reject
/// `d(...)`; a presentation implements all four, while scalar-only contexts
/// use [`ScalarScope`].
pub trait EvalScope {
    /// Resolve an identifier to a generator id.
    fn lookup_gen(&self, _name: &str) -> Option<u32> {
        None
    }

    /// Star of a generator as `(image, coefficient)`.
    fn star_of(&self, _id: u32) -> Option<(u32, Scalar)> {
        None
    }

    /// Declared inverse of a generator, if any.
    fn inverse_of(&self, _id: u32) -> Option<u32> {
        None
    }

    /// Apply the differential to a free value.
    fn apply_d(&self, _value: &TermMap) -> Result<TermMap, ExprError> {
        Err(ExprError::NoDifferential)
    }

    /// Display name for a generator (used in error messages).
    fn gen_label(&self, id: u32) -> String {
        format!("#{id}")
    }
}

/// Scope with no generators: identifiers resolve to ground-field parameters
/// only.  Used when parsing scalar formulas.
pub struct ScalarScope;

impl EvalScope for ScalarScope {}

/// Abstract syntax of the expression language.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    /// The imaginary unit `i`.
    Imag,
    /// The deformation parameter `q`.
    Q,
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// `base^(num/den)` with `den` equal to 1 or 2.
    Pow {
        base: Box<Expr>,
        num: i64,
        den: u8,
    },
    /// Star, written `x†` or `adj(x)`.
    Star(Box<Expr>),
    /// Differential, written `d(x)`.
    Diff(Box<Expr>),
    /// Deformed commutator `[a, b]_p = a*b - p*b*a`.
    Bracket {
        a: Box<Expr>,
        b: Box<Expr>,
        p: Option<Box<Expr>>,
    },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Dagger,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::Dagger => write!(f, "†"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBrack => write!(f, "["),
            Tok::RBrack => write!(f, "]"),
            Tok::Comma => write!(f, ","),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '₊' | '₋' | '⁻' | '\'')
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let col_of = |byte: usize| chars.iter().take_while(|(b, _)| *b < byte).count() + 1;
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        let col = col_of(byte);
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                digits.push(chars[i].1);
                i += 1;
            }
            let n: BigInt = digits.parse().expect("digit run parses");
            toks.push((Tok::Int(n), col));
        } else if is_ident_start(c) {
            let mut name = String::new();
            while i < chars.len() && is_ident_continue(chars[i].1) {
                name.push(chars[i].1);
                i += 1;
            }
            toks.push((Tok::Ident(name), col));
        } else {
            let tok = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' | '·' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '†' => Tok::Dagger,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                ',' => Tok::Comma,
                _ => {
                    return Err(ExprError::Syntax {
                        col,
                        msg: format!("unexpected character `{c}`"),
                    })
                }
            };
            toks.push((tok, col));
            i += 1;
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, expected: &str) -> Result<(), ExprError> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            got => Err(self.unexpected(got.cloned(), expected)),
        }
    }

    fn unexpected(&self, got: Option<Tok>, expected: &str) -> ExprError {
        let msg = match got {
            Some(t) => format!("expected {expected}, found `{t}`"),
            None => format!("expected {expected}, found end of input"),
        };
        ExprError::Syntax {
            col: self.col(),
            msg,
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            let inner = self.factor()?;
            Ok(Expr::Neg(Box::new(inner)))
        } else {
            self.postfix()
        }
    }

    fn postfix(&mut self) -> Result<Expr, ExprError> {
        let e = self.atom()?;
        self.postfix_tails(e)
    }

    fn postfix_tails(&mut self, mut e: Expr) -> Result<Expr, ExprError> {
        loop {
            match self.peek() {
                Some(Tok::Caret) => {
                    self.pos += 1;
                    let (num, den) = self.exponent()?;
                    e = Expr::Pow {
                        base: Box::new(e),
                        num,
                        den,
                    };
                }
                Some(Tok::Dagger) => {
                    self.pos += 1;
                    e = Expr::Star(Box::new(e));
                }
                _ => return Ok(e),
            }
        }
    }

    fn small_int(&mut self, context: &str) -> Result<i64, ExprError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(n)) => i64::try_from(&n).map_err(|_| ExprError::Syntax {
                col,
                msg: format!("{context} out of range"),
            }),
            got => Err(self.unexpected(got, context)),
        }
    }

    fn exponent(&mut self) -> Result<(i64, u8), ExprError> {
        match self.peek() {
            Some(Tok::Int(_)) => Ok((self.small_int("an integer exponent")?, 1)),
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok((-self.small_int("an integer exponent")?, 1))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let neg = if matches!(self.peek(), Some(Tok::Minus)) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let num = self.small_int("an integer exponent numerator")?;
                self.expect(&Tok::Slash, "`/` in a fractional exponent")?;
                let den_col = self.col();
                let den = self.small_int("an exponent denominator")?;
                self.expect(&Tok::RParen, "`)` closing the exponent")?;
                let den = u8::try_from(den)
                    .ok()
                    .filter(|d| *d == 1 || *d == 2)
                    .ok_or_else(|| ExprError::Syntax {
                        col: den_col,
                        msg: "exponent denominator must be 1 or 2".to_owned(),
                    })?;
                Ok((if neg { -num } else { num }, den))
            }
            got => Err(self.unexpected(got.cloned(), "an exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let got = self.peek().cloned();
        match got {
            Some(Tok::Int(_)) => {
                if let Some(Tok::Int(n)) = self.bump() {
                    Ok(Expr::Int(n))
                } else {
                    unreachable!()
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ident_atom(name)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::LBrack) => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(&Tok::Comma, "`,` between bracket arguments")?;
                let b = self.sum()?;
                self.expect(&Tok::RBrack, "`]`")?;
                let p = self.bracket_subscript()?;
                Ok(Expr::Bracket {
                    a: Box::new(a),
                    b: Box::new(b),
                    p,
                })
            }
            got => Err(self.unexpected(got, "a number, name, `(`, or `[`")),
        }
    }

    /// Identifier-led atoms: the reserved names `i` and `q`, the call forms
    /// `d(...)` and `adj(...)`, and plain symbols.
    fn ident_atom(&mut self, name: String) -> Result<Expr, ExprError> {
        if name == "i" {
            Ok(Expr::Imag)
        } else if name == "q" {
            Ok(Expr::Q)
        } else if name == "d" && matches!(self.peek(), Some(Tok::LParen)) {
            self.pos += 1;
            let inner = self.sum()?;
            self.expect(&Tok::RParen, "`)` closing `d(`")?;
            Ok(Expr::Diff(Box::new(inner)))
        } else if name == "adj" && matches!(self.peek(), Some(Tok::LParen)) {
            self.pos += 1;
            let inner = self.sum()?;
            self.expect(&Tok::RParen, "`)` closing `adj(`")?;
            Ok(Expr::Star(Box::new(inner)))
        } else {
            Ok(Expr::Sym(name))
        }
    }

    /// Optional `_p` after a bracket.  The tokenizer folds `_` into
    /// identifiers, so the subscript arrives either as `_name` (one token) or
    /// as a bare `_` followed by a parenthesized expression.
    fn bracket_subscript(&mut self) -> Result<Option<Box<Expr>>, ExprError> {
        let Some(Tok::Ident(s)) = self.peek() else {
            return Ok(None);
        };
        if !s.starts_with('_') {
            return Ok(None);
        }
        let s = s.clone();
        self.pos += 1;
        let base = if s == "_" {
            self.atom()?
        } else {
            self.ident_atom(s[1..].to_owned())?
        };
        Ok(Some(Box::new(self.postfix_tails(base)?)))
    }
}

/// Parse a source string into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let toks = tokenize(src)?;
    let end_col = src.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
    };
    let e = p.sum()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => Err(p.unexpected(Some(t.clone()), "end of input or an operator")),
    }
}

fn scalar_term(s: Scalar) -> TermMap {
    let mut m = TermMap::new();
    if !s.is_zero() {
        m.insert(Vec::new(), s);
    }
    m
}

/// Extract the scalar value of a term map if it is supported on the empty
/// word only.
pub fn as_scalar(value: &TermMap) -> Option<Scalar> {
    match value.len() {
        0 => Some(Scalar::zero()),
        1 => value
            .get(&Vec::new())
            .cloned(),
        _ => None,
    }
}

/// Evaluate an expression in a scope, producing a free (unrewritten) value.
pub fn eval(expr: &Expr, scope: &dyn EvalScope) -> Result<TermMap, ExprError> {
    use crate::freealg::{free_mul, scale_terms};
    match expr {
        Expr::Int(n) => Ok(scalar_term(Scalar::from_bigint(n))),
        Expr::Imag => Ok(scalar_term(Scalar::imag())),
        Expr::Q => Ok(scalar_term(Scalar::q())),
        Expr::Sym(name) => {
            if let Some(id) = scope.lookup_gen(name) {
                let mut m = TermMap::new();
                m.insert(vec![id], Scalar::one());
                Ok(m)
            } else if let Some(var) = Var::parse(name) {
                Ok(scalar_term(Scalar::var(var)))
            } else {
                Err(ExprError::UnknownSymbol(name.clone()))
            }
        }
        Expr::Neg(e) => {
            let v = eval(e, scope)?;
            Ok(v.into_iter().map(|(w, c)| (w, -&c)).collect())
        }
        Expr::Add(a, b) => {
            let mut v = eval(a, scope)?;
            for (w, c) in eval(b, scope)? {
                merge(&mut v, w, c);
            }
            Ok(v)
        }
        Expr::Sub(a, b) => {
            let mut v = eval(a, scope)?;
            for (w, c) in eval(b, scope)? {
                merge(&mut v, w, -&c);
            }
            Ok(v)
        }
        Expr::Mul(a, b) => Ok(free_mul(&eval(a, scope)?, &eval(b, scope)?)),
        Expr::Div(a, b) => {
            let num = eval(a, scope)?;
            let den = eval(b, scope)?;
            let s = as_scalar(&den).ok_or(ExprError::NonScalarDivisor)?;
            if s.is_zero() {
                return Err(ExprError::DivisionByZero);
            }
            Ok(scale_terms(&num, &s.inv()))
        }
        Expr::Pow { base, num, den } => {
            if *den == 2 {
                if **base == Expr::Q {
                    return Ok(scalar_term(Scalar::qhalf_pow(*num)));
                }
                return Err(ExprError::HalfPower);
            }
            let v = eval(base, scope)?;
            if let Some(s) = as_scalar(&v) {
                if *num < 0 && s.is_zero() {
                    return Err(ExprError::DivisionByZero);
                }
                return Ok(scalar_term(s.pow(*num)));
            }
            if *num >= 0 {
                let mut acc = scalar_term(Scalar::one());
                for _ in 0..*num {
                    acc = free_mul(&acc, &v);
                }
                Ok(acc)
            } else {
                // Negative powers: only of a single generator with an inverse.
                if v.len() == 1 {
                    let (w, c) = v.iter().next().expect("nonempty");
                    if w.len() == 1 && c.is_one() {
                        if let Some(inv) = scope.inverse_of(w[0]) {
                            let mut cell = TermMap::new();
                            cell.insert(vec![inv], Scalar::one());
                            let mut acc = scalar_term(Scalar::one());
                            for _ in 0..num.unsigned_abs() {
                                acc = free_mul(&acc, &cell);
                            }
                            return Ok(acc);
                        }
                        return Err(ExprError::NoInverse(scope.gen_label(w[0])));
                    }
                }
                Err(ExprError::NoInverse("a compound expression".to_owned()))
            }
        }
        Expr::Star(e) => {
            let v = eval(e, scope)?;
            let mut out = TermMap::new();
            for (w, c) in &v {
                let mut sw = Vec::with_capacity(w.len());
                let mut sc = c.conjugate();
                for &g in w.iter().rev() {
                    let (h, factor) = scope
                        .star_of(g)
                        .ok_or_else(|| ExprError::StarUnavailable(scope.gen_label(g)))?;
                    sw.push(h);
                    sc = &sc * &factor;
                }
                merge(&mut out, sw, sc);
            }
            Ok(out)
        }
        Expr::Diff(e) => {
            let v = eval(e, scope)?;
            scope.apply_d(&v)
        }
        Expr::Bracket { a, b, p } => {
            let va = eval(a, scope)?;
            let vb = eval(b, scope)?;
            let ps = match p {
                Some(e) => {
                    let pv = eval(e, scope)?;
                    as_scalar(&pv).ok_or(ExprError::NonScalarDivisor)?
                }
                None => Scalar::one(),
            };
            let mut out = free_mul(&va, &vb);
            for (w, c) in scale_terms(&free_mul(&vb, &va), &ps) {
                merge(&mut out, w, -&c);
            }
            Ok(out)
        }
    }
}

fn merge(map: &mut TermMap, word: Vec<u32>, coeff: Scalar) {
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

/// Parse and evaluate in one step.
pub fn eval_str(src: &str, scope: &dyn EvalScope) -> Result<TermMap, ExprError> {
    eval(&parse(src)?, scope)
}

/// Parse a source string that must denote a pure scalar.
pub fn scalar_from_str(src: &str) -> Result<Scalar, ExprError> {
    let v = eval_str(src, &ScalarScope)?;
    as_scalar(&v).ok_or(ExprError::NonScalarDivisor)
}
