//! The exact coefficient field: rational functions over the Gaussian
//! rationals in eight named indeterminates.
//!
//! Every [`Scalar`] is kept in a canonical form — numerator and denominator
//! coprime, denominator monic under the lexicographic monomial order — so
//! structural equality, ordering and hashing agree with mathematical
//! equality.  The deformation parameter is carried as its square root
//! [`Var::QHalf`], so `q` itself is `QHalf^2` and half-integer powers of `q`
//! stay inside the field.

mod gauss;
mod poly;

pub use gauss::GaussRat;
pub use poly::{gcd, Mono, Poly, NVARS};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

/// The named indeterminates, in their fixed axis order (axis 0 is most
/// significant in the monomial order).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// `q^(1/2)`, the square root of the deformation parameter.
    QHalf,
    /// `λ`, the fuzzy-sphere deformation parameter.
    Lambda,
    /// `t`, an auxiliary deformation / slice parameter.
    T,
    /// `s`, the sphere-family parameter entering only through `s^2`.
    S,
    /// `ℓ`, the noncommutative-spacetime length scale.
    Ell,
    /// `ω`, a frequency parameter for plane waves.
    Omega,
    /// `k₁`, a wave-vector component.
    K1,
    /// `k₂`, a wave-vector component.
    K2,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::QHalf,
        Var::Lambda,
        Var::T,
        Var::S,
        Var::Ell,
        Var::Omega,
        Var::K1,
        Var::K2,
    ];

    pub fn axis(self) -> usize {
        match self {
            Var::QHalf => 0,
            Var::Lambda => 1,
            Var::T => 2,
            Var::S => 3,
            Var::Ell => 4,
            Var::Omega => 5,
            Var::K1 => 6,
            Var::K2 => 7,
        }
    }

    pub fn from_axis(axis: usize) -> Var {
        Var::ALL[axis]
    }

    /// Canonical display name (unicode where the symbol has one).
    pub fn display_name(self) -> &'static str {
        match self {
            Var::QHalf => "q^(1/2)",
            Var::Lambda => "λ",
            Var::T => "t",
            Var::S => "s",
            Var::Ell => "ℓ",
            Var::Omega => "ω",
            Var::K1 => "k₁",
            Var::K2 => "k₂",
        }
    }

    /// Parse a parameter name; both the unicode symbol and an ascii alias are
    /// accepted.
    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "qhalf" => Some(Var::QHalf),
            "lambda" | "λ" => Some(Var::Lambda),
            "t" => Some(Var::T),
            "s" => Some(Var::S),
            "ell" | "ℓ" => Some(Var::Ell),
            "omega" | "ω" => Some(Var::Omega),
            "k1" | "k₁" => Some(Var::K1),
            "k2" | "k₂" => Some(Var::K2),
            _ => None,
        }
    }
}

/// Errors from scalar evaluation and substitution.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("denominator vanishes at the requested point")]
    Pole,
    #[error("parameter {0} is unbound at evaluation")]
    Unbound(&'static str),
    #[error("odd power of {0} where only even powers can be substituted")]
    OddPower(&'static str),
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of the fraction field, in reduced form with monic denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// Build `num / den` and reduce to canonical form.  Panics if `den` is
    /// the zero polynomial; use [`Scalar::checked_div`] for fallible division.
    pub fn new(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "scalar with zero denominator");
        if num.is_zero() {
            return Scalar { num: Poly::zero(), den: Poly::one() };
        }
        let g = gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        let (monic_den, lc) = den.monic();
        den = monic_den;
        num = num.scale(&lc.inv());
        Scalar { num, den }
    }

    pub fn from_poly(num: Poly) -> Scalar {
        Scalar::new(num, Poly::one())
    }

    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::from_poly(Poly::constant(GaussRat::from_int(n)))
    }

    pub fn frac(p: i64, q: i64) -> Scalar {
        Scalar::from_poly(Poly::constant(GaussRat::from_frac(p, q)))
    }

    /// The imaginary unit.
    pub fn imag() -> Scalar {
        Scalar::from_poly(Poly::constant(GaussRat::i()))
    }

    pub fn gauss(c: GaussRat) -> Scalar {
        Scalar::from_poly(Poly::constant(c))
    }

    pub fn from_bigint(n: &num::BigInt) -> Scalar {
        Scalar::gauss(GaussRat::from_rational(num::BigRational::from(n.clone())))
    }

    pub fn var(v: Var) -> Scalar {
        Scalar::from_poly(Poly::var(v.axis()))
    }

    /// The deformation parameter `q = (q^(1/2))^2`.
    pub fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    /// Integer power of `q`, negative exponents allowed.
    pub fn q_pow(k: i64) -> Scalar {
        Scalar::qhalf_pow(2 * k)
    }

    /// Integer power of `q^(1/2)`, negative exponents allowed.
    pub fn qhalf_pow(k: i64) -> Scalar {
        let mut mono = Mono::unit();
        mono.0[Var::QHalf.axis()] = u16::try_from(k.unsigned_abs()).expect("exponent too large");
        let mono_poly = Poly::one().mul_term(&mono, &GaussRat::one());
        if k >= 0 {
            Scalar::from_poly(mono_poly)
        } else {
            Scalar::new(Poly::one(), mono_poly)
        }
    }

    /// `μ = 1 - q^{-2}`.
    pub fn mu() -> Scalar {
        &Scalar::one() - &Scalar::q_pow(-2)
    }

    /// `λ` as a scalar.
    pub fn lambda() -> Scalar {
        Scalar::var(Var::Lambda)
    }

    /// `λ' = λ / (q^2 - 1)`.
    pub fn lambda_prime() -> Scalar {
        &Scalar::lambda() / &(&Scalar::q_pow(2) - &Scalar::one())
    }

    /// `s^2` expressed through `λ`: `λ / (q^2 - 1 - λ)`.
    pub fn s_squared_from_lambda() -> Scalar {
        let den = &(&Scalar::q_pow(2) - &Scalar::one()) - &Scalar::lambda();
        &Scalar::lambda() / &den
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The constant value when no indeterminate occurs.
    pub fn as_constant(&self) -> Option<GaussRat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses_axis(v.axis()) || self.den.uses_axis(v.axis())
    }

    /// Multiplicative inverse.  Panics on zero; use [`Scalar::checked_div`]
    /// when the argument may vanish.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            None
        } else {
            Some(self * &rhs.inv())
        }
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut out = Scalar::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    /// Complex conjugate: coefficients are conjugated, indeterminates are
    /// fixed (all parameters are taken real).
    pub fn conjugate(&self) -> Scalar {
        Scalar::new(self.num.conj(), self.den.conj())
    }

    /// Substitute a number for one parameter, keeping the rest symbolic.
    pub fn specialize_var(&self, v: Var, value: &GaussRat) -> Result<Scalar, ScalarError> {
        let num = self.num.eval_axis(v.axis(), value);
        let den = self.den.eval_axis(v.axis(), value);
        if den.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(Scalar::new(num, den))
    }

    /// Evaluate at a point.  Every parameter that occurs must be bound.
    pub fn eval(&self, bind: &BTreeMap<Var, GaussRat>) -> Result<GaussRat, ScalarError> {
        let mut point: [Option<GaussRat>; NVARS] = Default::default();
        for (v, c) in bind {
            point[v.axis()] = Some(c.clone());
        }
        let unbound = |axis: usize| ScalarError::Unbound(Var::from_axis(axis).display_name());
        let n = self.num.eval_full(&point).map_err(unbound)?;
        let d = self.den.eval_full(&point).map_err(unbound)?;
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(&n / &d)
    }

    /// Substitute a scalar for one parameter.
    pub fn substitute(&self, v: Var, value: &Scalar) -> Result<Scalar, ScalarError> {
        let num = apply_poly(&self.num, |axis| {
            if axis == v.axis() {
                value.clone()
            } else {
                Scalar::var(Var::from_axis(axis))
            }
        });
        let den = apply_poly(&self.den, |axis| {
            if axis == v.axis() {
                value.clone()
            } else {
                Scalar::var(Var::from_axis(axis))
            }
        });
        num.checked_div(&den).ok_or(ScalarError::Pole)
    }

    /// Substitute a scalar for the *square* of one parameter.  Fails when the
    /// parameter occurs to an odd power anywhere.
    pub fn substitute_even(&self, v: Var, square_value: &Scalar) -> Result<Scalar, ScalarError> {
        let num = apply_poly_even(&self.num, v, square_value)?;
        let den = apply_poly_even(&self.den, v, square_value)?;
        num.checked_div(&den).ok_or(ScalarError::Pole)
    }
}

/// Map a polynomial through scalar arithmetic with the given images for the
/// indeterminates.
fn apply_poly(p: &Poly, image: impl Fn(usize) -> Scalar) -> Scalar {
    let mut total = Scalar::zero();
    for (m, c) in p.iter() {
        let mut term = Scalar::gauss(c.clone());
        for axis in 0..NVARS {
            let e = m.0[axis];
            if e > 0 {
                term = &term * &image(axis).pow(i64::from(e));
            }
        }
        total = &total + &term;
    }
    total
}

fn apply_poly_even(p: &Poly, v: Var, square_value: &Scalar) -> Result<Scalar, ScalarError> {
    let mut total = Scalar::zero();
    for (m, c) in p.iter() {
        let mut term = Scalar::gauss(c.clone());
        for axis in 0..NVARS {
            let e = m.0[axis];
            if e == 0 {
                continue;
            }
            if axis == v.axis() {
                if e % 2 != 0 {
                    return Err(ScalarError::OddPower(v.display_name()));
                }
                term = &term * &square_value.pow(i64::from(e / 2));
            } else {
                term = &term * &Scalar::var(Var::from_axis(axis)).pow(i64::from(e));
            }
        }
        total = &total + &term;
    }
    Ok(total)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::new(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::new(num, den)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        Scalar::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Scalar {
    /// Whether the printed form would start with a minus sign, so callers can
    /// pull the sign out and print `- |self|` instead.  True exactly when the
    /// numerator has a single term whose coefficient is a negative real or a
    /// negative pure imaginary.
    pub fn display_negative(&self) -> bool {
        use num::{Signed, Zero};
        if self.num.term_count() != 1 {
            return false;
        }
        let (_, c) = self.num.iter().next().expect("single term");
        (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative())
    }

    /// Whether this scalar must be parenthesized when prefixed to a word in a
    /// product: multi-term numerators over a trivial denominator are the only
    /// ambiguous case (fractions already print fully wrapped).
    pub fn needs_parens_in_product(&self) -> bool {
        self.den.is_one() && self.num.term_count() > 1
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", poly_to_string(&self.num))
        } else {
            write!(f, "({})/({})", poly_to_string(&self.num), poly_to_string(&self.den))
        }
    }
}

/// Render one monomial's variable part, `None` for the trivial monomial.
fn mono_to_string(m: &Mono) -> Option<String> {
    let mut parts: Vec<String> = Vec::new();
    for axis in 0..NVARS {
        let e = m.0[axis];
        if e == 0 {
            continue;
        }
        let v = Var::from_axis(axis);
        if v == Var::QHalf {
            // exponent of q^(1/2), rendered in terms of q
            let s = match e {
                1 => "q^(1/2)".to_string(),
                2 => "q".to_string(),
                _ if e % 2 == 0 => format!("q^{}", e / 2),
                _ => format!("q^({}/2)", e),
            };
            parts.push(s);
        } else if e == 1 {
            parts.push(v.display_name().to_string());
        } else {
            parts.push(format!("{}^{}", v.display_name(), e));
        }
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

/// Render a polynomial with terms in descending lexicographic order.
pub(crate) fn poly_to_string(p: &Poly) -> String {
    use num::{Signed, Zero};
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.iter().rev().enumerate() {
        // Pull an explicit sign out of real or purely imaginary coefficients.
        let (neg, abs) = if c.im.is_zero() && c.re.is_negative() {
            (true, GaussRat { re: -c.re.clone(), im: c.im.clone() })
        } else if c.re.is_zero() && c.im.is_negative() {
            (true, GaussRat { re: c.re.clone(), im: -c.im.clone() })
        } else {
            (false, c.clone())
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match mono_to_string(m) {
            None => out.push_str(&abs.to_string()),
            Some(vars) => {
                if abs.is_one() {
                    out.push_str(&vars);
                } else {
                    out.push_str(&format!("{abs}*{vars}"));
                }
            }
        }
    }
    out
}
