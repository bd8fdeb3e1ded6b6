//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! All polynomials live in a fixed ambient ring with [`NVARS`] indeterminates,
//! addressed by axis index.  Monomials are compared lexicographically with
//! axis 0 most significant; that order is what "leading term" and "monic"
//! refer to throughout.

use super::gauss::GaussRat;
use num::{BigInt, BigRational, Integer, One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of indeterminates in the ambient polynomial ring.
pub const NVARS: usize = 8;

/// Exponent vector of a monomial.  Derived `Ord` on the array is exactly
/// lexicographic comparison with axis 0 most significant.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    /// The trivial monomial (all exponents zero).
    pub fn unit() -> Self {
        Mono([0; NVARS])
    }

    /// The single indeterminate `axis` to the first power.
    pub fn axis(axis: usize) -> Self {
        let mut e = [0u16; NVARS];
        e[axis] = 1;
        Mono(e)
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials (exponent sum).  Panics on exponent overflow,
    /// which is unreachable for the degrees this engine works with.
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = [0u16; NVARS];
        for k in 0..NVARS {
            out[k] = self.0[k]
                .checked_add(other.0[k])
                .expect("monomial exponent overflow");
        }
        Mono(out)
    }

    /// Exact quotient of monomials, or `None` when any exponent would go
    /// negative.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = [0u16; NVARS];
        for k in 0..NVARS {
            out[k] = self.0[k].checked_sub(other.0[k])?;
        }
        Some(Mono(out))
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Poly(BTreeMap<Mono, GaussRat>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        Poly(terms)
    }

    pub fn var(axis: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::axis(axis), GaussRat::one());
        Poly(terms)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1
            && self
                .0
                .get(&Mono::unit())
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1 && self.0.keys().all(Mono::is_unit)
    }

    /// The constant value when this polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            Some(GaussRat::zero())
        } else if self.is_constant() {
            self.0.values().next().cloned()
        } else {
            None
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Mono, &GaussRat)> {
        self.0.iter()
    }

    pub fn term_count(&self) -> usize {
        self.0.len()
    }

    /// Leading (lexicographically greatest) term.
    pub fn leading(&self) -> Option<(&Mono, &GaussRat)> {
        self.0.last_key_value()
    }

    /// True when the indeterminate `axis` occurs in some term.
    pub fn uses_axis(&self, axis: usize) -> bool {
        self.0.keys().any(|m| m.0[axis] > 0)
    }

    /// Largest exponent of `axis` over all terms.
    pub fn deg_in(&self, axis: usize) -> u16 {
        self.0.keys().map(|m| m.0[axis]).max().unwrap_or(0)
    }

    /// Highest axis that occurs with positive exponent.
    fn max_axis(&self) -> Option<usize> {
        (0..NVARS).rev().find(|&axis| self.uses_axis(axis))
    }


    fn insert_add(&mut self, mono: Mono, coeff: GaussRat) {
        if coeff.is_zero() {
            return;
        }
        match self.0.entry(mono) {
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

    /// Multiply by a single term `coeff * mono`.
    pub fn mul_term(&self, mono: &Mono, coeff: &GaussRat) -> Poly {
        if coeff.is_zero() {
            return Poly::zero();
        }
        Poly(
            self.0
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coeff))
                .collect(),
        )
    }

    pub fn scale(&self, coeff: &GaussRat) -> Poly {
        self.mul_term(&Mono::unit(), coeff)
    }

    /// Divide every coefficient by the leading one, returning the monic
    /// polynomial and the leading coefficient that was removed.
    pub fn monic(&self) -> (Poly, GaussRat) {
        match self.leading() {
            None => (Poly::zero(), GaussRat::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                (self.scale(&lc.inv()), lc)
            }
        }
    }

    /// Conjugate every coefficient (the indeterminates are fixed by
    /// conjugation).
    pub fn conj(&self) -> Poly {
        Poly(self.0.iter().map(|(m, c)| (*m, c.conj())).collect())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / div`, or `None` when `div` does not divide
    /// `self` in the polynomial ring.
    pub fn exact_div(&self, div: &Poly) -> Option<Poly> {
        let (dm, dc) = div.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.checked_div(dm)?;
            let qc = rc / dc;
            let piece = div.mul_term(&qm, &qc);
            rem = &rem - &piece;
            quot.insert_add(qm, qc);
        }
        Some(quot)
    }

    /// Decompose as a univariate polynomial in `axis`: exponent of `axis`
    /// mapped to the coefficient polynomial (with that axis zeroed out).
    fn by_axis(&self, axis: usize) -> BTreeMap<u16, Poly> {
        let mut out: BTreeMap<u16, Poly> = BTreeMap::new();
        for (m, c) in &self.0 {
            let mut stripped = *m;
            let d = stripped.0[axis];
            stripped.0[axis] = 0;
            out.entry(d).or_default().insert_add(stripped, c.clone());
        }
        out
    }

    /// Coefficient of `axis^d`, as a polynomial in the remaining axes.
    fn coeff_of_power(&self, axis: usize, d: u16) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.0 {
            if m.0[axis] == d {
                let mut stripped = *m;
                stripped.0[axis] = 0;
                out.insert_add(stripped, c.clone());
            }
        }
        out
    }

    /// Content with respect to `axis`: gcd of the coefficient polynomials of
    /// the univariate decomposition.
    fn content_in(&self, axis: usize) -> Poly {
        let mut acc = Poly::zero();
        for coeff in self.by_axis(axis).into_values() {
            acc = gcd(&acc, &coeff);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Scale by a positive rational so that every coefficient component is an
    /// integer and the integer parts share no factor.  A unit rescaling, used
    /// inside the gcd to stop rational coefficients from snowballing.
    fn int_normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.0.values() {
            denom_lcm = denom_lcm.lcm(c.re.denom());
            denom_lcm = denom_lcm.lcm(c.im.denom());
        }
        let mut content = BigInt::zero();
        for c in self.0.values() {
            let re_i = c.re.numer() * (&denom_lcm / c.re.denom());
            let im_i = c.im.numer() * (&denom_lcm / c.im.denom());
            content = content.gcd(&re_i).gcd(&im_i);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let scale = GaussRat::from_rational(BigRational::new(denom_lcm, content));
        self.scale(&scale)
    }

    /// Substitute a number for `axis`.
    pub fn eval_axis(&self, axis: usize, value: &GaussRat) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.0 {
            let mut stripped = *m;
            let d = stripped.0[axis];
            stripped.0[axis] = 0;
            out.insert_add(stripped, c * &pow_gauss(value, d));
        }
        out
    }

    /// Evaluate fully at a point.  Returns `Err(axis)` if some axis occurs in
    /// the polynomial but has no binding.
    pub fn eval_full(&self, point: &[Option<GaussRat>; NVARS]) -> Result<GaussRat, usize> {
        let mut total = GaussRat::zero();
        for (m, c) in &self.0 {
            let mut term = c.clone();
            for axis in 0..NVARS {
                let e = m.0[axis];
                if e == 0 {
                    continue;
                }
                let v = point[axis].as_ref().ok_or(axis)?;
                term = &term * &pow_gauss(v, e);
            }
            total = &total + &term;
        }
        Ok(total)
    }
}

fn pow_gauss(base: &GaussRat, exp: u16) -> GaussRat {
    let mut out = GaussRat::one();
    for _ in 0..exp {
        out = &out * base;
    }
    out
}

/// True pseudo-remainder in the Collins sense: `lc(b)^(d+1) * a  mod  b`
/// viewed univariately in `axis`, where `d = deg a - deg b >= 0`.
fn collins_prem(a: &Poly, b: &Poly, axis: usize) -> Poly {
    let n = b.deg_in(axis);
    let lb = b.coeff_of_power(axis, n);
    let delta = a.deg_in(axis) - n;
    let mut r = a.clone();
    let mut extra = delta + 1;
    while !r.is_zero() && r.deg_in(axis) >= n {
        let d = r.deg_in(axis);
        let lr = r.coeff_of_power(axis, d);
        let mut shift = Mono::unit();
        shift.0[axis] = d - n;
        let sub = &b.mul_term(&shift, &GaussRat::one()) * &lr;
        r = &(&r * &lb) - &sub;
        extra -= 1;
    }
    for _ in 0..extra {
        r = &r * &lb;
    }
    r
}

/// Subresultant polynomial remainder sequence on inputs that are primitive
/// with respect to `axis` and have positive degree there.  Returns the gcd of
/// the inputs up to content in `axis`; the caller strips that content.  The
/// interleaved exact divisions keep coefficient growth polynomial, which the
/// naive primitive sequence does not.
fn subresultant_gcd(mut p: Poly, mut q: Poly, axis: usize) -> Poly {
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = p.deg_in(axis) - q.deg_in(axis);
        let r = collins_prem(&p, &q, axis);
        if r.is_zero() {
            return q;
        }
        if r.deg_in(axis) == 0 {
            // a nonzero remainder free of `axis`: the primitive gcd is trivial
            return Poly::one();
        }
        let divisor = &g * &h.pow(u32::from(delta));
        let reduced = r.exact_div(&divisor).expect("subresultant division is exact");
        p = q;
        q = reduced;
        g = p.coeff_of_power(axis, p.deg_in(axis));
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(u32::from(delta))
                .exact_div(&h.pow(u32::from(delta - 1)))
                .expect("subresultant h-update is exact"),
        };
    }
}

/// Monic gcd, recursing on the active indeterminates: content is split off
/// and handled recursively, and the primitive parts go through the
/// subresultant remainder sequence.  `gcd(0, 0) == 0`; otherwise the result
/// is monic under the lexicographic order.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic().0;
    }
    if b.is_zero() {
        return a.monic().0;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    // Trial divisions catch the frequent case where one argument divides the
    // other outright, bypassing the remainder sequence entirely.
    if a.exact_div(b).is_some() {
        return b.monic().0;
    }
    if b.exact_div(a).is_some() {
        return a.monic().0;
    }
    let axis = a.max_axis().unwrap().max(b.max_axis().unwrap());
    if a.deg_in(axis) == 0 {
        return gcd(a, &b.content_in(axis));
    }
    if b.deg_in(axis) == 0 {
        return gcd(&a.content_in(axis), b);
    }
    let a = a.int_normalized();
    let b = b.int_normalized();
    let ca = a.content_in(axis);
    let cb = b.content_in(axis);
    let g = gcd(&ca, &cb);
    let mut p = a.exact_div(&ca).expect("content divides").int_normalized();
    let mut q = b.exact_div(&cb).expect("content divides").int_normalized();
    if p.deg_in(axis) < q.deg_in(axis) {
        std::mem::swap(&mut p, &mut q);
    }
    let raw = subresultant_gcd(p, q, axis);
    let prim = if raw.deg_in(axis) == 0 {
        Poly::one()
    } else {
        let cr = raw.content_in(axis);
        raw.exact_div(&cr).expect("content divides")
    };
    (&g * &prim).monic().0
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.insert_add(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.insert_add(*m, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &rhs.0 {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|(m, c)| (*m, -c)).collect())
    }
}
