//! Property tests: the rewritten product really is an associative algebra
//! with a star structure, independent of how expressions are staged.

use braidcalc::freealg::{shipped, NcElement, Presentation, TermMap};
use braidcalc::scalar::Scalar;
use proptest::prelude::*;

/// Random term maps over the braided-matrix generators: up to three words of
/// length at most three, with small Gaussian-integer coefficients.
fn small_terms() -> impl Strategy<Value = TermMap> {
    let word = proptest::collection::vec(0u32..4, 0..=3);
    let coeff = (-3i64..=3, -2i64..=2, 0u8..3).prop_map(|(re, im, qp)| {
        let base = &Scalar::int(re) + &(&Scalar::imag() * &Scalar::int(im));
        &base * &Scalar::q_pow(i64::from(qp))
    });
    proptest::collection::btree_map(word, coeff, 0..=3)
}

fn elem(pres: &Presentation, terms: TermMap) -> NcElement {
    NcElement::from_terms(pres, terms).expect("within budget")
}

/// Product in the free algebra: concatenate words, merge coefficients.
fn free_product(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            let c = ca * cb;
            let total = match out.remove(&w) {
                Some(prev) => &prev + &c,
                None => c,
            };
            if !total.is_zero() {
                out.insert(w, total);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_is_idempotent(t in small_terms()) {
        let bm = shipped::bqm2();
        let x = elem(&bm, t);
        prop_assert_eq!(x.renormalize().unwrap(), x);
    }

    #[test]
    fn product_is_associative(a in small_terms(), b in small_terms(), c in small_terms()) {
        let bm = shipped::bqm2();
        let (a, b, c) = (elem(&bm, a), elem(&bm, b), elem(&bm, c));
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes_over_sums(a in small_terms(), b in small_terms(), c in small_terms()) {
        let bm = shipped::bqm2();
        let (a, b, c) = (elem(&bm, a), elem(&bm, b), elem(&bm, c));
        let left = (&a + &b).mul(&c).unwrap();
        let right = &a.mul(&c).unwrap() + &b.mul(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_an_antilinear_antihomomorphism(a in small_terms(), b in small_terms()) {
        let bm = shipped::bqm2();
        let (a, b) = (elem(&bm, a), elem(&bm, b));
        prop_assert_eq!(a.star().unwrap().star().unwrap(), a.clone());
        let lhs = a.mul(&b).unwrap().star().unwrap();
        let rhs = b.star().unwrap().mul(&a.star().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Antilinearity in a scalar factor.
        let c = &Scalar::frac(2, 3) + &Scalar::imag();
        let scaled = a.scale(&c).star().unwrap();
        prop_assert_eq!(scaled, a.star().unwrap().scale(&c.conjugate()));
    }

    #[test]
    fn rewriting_commutes_with_products(a in small_terms(), b in small_terms()) {
        // Normalize-then-multiply equals multiply-then-normalize.
        let bm = shipped::bqm2();
        let unstaged = free_product(&a, &b);
        let staged = elem(&bm, a).mul(&elem(&bm, b)).unwrap();
        prop_assert_eq!(elem(&bm, unstaged), staged);
    }
}
