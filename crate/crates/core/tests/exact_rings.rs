mod common;

use gassner_core::rings::{
    cyclotomic_polynomial, poly_gcd, CycloNum, CyclotomicField, Involution, LaurentPoly, RationalFunction, Ring,
};
use gassner_core::Error;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

fn x(m: usize, i: usize) -> LaurentPoly {
    LaurentPoly::var(m, i)
}

fn one(m: usize) -> LaurentPoly {
    LaurentPoly::one(m)
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn unit_cancellation() {
    let x1 = x(2, 0);
    assert!((&x1 * &x1.involute()).is_one());
}

#[test]
fn difference_of_squares() {
    let x1 = x(2, 0);
    assert_eq!(&(&one(2) - &x1) * &(&one(2) + &x1), &one(2) - &(&x1 * &x1));
}

#[test]
fn determinant_numerator_identity() {
    let m = 3;
    let (x1, x2, x3) = (x(m, 0), x(m, 1), x(m, 2));
    let lhs = &(&(&one(m) - &(&x1 * &x2)) * &(&one(m) - &(&x2 * &x3)))
        - &(&x2 * &(&(&one(m) - &x1) * &(&one(m) - &x3)));
    let rhs = &(&one(m) - &x2) * &(&one(m) - &(&(&x1 * &x2) * &x3));
    assert_eq!(lhs, rhs);
}

#[test]
fn variable_count_mismatch() {
    assert!(matches!(x(2, 0).checked_add(&x(3, 0)), Err(Error::VariableCountMismatch { .. })));
}

#[test]
fn involution_examples() {
    let m = 2;
    assert_eq!(x(m, 0).involute(), LaurentPoly::monomial(gassner_core::rings::ExponentVector::from_slice(&[-1, 0]), 1));
    let a = &one(m) - &x(m, 1);
    assert_eq!(a.involute(), &one(m) - &x(m, 1).involute());
    let h11 = RationalFunction::new(
        &one(m) - &(&x(m, 0) * &x(m, 1)),
        &(&one(m) - &x(m, 0)) * &(&one(m) - &x(m, 1)),
    )
    .unwrap();
    assert_eq!(h11.involute(), -&h11);
    assert!(!h11.is_self_conjugate());
    let sym = &x(m, 0) + &x(m, 0).involute();
    assert!(sym.is_self_conjugate());
    assert!(!x(m, 0).is_self_conjugate());
}

#[test]
fn specialization_examples() {
    let f = CyclotomicField::new(3);
    let w = CycloNum::omega_pow(&f, 1);
    assert_eq!(x(2, 0).specialize(&f, &[1, 1]).unwrap(), w);
    let phi3 = &(&one(2) + &x(2, 0)) + &(&x(2, 0) * &x(2, 0));
    assert!(phi3.specialize(&f, &[1, 1]).unwrap().is_zero());

    let inv = RationalFunction::new(one(2), &one(2) - &x(2, 0)).unwrap().specialize(&f, &[1, 1]).unwrap();
    assert_eq!(inv, CycloNum::from_coeffs(&f, &[q(2, 3), q(1, 3)]));
    let direct = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0));
    assert!((inv.embed(1).unwrap() - direct).norm() < 1e-12);
}

#[test]
fn vanishing_denominator_is_reported() {
    let f = CyclotomicField::new(3);
    let r = RationalFunction::new(one(2), &one(2) - &(&x(2, 0) * &x(2, 1))).unwrap();
    assert!(matches!(r.specialize(&f, &[1, 2]), Err(Error::ZeroDenominator { .. })));
    assert!(matches!(x(2, 0).specialize(&f, &[3, 1]), Err(Error::NotCoprime { .. })));
}

#[test]
fn embedding_examples() {
    let f3 = CyclotomicField::new(3);
    let w = CycloNum::omega_pow(&f3, 1);
    let z = w.embed(1).unwrap();
    assert!((z - Complex64::new(-0.5, 0.8660254037844386)).norm() < 1e-12);
    let s = Ring::add(&w, &CycloNum::omega_pow(&f3, 2));
    assert!((s.embed(1).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);

    let f18 = CyclotomicField::new(18);
    let a = CycloNum::omega_pow(&f18, 7).embed(1).unwrap();
    let b = CycloNum::omega_pow(&f18, 1).embed(7).unwrap();
    assert!((a - b).norm() < 1e-12);
    assert!(matches!(w.embed(3), Err(Error::NotCoprime { .. })));
}

#[test]
fn cyclotomic_polynomials() {
    let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(cyclotomic_polynomial(1), c(&[-1, 1]));
    assert_eq!(cyclotomic_polynomial(6), c(&[1, -1, 1]));
    assert_eq!(cyclotomic_polynomial(12), c(&[1, 0, -1, 0, 1]));
    for d in 2..=24u32 {
        assert_eq!(CyclotomicField::new(d).degree() as u32, gassner_core::rings::euler_phi(d));
    }
}

#[test]
fn canonical_text() {
    let m = 2;
    let p = &(&one(m) - &x(m, 0)) * &x(m, 1).involute();
    let s = p.to_string();
    assert_eq!(s, p.clone().to_string());
    let f = CyclotomicField::new(5);
    let z = Ring::add(&CycloNum::one(&f), &CycloNum::omega_pow(&f, 2));
    assert!(z.to_string().contains("Phi_5"));
}

fn cyclo(d: u32) -> impl Strategy<Value = CycloNum> {
    let field = CyclotomicField::new(d);
    prop::collection::vec((-6i64..=6, 1i64..=4), field.degree()).prop_map(move |cs| {
        let coeffs: Vec<BigRational> = cs.into_iter().map(|(a, b)| q(a, b)).collect();
        CycloNum::from_coeffs(&field, &coeffs)
    })
}

fn embed_all(z: &CycloNum) -> Complex64 {
    z.embed(1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laurent_ring_axioms(a in common::laurent(3), b in common::laurent(3), c in common::laurent(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_involution(a in common::laurent(3), b in common::laurent(3)) {
        prop_assert_eq!(a.involute().involute(), a.clone());
        prop_assert_eq!((&a * &b).involute(), &a.involute() * &b.involute());
        prop_assert_eq!((&a + &b).involute(), &a.involute() + &b.involute());
    }

    #[test]
    fn specialization_is_a_homomorphism(
        a in common::laurent(3),
        b in common::laurent(3),
        d in prop::sample::select(vec![3u32, 4, 5, 7, 8, 9, 12]),
        seed in 0usize..64,
    ) {
        let field = CyclotomicField::new(d);
        let units: Vec<i64> = (1..d as i64).filter(|&k| num_integer::gcd(k, d as i64) == 1).collect();
        let k: Vec<i64> = (0..3).map(|i| units[(seed + 3 * i) % units.len()]).collect();
        let sa = a.specialize(&field, &k).unwrap();
        let sb = b.specialize(&field, &k).unwrap();
        prop_assert_eq!((&a * &b).specialize(&field, &k).unwrap(), Ring::mul(&sa, &sb));
        prop_assert_eq!((&a + &b).specialize(&field, &k).unwrap(), Ring::add(&sa, &sb));
        prop_assert_eq!(a.involute().specialize(&field, &k).unwrap(), sa.involute());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn embedding_matches_complex_arithmetic(
        (a, b) in (2u32..=24).prop_flat_map(|d| (cyclo(d), cyclo(d)))
    ) {
        let (za, zb) = (embed_all(&a), embed_all(&b));
        prop_assert!((embed_all(&Ring::mul(&a, &b)) - za * zb).norm() < 1e-10);
        prop_assert!((embed_all(&Ring::add(&a, &b)) - (za + zb)).norm() < 1e-10);
        prop_assert!((embed_all(&a.involute()) - za.conj()).norm() < 1e-10);
        if !a.is_zero() {
            let inv = gassner_core::rings::Field::inv(&a).unwrap();
            prop_assert!((embed_all(&inv) * za - Complex64::new(1.0, 0.0)).norm() < 1e-8);
        }
    }

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in (2u32..=12).prop_flat_map(|d| (cyclo(d), cyclo(d), cyclo(d)))) {
        prop_assert_eq!(Ring::mul(&Ring::mul(&a, &b), &c), Ring::mul(&a, &Ring::mul(&b, &c)));
        prop_assert_eq!(Ring::mul(&a, &Ring::add(&b, &c)), Ring::add(&Ring::mul(&a, &b), &Ring::mul(&a, &c)));
        prop_assert_eq!(a.involute().involute(), a.clone());
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in common::laurent(2), b in common::laurent(2), c in common::laurent(2)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let g = poly_gcd(&(&a * &c), &(&b * &c));
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!((&b * &c).div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some());
    }

    #[test]
    fn rational_function_field_axioms(a in common::laurent(2), b in common::laurent(2), c in common::laurent(2)) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let r = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let s = RationalFunction::new(c.clone(), b.clone()).unwrap();
        let t = RationalFunction::new(b.clone(), c.clone()).unwrap();
        prop_assert_eq!(Ring::mul(&Ring::mul(&r, &s), &t), Ring::mul(&r, &Ring::mul(&s, &t)));
        prop_assert_eq!(Ring::mul(&r, &Ring::add(&s, &t)), Ring::add(&Ring::mul(&r, &s), &Ring::mul(&r, &t)));
        prop_assert!(Ring::mul(&s, &t).is_one());
        prop_assert_eq!(r.involute().involute(), r.clone());
    }
}
