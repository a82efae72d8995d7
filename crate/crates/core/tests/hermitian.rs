mod common;

use gassner_core::braid::{full_twist, pure_generator, pure_generators, BraidWord};
use gassner_core::gassner::{evaluate_word, Basis};
use gassner_core::hermitian::{
    cleared_form_matrix, determinant_closed_form, form_determinant, form_matrix, is_degenerate, is_invariant,
    signature, signature_report, specialize_form, verify_invariance, EIGENVALUE_TOLERANCE,
};
use gassner_core::rings::{CycloNum, CyclotomicField, Involution, LaurentPoly, RationalFunction, Ring};
use gassner_core::spectral::specialize_rep;
use gassner_core::Error;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn x(m: usize, i: usize) -> LaurentPoly {
    LaurentPoly::var(m, i)
}

fn om(m: usize, p: LaurentPoly) -> LaurentPoly {
    &LaurentPoly::one(m) - &p
}

#[test]
fn form_examples() {
    let m = 2;
    let h = form_matrix(1);
    let expected = RationalFunction::new(om(m, &x(m, 0) * &x(m, 1)), &om(m, x(m, 0)) * &om(m, x(m, 1))).unwrap();
    assert_eq!(h.get(0, 0), &expected);
    let m = 3;
    let h = form_matrix(2);
    assert_eq!(h.get(0, 1), &RationalFunction::new(LaurentPoly::constant(m, -1), om(m, x(m, 1))).unwrap());
    assert_eq!(h.get(1, 0), &RationalFunction::new(-&x(m, 1), om(m, x(m, 1))).unwrap());
    assert!(Ring::is_zero(form_matrix(3).get(0, 2)));
}

#[test]
fn skew_hermitian_and_tridiagonal() {
    for n in 1..=6 {
        let h = form_matrix(n);
        assert_eq!(h.adjoint(), h.neg());
    }
    for n in 1..=8 {
        let h = form_matrix(n);
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) >= 2 {
                    assert!(Ring::is_zero(h.get(i, j)));
                }
            }
        }
    }
}

#[test]
fn determinants() {
    for n in 1..=6 {
        assert_eq!(form_determinant(n).unwrap(), determinant_closed_form(n));
    }
    for n in 1..=3 {
        assert_eq!(form_matrix(n).determinant().unwrap(), determinant_closed_form(n));
    }
    assert!(form_determinant(0).is_err());
}

#[test]
fn invariance_examples() {
    assert!(verify_invariance(&pure_generator(1, 2, 3).unwrap()).unwrap());
    assert!(verify_invariance(&pure_generator(1, 3, 4).unwrap()).unwrap());
    assert!(verify_invariance(&full_twist(1, 4, 4).unwrap().pow(2)).unwrap());
    assert!(matches!(verify_invariance(&BraidWord::generator(3, 2).unwrap()), Err(Error::NonPureWord(_))));
}

#[test]
fn invariance_of_all_generators() {
    for m in 2..=6 {
        let h = cleared_form_matrix(m - 1);
        for (_, w) in pure_generators(m) {
            assert!(is_invariant(evaluate_word(&w, Basis::Reduced).unwrap().matrix(), &h).unwrap(), "{w}");
        }
    }
}

#[test]
fn invariance_of_random_pure_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..60 {
        let m = 2 + i % 4;
        let w = common::random_pure_word(m, 1 + i % 5, &mut rng);
        assert!(verify_invariance(&w).unwrap(), "{w}");
    }
}

#[test]
fn non_pure_letters_break_invariance() {
    let h = cleared_form_matrix(2);
    assert!(!is_invariant(evaluate_word(&BraidWord::generator(3, 1).unwrap(), Basis::Reduced).unwrap().matrix(), &h).unwrap());
}

#[test]
fn specialization_examples() {
    let f = CyclotomicField::new(3);
    let w = |e| CycloNum::omega_pow(&f, e);
    let one = CycloNum::one(&f);
    let h = specialize_form(1, 3, &[1, 1]).unwrap();
    let om1 = Ring::sub(&one, &w(1));
    let expected = Ring::mul(&Ring::sub(&one, &w(2)), &gassner_core::rings::Field::inv(&Ring::mul(&om1, &om1)).unwrap());
    assert_eq!(h.get(0, 0), &expected);
    assert!(specialize_form(2, 3, &[1, 1, 1]).unwrap().determinant().unwrap().is_zero());
    assert!(!specialize_form(2, 3, &[1, 1, 2]).unwrap().determinant().unwrap().is_zero());
    assert!(matches!(specialize_form(1, 4, &[2, 1]), Err(Error::NotCoprime { .. })));
}

#[test]
fn degeneracy_examples() {
    assert!(is_degenerate(2, 3, &[1, 1, 1]).unwrap());
    assert!(!is_degenerate(2, 3, &[1, 1, 2]).unwrap());
    assert!(!is_degenerate(3, 18, &[1, 1, 1, 1]).unwrap());
}

#[test]
fn signature_examples() {
    let s = signature(3, 18, &[1, 1, 1, 1], 7).unwrap();
    assert_eq!((s.p, s.q), (2, 1));
    assert!(s.eigenvalues.iter().all(|l| l.abs() > EIGENVALUE_TOLERANCE));

    let s = signature(1, 3, &[1, 1], 1).unwrap();
    assert_eq!((s.p, s.q), (1, 0));
    let t = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let one = Complex64::new(1.0, 0.0);
    let direct = Complex64::new(0.0, -1.0) * (one - t * t) / ((one - t) * (one - t));
    assert!(direct.im.abs() < 1e-12);
    assert!((s.eigenvalues[0] - direct.re).abs() < 1e-12);
    assert!((direct.re - 0.5773502691896258).abs() < 1e-12);
    assert!(matches!(signature(2, 3, &[1, 1, 1], 1), Err(Error::Degenerate(_))));
}

#[test]
fn conjugate_embeddings_swap_signs() {
    for (n, d, k) in [(3usize, 18u32, vec![1i64, 1, 1, 1]), (2, 5, vec![1, 2, 3]), (4, 7, vec![1, 2, 3, 4, 5])] {
        for s in signature_report(n, d, &k).unwrap() {
            assert_eq!(s.p + s.q, n);
            let t = signature(n, d, &k, d as i64 - s.f as i64).unwrap();
            assert_eq!((s.p, s.q), (t.q, t.p));
            assert!(s.rank_proxy() <= n / 2);
        }
    }
}

/// `h(t) w = 0` in the degenerate case, so `w` is orthogonal to every `ε_j` and isotropic.
#[test]
fn w_is_in_the_radical() {
    for (n, d, k) in [(2usize, 3u32, vec![1i64, 1, 1]), (3, 4, vec![1, 1, 1, 1]), (4, 5, vec![1, 2, 3, 2, 2]), (3, 6, vec![1, 1, 5, 5])] {
        let rep = specialize_rep(n, d, &k).unwrap();
        let h = specialize_form(n, d, &k).unwrap();
        let w = rep.w_vector();
        let hw = h.mul_vec(&w).unwrap();
        assert!(hw.iter().all(|c| c.is_zero()), "n={n} d={d}");
        let hww = w.iter().zip(&hw).fold(CycloNum::zero(rep.field()), |acc, (a, b)| Ring::add(&acc, &Ring::mul(&a.involute(), b)));
        assert!(hww.is_zero());
    }
}

#[test]
fn specialized_generators_are_unitary() {
    for (n, d, k) in [(2usize, 3u32, vec![1i64, 1, 2]), (3, 5, vec![1, 2, 3, 4]), (2, 3, vec![1, 1, 1])] {
        let rep = specialize_rep(n, d, &k).unwrap();
        let h = specialize_form(n, d, &k).unwrap();
        for (rs, m) in rep.generators() {
            let lhs = m.adjoint().checked_mul(&h).unwrap().checked_mul(m).unwrap();
            assert_eq!(lhs, h, "A{rs:?}");
        }
    }
}
