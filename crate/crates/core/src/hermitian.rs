//! The invariant skew-hermitian form on the reduced Gassner module.
//!
//! In the basis `ε_1, ..., ε_n` the Gram matrix is tridiagonal with
//!
//! ```text
//! h[i][i]   = (1 - X_i X_{i+1}) / ((1 - X_i)(1 - X_{i+1}))
//! h[i][i+1] = -1 / (1 - X_{i+1})
//! h[i+1][i] = -X_{i+1} / (1 - X_{i+1})
//! ```
//!
//! and `h(a, b) = b^H h a`. Invariance of a matrix `M` means `M^H h M = h`,
//! where `M^H` is the transpose followed by the involution.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::gassner::{evaluate_word, Basis};
use crate::matrix::Matrix;
use crate::rings::{coprime, CycloNum, CyclotomicField, LaurentPoly, RationalFunction, Ring};

/// Eigenvalues closer to zero than this are rejected rather than signed.
pub const EIGENVALUE_TOLERANCE: f64 = 1e-6;

fn one_minus(m: usize, p: LaurentPoly) -> LaurentPoly {
    &LaurentPoly::one(m) - &p
}

fn rf(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// The symbolic `n x n` form matrix in `n + 1` variables.
pub fn form_matrix(n: usize) -> Matrix<RationalFunction> {
    let m = n + 1;
    let x = |i: usize| LaurentPoly::var(m, i);
    let proto = RationalFunction::zero(m);
    Matrix::from_fn(n, n, &proto, |i, j| {
        if i == j {
            rf(one_minus(m, &x(i) * &x(i + 1)), &one_minus(m, x(i)) * &one_minus(m, x(i + 1)))
        } else if j == i + 1 {
            rf(LaurentPoly::constant(m, -1), one_minus(m, x(j)))
        } else if i == j + 1 {
            rf(-&x(i), one_minus(m, x(i)))
        } else {
            proto.clone()
        }
    })
}

/// `Π (1 - X_i) · h`, which has Laurent polynomial entries.
pub fn cleared_form_matrix(n: usize) -> Matrix<LaurentPoly> {
    let m = n + 1;
    let d = (0..m).fold(LaurentPoly::one(m), |acc, i| &acc * &one_minus(m, LaurentPoly::var(m, i)));
    let dr = RationalFunction::from_poly(d);
    form_matrix(n).map(&LaurentPoly::zero(m), |a| {
        Ring::mul(a, &dr).as_poly().cloned().expect("denominators divide the product")
    })
}

/// `M^H h M == h` for a reduced matrix with Laurent entries.
pub fn is_invariant(m: &Matrix<LaurentPoly>, cleared_form: &Matrix<LaurentPoly>) -> Result<bool> {
    let lhs = m.adjoint().checked_mul(cleared_form)?.checked_mul(m)?;
    Ok(&lhs == cleared_form)
}

/// Checks that the reduced image of a pure braid preserves the form exactly.
pub fn verify_invariance(w: &BraidWord) -> Result<bool> {
    w.require_pure()?;
    let n = w.strands() - 1;
    let m = evaluate_word(w, Basis::Reduced)?;
    is_invariant(m.matrix(), &cleared_form_matrix(n))
}

/// `(1 - X_1 ... X_{n+1}) / Π (1 - X_i)`.
pub fn determinant_closed_form(n: usize) -> RationalFunction {
    let m = n + 1;
    let all = (0..m).fold(LaurentPoly::one(m), |acc, i| &acc * &LaurentPoly::var(m, i));
    let den = (0..m).fold(LaurentPoly::one(m), |acc, i| &acc * &one_minus(m, LaurentPoly::var(m, i)));
    rf(one_minus(m, all), den)
}

/// Determinant of the form by the tridiagonal recurrence
/// `D_k = h_kk D_{k-1} - h_{k,k-1} h_{k-1,k} D_{k-2}`, checked against the closed form.
pub fn form_determinant(n: usize) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::Invalid("form needs n >= 1".into()));
    }
    let h = form_matrix(n);
    let mut prev2 = RationalFunction::one(n + 1);
    let mut prev = h.get(0, 0).clone();
    for k in 1..n {
        let next = Ring::sub(
            &Ring::mul(h.get(k, k), &prev),
            &Ring::mul(&Ring::mul(h.get(k, k - 1), h.get(k - 1, k)), &prev2),
        );
        prev2 = prev;
        prev = next;
    }
    let closed = determinant_closed_form(n);
    if prev != closed {
        return Err(Error::Invariant(format!("form determinant {prev} differs from {closed}")));
    }
    Ok(prev)
}

fn check_spec(n: usize, d: u32, k: &[i64]) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!("order d = {d} must be at least 2")));
    }
    if k.len() != n + 1 {
        return Err(Error::Precondition(format!("expected {} weights, got {}", n + 1, k.len())));
    }
    for &ki in k {
        if !coprime(ki.rem_euclid(d as i64), d as i64) {
            return Err(Error::NotCoprime { value: ki, modulus: d });
        }
    }
    Ok(())
}

/// `h` at `X_i = w_d^{k_i}`.
pub fn specialize_form(n: usize, d: u32, k: &[i64]) -> Result<Matrix<CycloNum>> {
    check_spec(n, d, k)?;
    let field = CyclotomicField::new(d);
    specialize_form_in(n, &field, k)
}

pub fn specialize_form_in(n: usize, field: &Arc<CyclotomicField>, k: &[i64]) -> Result<Matrix<CycloNum>> {
    form_matrix(n).try_map(&CycloNum::zero(field), |a| a.specialize(field, k))
}

/// `t_1 ... t_{n+1} = 1`, i.e. `d` divides the weight sum.
pub fn is_degenerate(n: usize, d: u32, k: &[i64]) -> Result<bool> {
    check_spec(n, d, k)?;
    Ok(k.iter().sum::<i64>().rem_euclid(d as i64) == 0)
}

/// Eigenvalue sign counts of `-i · h(t)` at the embedding `w -> e^{2 pi i f / d}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Signature {
    pub f: u32,
    pub p: usize,
    pub q: usize,
    pub eigenvalues: Vec<f64>,
}

impl Signature {
    /// `min(p, q)`, a proxy for the real rank of the unitary group at this place.
    pub fn rank_proxy(&self) -> usize {
        self.p.min(self.q)
    }
}

/// Hermitian matrix `-i · h` embedded at `f`.
pub fn hermitianized(form: &Matrix<CycloNum>, f: i64) -> Result<DMatrix<Complex64>> {
    let n = form.rows();
    let mut out = DMatrix::<Complex64>::zeros(n, n);
    let minus_i = Complex64::new(0.0, -1.0);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = minus_i * form.get(i, j).embed(f)?;
        }
    }
    Ok(out)
}

pub fn signature(n: usize, d: u32, k: &[i64], f: i64) -> Result<Signature> {
    check_spec(n, d, k)?;
    if !coprime(f.rem_euclid(d as i64), d as i64) {
        return Err(Error::NotCoprime { value: f, modulus: d });
    }
    if is_degenerate(n, d, k)? {
        return Err(Error::Degenerate(format!("sum of weights {} is divisible by {d}", k.iter().sum::<i64>())));
    }
    let form = specialize_form(n, d, k)?;
    signature_of_form(&form, f)
}

pub fn signature_of_form(form: &Matrix<CycloNum>, f: i64) -> Result<Signature> {
    let h = hermitianized(form, f)?;
    let eig = nalgebra::SymmetricEigen::new(h);
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|a, b| a.total_cmp(b));
    if let Some(&small) = eigenvalues.iter().min_by(|a, b| a.abs().total_cmp(&b.abs())) {
        if small.abs() <= EIGENVALUE_TOLERANCE {
            return Err(Error::EigenvalueTolerance { value: small, tolerance: EIGENVALUE_TOLERANCE });
        }
    }
    let p = eigenvalues.iter().filter(|&&l| l > 0.0).count();
    let q = eigenvalues.len() - p;
    Ok(Signature { f: f.rem_euclid(form.proto().order() as i64) as u32, p, q, eigenvalues })
}

/// Signatures at every embedding `1 <= f < d` with `gcd(f, d) = 1`.
pub fn signature_report(n: usize, d: u32, k: &[i64]) -> Result<Vec<Signature>> {
    check_spec(n, d, k)?;
    if is_degenerate(n, d, k)? {
        return Err(Error::Degenerate(format!("sum of weights {} is divisible by {d}", k.iter().sum::<i64>())));
    }
    let form = specialize_form(n, d, k)?;
    (1..d as i64).filter(|&f| coprime(f, d as i64)).map(|f| signature_of_form(&form, f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Involution;

    #[test]
    fn form_entries() {
        let h = form_matrix(2);
        let m = 3;
        let x2 = LaurentPoly::var(m, 1);
        assert_eq!(h.get(0, 1), &rf(LaurentPoly::constant(m, -1), one_minus(m, x2.clone())));
        assert_eq!(h.get(1, 0), &rf(-&x2, one_minus(m, x2)));
        assert!(Ring::is_zero(form_matrix(3).get(0, 2)));
    }

    #[test]
    fn skew_hermitian() {
        for n in 1..5 {
            let h = form_matrix(n);
            assert_eq!(h.adjoint(), h.neg());
        }
    }

    #[test]
    fn determinants() {
        for n in 1..5 {
            let det = form_determinant(n).unwrap();
            assert_eq!(form_matrix(n).determinant().unwrap(), det);
        }
    }

    #[test]
    fn invariance_of_small_generators() {
        let a12 = crate::braid::pure_generator(1, 2, 3).unwrap();
        assert!(verify_invariance(&a12).unwrap());
        let s1 = BraidWord::generator(3, 1).unwrap();
        assert!(matches!(verify_invariance(&s1), Err(Error::NonPureWord(_))));
    }

    #[test]
    fn small_signature() {
        let s = signature(1, 3, &[1, 1], 1).unwrap();
        assert_eq!((s.p, s.q), (1, 0));
        assert!((s.eigenvalues[0] - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        let form = specialize_form(1, 3, &[1, 1]).unwrap();
        assert_eq!(form.get(0, 0).involute(), Ring::neg(form.get(0, 0)));
    }

    #[test]
    fn degenerate_forms() {
        assert!(is_degenerate(2, 3, &[1, 1, 1]).unwrap());
        assert!(!is_degenerate(2, 3, &[1, 1, 2]).unwrap());
        assert!(specialize_form(2, 3, &[1, 1, 1]).unwrap().determinant().unwrap().is_zero());
        assert!(!specialize_form(2, 3, &[1, 1, 2]).unwrap().determinant().unwrap().is_zero());
        assert!(matches!(signature(2, 3, &[1, 1, 1], 1), Err(Error::Degenerate(_))));
    }
}
