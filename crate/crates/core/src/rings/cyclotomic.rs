use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::laurent::LaurentPoly;
use super::rational::RationalFunction;
use super::{coprime, ExactDiv, Field, Involution, Ring};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|&f| coprime(f as i64, d as i64)).count() as u32
}

/// Coefficients (ascending degree) of the d-th cyclotomic polynomial, computed
/// as the quotient of `x^d - 1` by `Phi_e` for every proper divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    assert!(d >= 1, "cyclotomic order must be positive");
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = div_monic(&num, &cyclotomic_polynomial(e));
    }
    num
}

/// Exact quotient of integer polynomials by a monic divisor; panics on a nonzero remainder.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![BigInt::zero(); num.len() - dn];
    for k in (0..q.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    q
}

/// The cyclotomic field Q(w_d) with `w_d = e^{2 pi i / d}`, in the power basis
/// `1, w, ..., w^{phi(d)-1}` modulo the cyclotomic polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<BigInt>,
    /// `powers[j]` is the reduction of `w^j`, for `0 <= j < d`.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // Multiply by w and reduce using the monic modulus.
            let top = cur[phi - 1].clone();
            for t in (1..phi).rev() {
                cur[t] = cur[t - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for t in 0..phi {
                    cur[t] -= &top * &modulus[t];
                }
            }
        }
        Arc::new(CyclotomicField { order, modulus, powers })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of the field over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Integer coefficients of `w^j`, any integer `j`.
    pub fn power_coeffs(&self, j: i64) -> &[BigInt] {
        &self.powers[j.rem_euclid(self.order as i64) as usize]
    }

    /// Exponents `f` with `1 <= f <= d` and `gcd(f, d) = 1`; one per Galois automorphism.
    pub fn galois_exponents(&self) -> Vec<u32> {
        let d = self.order;
        (1..=d).filter(|&f| coprime(f as i64, d as i64)).collect()
    }
}

/// An element of Q(w_d).
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl CycloNum {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycloNum { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, c: impl Into<BigInt>) -> Self {
        Self::from_rational(field, BigRational::from_integer(c.into()))
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, c: BigRational) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = c;
        z
    }

    /// `w_d^j` for any integer `j`.
    pub fn omega_pow(field: &Arc<CyclotomicField>, j: i64) -> Self {
        CycloNum {
            field: field.clone(),
            coeffs: field.power_coeffs(j).iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    /// Builds an element from power-basis coefficients of any length, reducing modulo Phi_d.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: &[BigRational]) -> Self {
        let mut z = Self::zero(field);
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in field.power_coeffs(j as i64).iter().enumerate() {
                if !p.is_zero() {
                    z.coeffs[t] += c * BigRational::from_integer(p.clone());
                }
            }
        }
        z
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Power-basis coefficients, length `phi(d)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Integer power-basis coefficients, if all coefficients are integers.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::OrderMismatch { left: self.field.order, right: other.field.order });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let phi = self.coeffs.len();
        let mut acc = vec![BigRational::zero(); phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                for (t, p) in self.field.power_coeffs((i + j) as i64).iter().enumerate() {
                    if !p.is_zero() {
                        acc[t] += &prod * BigRational::from_integer(p.clone());
                    }
                }
            }
        }
        Ok(CycloNum { field: self.field.clone(), coeffs: acc })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CycloNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// The Galois conjugate `w -> w^j`, `gcd(j, d) = 1`.
    pub fn galois(&self, j: i64) -> Self {
        let mut out = Self::zero(&self.field);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in self.field.power_coeffs(i as i64 * j).iter().enumerate() {
                if !p.is_zero() {
                    out.coeffs[t] += c * BigRational::from_integer(p.clone());
                }
            }
        }
        out
    }

    /// Complex conjugation `w -> w^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Field norm to Q: the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let prod = self.galois_cofactor().checked_mul(self).expect("same field");
        prod.as_rational().expect("norm lies in Q").clone()
    }

    /// Product of the nontrivial Galois conjugates, so `self * cofactor = norm`.
    fn galois_cofactor(&self) -> Self {
        let mut acc = Self::one(&self.field);
        for f in self.field.galois_exponents() {
            if f != 1 {
                acc = acc.checked_mul(&self.galois(f as i64)).expect("same field");
            }
        }
        acc
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cof = self.galois_cofactor();
        let norm = cof.checked_mul(self)?;
        let n = norm.as_rational().ok_or_else(|| Error::Invariant("field norm not rational".into()))?;
        Ok(cof.scale(&n.recip()))
    }

    /// Evaluates the representative at `e^{2 pi i f / d}`.
    pub fn embed(&self, f: i64) -> Result<Complex64> {
        let d = self.field.order;
        if !coprime(f.rem_euclid(d as i64), d as i64) {
            return Err(Error::NotCoprime { value: f, modulus: d });
        }
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * PI * ((f * i as i64).rem_euclid(d as i64) as f64) / d as f64;
            z += Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN);
        }
        Ok(z)
    }
}

impl Involution for CycloNum {
    fn involute(&self) -> Self {
        self.conj()
    }
}

impl Ring for CycloNum {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("cyclotomic add")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_add(&Ring::neg(rhs)).expect("cyclotomic sub")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("cyclotomic mul")
    }
    fn neg(&self) -> Self {
        CycloNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Field for CycloNum {
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

impl ExactDiv for CycloNum {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(&rhs.checked_inv().ok()?).ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                Ring::$inner(self, rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        Ring::neg(self)
    }
}

impl fmt::Display for CycloNum {
    /// `c0 + c1*w + c2*w^2 (mod Phi_d)`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("w")?;
                    } else {
                        write!(f, "w^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (mod Phi_{})", self.field.order)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

fn check_weights(field: &CyclotomicField, nvars: usize, k: &[i64]) -> Result<()> {
    if k.len() != nvars {
        return Err(Error::VariableCountMismatch { left: nvars, right: k.len() });
    }
    let d = field.order();
    for &ki in k {
        if !coprime(ki.rem_euclid(d as i64), d as i64) {
            return Err(Error::NotCoprime { value: ki, modulus: d });
        }
    }
    Ok(())
}

impl LaurentPoly {
    /// Ring homomorphism `X_i -> w_d^{k_i}` into Q(w_d).
    pub fn specialize(&self, field: &Arc<CyclotomicField>, k: &[i64]) -> Result<CycloNum> {
        check_weights(field, self.nvars(), k)?;
        Ok(self.specialize_unchecked(field, k))
    }

    pub(crate) fn specialize_unchecked(&self, field: &Arc<CyclotomicField>, k: &[i64]) -> CycloNum {
        let mut out = CycloNum::zero(field);
        for (e, c) in self.terms() {
            let j: i64 = e.as_slice().iter().zip(k).map(|(&a, &b)| a as i64 * b).sum();
            let c = BigRational::from_integer(c.clone());
            for (t, p) in field.power_coeffs(j).iter().enumerate() {
                if !p.is_zero() {
                    out.coeffs[t] += &c * BigRational::from_integer(p.clone());
                }
            }
        }
        out
    }
}

impl RationalFunction {
    /// Ring homomorphism `X_i -> w_d^{k_i}`; fails if the denominator vanishes there.
    pub fn specialize(&self, field: &Arc<CyclotomicField>, k: &[i64]) -> Result<CycloNum> {
        let num = self.numerator().specialize(field, k)?;
        let den = self.denominator().specialize(field, k)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator { factor: self.denominator().to_string() });
        }
        num.checked_mul(&den.checked_inv()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for d in 1..40 {
            assert_eq!(cyclotomic_polynomial(d).len() as u32 - 1, euler_phi(d));
        }
    }

    #[test]
    fn generator_specializations() {
        let f3 = CyclotomicField::new(3);
        let x1 = LaurentPoly::var(2, 0);
        assert_eq!(x1.specialize(&f3, &[1, 1]).unwrap(), CycloNum::omega_pow(&f3, 1));
        let p = &(&LaurentPoly::one(2) + &x1) + &(&x1 * &x1);
        assert!(p.specialize(&f3, &[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn inverse_of_one_minus_omega() {
        let f3 = CyclotomicField::new(3);
        let one = LaurentPoly::one(2);
        let r = RationalFunction::new(one.clone(), &one - &LaurentPoly::var(2, 0)).unwrap();
        let v = r.specialize(&f3, &[1, 1]).unwrap();
        let expected = CycloNum::from_coeffs(&f3, &[q(2, 3), q(1, 3)]);
        assert_eq!(v, expected);
        let direct = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, 2.0 * PI / 3.0));
        assert!((v.embed(1).unwrap() - direct).norm() < 1e-12);
        assert_eq!(v.to_string(), "2/3 + 1/3*w (mod Phi_3)");
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        let f3 = CyclotomicField::new(3);
        let one = LaurentPoly::one(2);
        let den = &(&one + &LaurentPoly::var(2, 0)) + &LaurentPoly::var(2, 0).pow(2);
        let r = RationalFunction::new(one, den).unwrap();
        assert!(matches!(r.specialize(&f3, &[1, 1]), Err(Error::ZeroDenominator { .. })));
    }

    #[test]
    fn non_coprime_weight_rejected() {
        let f6 = CyclotomicField::new(6);
        assert_eq!(
            LaurentPoly::var(2, 0).specialize(&f6, &[1, 2]).unwrap_err(),
            Error::NotCoprime { value: 2, modulus: 6 }
        );
        let w = CycloNum::omega_pow(&f6, 1);
        assert!(w.embed(3).is_err());
    }

    #[test]
    fn embeddings() {
        let f3 = CyclotomicField::new(3);
        let w = CycloNum::omega_pow(&f3, 1);
        let z = w.embed(1).unwrap();
        assert!((z - Complex64::new(-0.5, 0.8660254037844386)).norm() < 1e-12);
        let s = &w + &CycloNum::omega_pow(&f3, 2);
        assert!((s.embed(1).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let f18 = CyclotomicField::new(18);
        let w7 = CycloNum::omega_pow(&f18, 7);
        let w1 = CycloNum::omega_pow(&f18, 1);
        assert!((w7.embed(1).unwrap() - w1.embed(7).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn conjugation_and_norm() {
        let f5 = CyclotomicField::new(5);
        let w = CycloNum::omega_pow(&f5, 1);
        assert!(Ring::mul(&w, &w.conj()).is_one());
        let a = &CycloNum::one(&f5) - &w;
        // N(1 - w_p) = p for prime p.
        assert_eq!(a.norm(), q(5, 1));
        assert!(Ring::mul(&a, &a.checked_inv().unwrap()).is_one());
    }

    #[test]
    fn display_forms() {
        let f4 = CyclotomicField::new(4);
        assert_eq!(CycloNum::zero(&f4).to_string(), "0 (mod Phi_4)");
        let v = &CycloNum::one(&f4) - &CycloNum::omega_pow(&f4, 1);
        assert_eq!(v.to_string(), "1 - w (mod Phi_4)");
        // w^2 = -1 in Q(i)
        assert_eq!(CycloNum::omega_pow(&f4, 2).to_string(), "-1 (mod Phi_4)");
    }
}
