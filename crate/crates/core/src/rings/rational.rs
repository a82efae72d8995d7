use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::gcd::{normalize_sign, poly_gcd, strip_monomial};
use super::laurent::LaurentPoly;
use super::{ExactDiv, Field, Involution, Ring};
use crate::error::{Error, Result};

/// An element of the fraction field of the Laurent ring.
///
/// Normal form: numerator and denominator share no non-unit factor, the
/// denominator is an ordinary polynomial divisible by no variable, and its
/// lex-leading coefficient is positive. Monomial units are carried by the
/// numerator. Two equal functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::VariableCountMismatch { left: num.nvars(), right: den.nvars() });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let nvars = p.nvars();
        RationalFunction { num: p, den: LaurentPoly::one(nvars) }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(nvars, c))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_poly(LaurentPoly::var(nvars, index))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let nvars = num.nvars();
        if num.is_zero() {
            return Self::zero(nvars);
        }
        if let Some((e, c)) = den.as_monomial() {
            if c.abs().is_one() {
                let unit_inv = LaurentPoly::monomial(e.neg(), c.clone());
                return Self::from_poly(&num * &unit_inv);
            }
        }
        let num_shift = num.min_exponents();
        let den_shift = den.min_exponents();
        let n = strip_monomial(&num);
        let d = strip_monomial(&den);
        let g = poly_gcd(&n, &d);
        let (mut n, mut d) = if g.is_one() {
            (n, d)
        } else {
            (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
        };
        if d.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            n = -n;
            d = -d;
        }
        debug_assert_eq!(normalize_sign(d.clone()), d);
        let n = n.mul_monomial(&num_shift.sub(&den_shift));
        RationalFunction { num: n, den: d }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    /// The Laurent polynomial if the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        if self.den == rhs.den {
            return Ok(Self::normalized(&self.num + &rhs.num, self.den.clone()));
        }
        Ok(Self::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        ))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        if self.is_poly() && rhs.is_poly() {
            return Ok(Self::from_poly(&self.num * &rhs.num));
        }
        Ok(Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    fn check_vars(&self, rhs: &Self) -> Result<()> {
        if self.nvars() != rhs.nvars() {
            return Err(Error::VariableCountMismatch { left: self.nvars(), right: rhs.nvars() });
        }
        Ok(())
    }

    /// Renames variables `X_j -> X_{perm[j]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        Self::normalized(self.num.permute_variables(perm), self.den.permute_variables(perm))
    }

    /// Substitutes `X_i -> q^{weights[i]}`; fails if the denominator vanishes.
    pub fn substitute_univariate(&self, weights: &[i32]) -> Result<Self> {
        let den = self.den.substitute_univariate(weights);
        if den.is_zero() {
            return Err(Error::ZeroDenominator { factor: self.den.to_string() });
        }
        Ok(Self::normalized(self.num.substitute_univariate(weights), den))
    }

    /// True if fixed by the involution (membership in the invariant subring).
    pub fn is_self_involute(&self) -> bool {
        self.involute() == *self
    }
}

impl Involution for RationalFunction {
    fn involute(&self) -> Self {
        Self::normalized(self.num.involute(), self.den.involute())
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("rational add")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_add(&Ring::neg(rhs)).expect("rational sub")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("rational mul")
    }
    fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl ExactDiv for RationalFunction {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                Ring::$inner(self, rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("rational div")
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        Ring::neg(self)
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    /// `num` when the denominator is 1, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{}]({})", self.nvars(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    fn rf(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn reduces_common_factors() {
        let n = 2;
        let one = LaurentPoly::one(n);
        let a = &one - &x(n, 0);
        let b = &one + &x(n, 1);
        let r = rf(&a * &b, &(&a * &a) * &LaurentPoly::constant(n, -2));
        assert_eq!(r, rf(b.clone(), &a * &LaurentPoly::constant(n, -2)));
        // Denominator normal form: positive leading coefficient.
        assert!(r.denominator().leading_term().unwrap().1 > BigInt::from(0));
    }

    #[test]
    fn involution_of_diagonal_entry_negates_it() {
        let n = 2;
        let one = LaurentPoly::one(n);
        let num = &one - &(&x(n, 0) * &x(n, 1));
        let den = &(&one - &x(n, 0)) * &(&one - &x(n, 1));
        let h = rf(num, den);
        assert_eq!(h.involute(), Ring::neg(&h));
        assert_eq!(h.involute().involute(), h);
    }

    #[test]
    fn monomial_denominators_fold_into_numerator() {
        let n = 2;
        let r = rf(LaurentPoly::one(n), x(n, 1));
        assert!(r.is_poly());
        assert_eq!(r.as_poly().unwrap(), &x(n, 1).involute());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(LaurentPoly::one(1), LaurentPoly::zero(1)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn field_inverse() {
        let n = 2;
        let one = LaurentPoly::one(n);
        let r = rf(&one + &x(n, 0), &one - &x(n, 1));
        assert!(Ring::mul(&r, &r.inv().unwrap()).is_one());
    }
}
