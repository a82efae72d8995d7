use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::{ExactDiv, Involution, Ring};
use crate::error::{Error, Result};

/// Exponents of a Laurent monomial `X1^a1 * ... * Xm^am`, one slot per variable.
///
/// Ordered lexicographically, which is the monomial order used everywhere in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[i32; 8]>);

impl ExponentVector {
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, nvars))
    }

    /// The exponent vector of the single variable `X_{index+1}`.
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.0[index] = 1;
        e
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(exps))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, index: usize) -> i32 {
        self.0[index]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn componentwise_min(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Moves the exponent of variable `j` to slot `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.len());
        for (j, &e) in self.0.iter().enumerate() {
            out.0[perm[j]] = e;
        }
        out
    }

    fn with(&self, index: usize, value: i32) -> Self {
        let mut e = self.clone();
        e.0[index] = value;
        e
    }
}

impl fmt::Display for ExponentVector {
    /// Monomial text form `X1^a*X2^b`, omitting zero exponents and `^1`; the empty monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{}", i + 1)?;
            } else {
                write!(f, "X{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A Laurent polynomial in `nvars` variables with integer coefficients.
///
/// Terms are kept sorted by ascending lexicographic exponent with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: Vec<(ExponentVector, BigInt)>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// The variable `X_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        Self::monomial(ExponentVector::unit(nvars, index), 1)
    }

    pub fn monomial(exps: ExponentVector, coeff: impl Into<BigInt>) -> Self {
        let nvars = exps.len();
        let c = coeff.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPoly { nvars, terms: vec![(exps, c)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut v: Vec<(ExponentVector, BigInt)> = terms.into_iter().collect();
        for (e, _) in &v {
            assert_eq!(e.len(), nvars, "exponent vector length differs from variable count");
        }
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(ExponentVector, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        LaurentPoly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> &[(ExponentVector, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// `(exponents, coefficient)` if the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &BigInt)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((e, c)),
            _ => None,
        }
    }

    /// True for `+-X^a`, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(_, c)| c.abs().is_one())
    }

    /// Lex-greatest term.
    pub fn leading_term(&self) -> Option<&(ExponentVector, BigInt)> {
        self.terms.last()
    }

    /// Lex-smallest term.
    pub fn trailing_term(&self) -> Option<&(ExponentVector, BigInt)> {
        self.terms.first()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { nvars: self.nvars, terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if let Some((e, c)) = other.as_monomial() {
            return self.mul_term(e, c);
        }
        if let Some((e, c)) = self.as_monomial() {
            return other.mul_term(e, c);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((ea.add(eb), ca * cb));
            }
        }
        Self::from_terms(self.nvars, raw)
    }

    /// Multiplication by a single term preserves the order of terms.
    fn mul_term(&self, exps: &ExponentVector, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.add(exps), c * coeff)).collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &ExponentVector) -> Self {
        self.mul_term(exps, &BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(&ExponentVector::zero(self.nvars), c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.product(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Renames variables: `X_j -> X_{perm[j]}` (zero-based).
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.permute(perm), c.clone())))
    }

    /// Substitutes `X_i -> q^{weights[i]}`, producing a polynomial in one variable `q`.
    pub fn substitute_univariate(&self, weights: &[i32]) -> Self {
        assert_eq!(weights.len(), self.nvars);
        Self::from_terms(
            1,
            self.terms.iter().map(|(e, c)| {
                let d: i32 = e.as_slice().iter().zip(weights).map(|(a, w)| a * w).sum();
                (ExponentVector::from_slice(&[d]), c.clone())
            }),
        )
    }

    /// Componentwise minimum of the exponents of all terms; zero vector for the zero polynomial.
    pub fn min_exponents(&self) -> ExponentVector {
        let mut it = self.terms.iter();
        match it.next() {
            None => ExponentVector::zero(self.nvars),
            Some((first, _)) => it.fold(first.clone(), |acc, (e, _)| acc.componentwise_min(e)),
        }
    }

    /// Componentwise maximum exponent over all terms (zero vector for the zero polynomial).
    pub fn max_exponents(&self) -> ExponentVector {
        self.involute().min_exponents().neg()
    }

    /// Largest exponent of the variable `var`; `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.iter().map(|(e, _)| e.get(var)).max()
    }

    /// Coefficient of `X_var^k`, as a polynomial with the `var` slot cleared.
    pub fn coefficient_in(&self, var: usize, k: i32) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.get(var) == k)
                .map(|(e, c)| (e.with(var, 0), c.clone()))
                .collect(),
        }
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact quotient in the Laurent ring, or `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.nvars, other.nvars);
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some((e, c)) = other.as_monomial() {
            if self.terms.iter().all(|(_, a)| a.is_multiple_of(c)) {
                return Some(LaurentPoly {
                    nvars: self.nvars,
                    terms: self.terms.iter().map(|(ea, a)| (ea.sub(e), a / c)).collect(),
                });
            }
            return None;
        }
        let (lead_e, lead_c) = other.leading_term().unwrap();
        // Exponents of an exact quotient lie in the box [min(a)-min(b), max(a)-max(b)].
        let lo = self.min_exponents().sub(&other.min_exponents());
        let hi = self.max_exponents().sub(&other.max_exponents());
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((re, rc)) = rem.leading_term() {
            let te = re.sub(lead_e);
            let in_box = (0..self.nvars).all(|v| lo.get(v) <= te.get(v) && te.get(v) <= hi.get(v));
            if !in_box || !rc.is_multiple_of(lead_c) {
                return None;
            }
            let tc = rc / lead_c;
            rem = rem.merge(&other.mul_term(&te, &tc), true);
            quotient.push((te, tc));
        }
        quotient.reverse();
        Some(LaurentPoly { nvars: self.nvars, terms: quotient })
    }

    /// True if the polynomial is fixed by `X_i -> X_i^{-1}`.
    pub fn is_self_involute(&self) -> bool {
        self.involute() == *self
    }
}

impl Involution for LaurentPoly {
    fn involute(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (e.neg(), c.clone())).collect();
        terms.reverse();
        LaurentPoly { nvars: self.nvars, terms }
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("Laurent add")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("Laurent sub")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("Laurent mul")
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn is_one(&self) -> bool {
        LaurentPoly::is_one(self)
    }
}

impl ExactDiv for LaurentPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, rhs)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                Ring::$inner(self, rhs)
            }
        }
        impl std::ops::$tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                Ring::$inner(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Ring::neg(self)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Ring::neg(&self)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text: terms in descending lexicographic order, e.g. `-X1*X2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{mag}*{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    fn one(n: usize) -> LaurentPoly {
        LaurentPoly::one(n)
    }

    #[test]
    fn unit_cancellation() {
        let x1 = x(2, 0);
        let inv = x1.involute();
        assert!((&x1 * &inv).is_one());
    }

    #[test]
    fn difference_of_squares() {
        let x1 = x(1, 0);
        let lhs = &(&one(1) - &x1) * &(&one(1) + &x1);
        assert_eq!(lhs, &one(1) - &(&x1 * &x1));
        assert_eq!(lhs.to_string(), "-X1^2 + 1");
    }

    #[test]
    fn determinant_numerator_identity() {
        // (1-X1X2)(1-X2X3) - X2(1-X1)(1-X3) = (1-X2)(1-X1X2X3), expanded by hand:
        // both sides equal 1 - X2 - X1X2X3 + X1X2^2X3.
        let n = 3;
        let (x1, x2, x3) = (x(n, 0), x(n, 1), x(n, 2));
        let lhs = &(&(&one(n) - &(&x1 * &x2)) * &(&one(n) - &(&x2 * &x3)))
            - &(&x2 * &(&(&one(n) - &x1) * &(&one(n) - &x3)));
        let rhs = &(&one(n) - &x2) * &(&one(n) - &(&(&x1 * &x2) * &x3));
        let expanded = LaurentPoly::from_terms(
            n,
            vec![
                (ExponentVector::from_slice(&[0, 0, 0]), BigInt::from(1)),
                (ExponentVector::from_slice(&[0, 1, 0]), BigInt::from(-1)),
                (ExponentVector::from_slice(&[1, 1, 1]), BigInt::from(-1)),
                (ExponentVector::from_slice(&[1, 2, 1]), BigInt::from(1)),
            ],
        );
        assert_eq!(lhs, expanded);
        assert_eq!(rhs, expanded);
    }

    #[test]
    fn involution_examples() {
        assert_eq!(x(2, 0).involute().to_string(), "X1^-1");
        let p = &one(2) - &x(2, 1);
        assert_eq!(p.involute(), &one(2) - &x(2, 1).involute());
        assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn mismatched_variable_counts_error() {
        let err = x(2, 0).checked_add(&x(3, 0)).unwrap_err();
        assert_eq!(err, Error::VariableCountMismatch { left: 2, right: 3 });
        assert!(x(2, 0).checked_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let a = &one(n) - &x(n, 0);
        let b = &(&one(n) + &x(n, 1)) * &x(n, 0).involute();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!((&one(n) + &one(n)).div_exact(&LaurentPoly::constant(n, 3)), None);
    }

    #[test]
    fn display_is_canonical() {
        let n = 2;
        let p = &(&x(n, 0).involute() * &LaurentPoly::constant(n, 3)) - &(&x(n, 0) * &x(n, 1));
        assert_eq!(p.to_string(), "-X1*X2 + 3*X1^-1");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn self_involute_membership() {
        let n = 1;
        let s = &x(n, 0) + &x(n, 0).involute();
        assert!(s.is_self_involute());
        assert!(!x(n, 0).is_self_involute());
    }
}
