//! Exact coefficient rings.
//!
//! - [`LaurentPoly`]: multivariate Laurent polynomials over arbitrary-precision integers.
//! - [`RationalFunction`]: reduced quotients of Laurent polynomials.
//! - [`CycloNum`]: elements of the cyclotomic field Q(w_d) in the power basis modulo Phi_d.
//!
//! Every value is immutable once built. The involution `X_i -> X_i^{-1}` (complex
//! conjugation on cyclotomic numbers) is exposed through [`Involution`].

mod cyclotomic;
mod gcd;
mod laurent;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycloNum, CyclotomicField};
pub use gcd::poly_gcd;
pub use laurent::{ExponentVector, LaurentPoly};
pub use rational::RationalFunction;

use std::fmt::Debug;

/// Commutative ring operations used by the generic matrix code.
///
/// Elements carry their own context (variable count, cyclotomic order), so the
/// additive and multiplicative identities are produced from an existing element.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// Rings in which exact quotients can be computed when they exist.
pub trait ExactDiv: Ring {
    /// Returns `q` with `q * rhs == self`, or `None` if no such `q` exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

/// A ring automorphism of order two.
pub trait Involution {
    fn involute(&self) -> Self;

    /// Membership in the subring fixed by the involution.
    fn is_self_conjugate(&self) -> bool
    where
        Self: PartialEq + Sized,
    {
        self.involute() == *self
    }
}

/// `gcd(a, b) == 1` for non-negative integers.
pub fn coprime(a: i64, b: i64) -> bool {
    num_integer::gcd(a, b) == 1
}
