//! Multivariate polynomial gcd over the integers.
//!
//! Recursive content/primitive-part scheme: pick a main variable, split off
//! the content (gcd of coefficients, computed recursively in the remaining
//! variables) and run a subresultant pseudo-remainder sequence on the
//! primitive parts. Laurent inputs are first shifted to ordinary polynomials; the
//! result is defined up to a unit, and is normalized to an ordinary
//! polynomial with positive leading coefficient.

use num_integer::Integer;
use num_traits::Signed;

use super::laurent::{ExponentVector, LaurentPoly};

/// Gcd of two Laurent polynomials, normalized: no variable divides it and its
/// lex-leading coefficient is positive. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert_eq!(a.nvars(), b.nvars());
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    gcd_ordinary(&a, &b)
}

/// Divides out the largest monomial factor, leaving an ordinary polynomial.
pub(crate) fn strip_monomial(a: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return a.clone();
    }
    a.mul_monomial(&a.min_exponents().neg())
}

/// Makes the lex-leading coefficient positive.
pub(crate) fn normalize_sign(a: LaurentPoly) -> LaurentPoly {
    match a.leading_term() {
        Some((_, c)) if c.is_negative() => -a,
        _ => a,
    }
}

/// The variable of smallest positive degree, which keeps remainder sequences short.
fn main_variable(a: &LaurentPoly, b: &LaurentPoly) -> Option<usize> {
    (0..a.nvars())
        .filter_map(|v| {
            let d = a.degree_in(v).unwrap_or(0).max(b.degree_in(v).unwrap_or(0));
            (d > 0).then_some((d, v))
        })
        .min()
        .map(|(_, v)| v)
}

fn gcd_ordinary(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let Some(v) = main_variable(a, b) else {
        let g = a.as_constant().unwrap().gcd(&b.as_constant().unwrap());
        return LaurentPoly::constant(a.nvars(), g);
    };
    let da = a.degree_in(v).unwrap();
    let db = b.degree_in(v).unwrap();
    if da == 0 {
        return gcd_ordinary(a, &content_in(b, v));
    }
    if db == 0 {
        return gcd_ordinary(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_ordinary(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut r0, mut r1) = if da >= db { (pa, pb) } else { (pb, pa) };
    let one = LaurentPoly::one(a.nvars());
    let (mut g, mut h) = (one.clone(), one.clone());
    let last = loop {
        let delta = (r0.degree_in(v).unwrap() - r1.degree_in(v).unwrap()) as u32;
        let r = pseudo_remainder(&r0, &r1, v);
        if r.is_zero() {
            break r1;
        }
        if r.degree_in(v).unwrap() == 0 {
            break one;
        }
        let divisor = &g * &h.pow(delta);
        r0 = r1;
        r1 = r.div_exact(&divisor).expect("subresultant divisor divides");
        g = leading_coefficient(&r0, v);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant scale divides"),
        };
    };
    normalize_sign(&c * &primitive_part(&last, v))
}

fn leading_coefficient(a: &LaurentPoly, v: usize) -> LaurentPoly {
    a.coefficient_in(v, a.degree_in(v).unwrap())
}

/// Gcd of the coefficients of `a` viewed as a polynomial in `v`.
fn content_in(a: &LaurentPoly, v: usize) -> LaurentPoly {
    let deg = a.degree_in(v).unwrap_or(0);
    let mut g = LaurentPoly::zero(a.nvars());
    for k in (0..=deg).rev() {
        let coeff = a.coefficient_in(v, k);
        if coeff.is_zero() {
            continue;
        }
        g = gcd_ordinary(&g, &coeff);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(a: &LaurentPoly, v: usize) -> LaurentPoly {
    if a.is_zero() {
        return a.clone();
    }
    let c = content_in(a, v);
    let p = a.div_exact(&c).expect("content divides");
    normalize_sign(p)
}

/// `lc(b)^(deg a - deg b + 1) · a mod b` in the variable `v`.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let nvars = a.nvars();
    let db = b.degree_in(v).unwrap();
    let lb = leading_coefficient(b, v);
    let mut r = a.clone();
    let mut steps = a.degree_in(v).unwrap() - db + 1;
    while let Some(dr) = r.degree_in(v) {
        if dr < db {
            break;
        }
        let lr = r.coefficient_in(v, dr);
        let mut shift = vec![0; nvars];
        shift[v] = dr - db;
        let shifted = b.mul_monomial(&ExponentVector::from_slice(&shift));
        r = &(&lb * &r) - &(&lr * &shifted);
        steps -= 1;
    }
    &lb.pow(steps as u32) * &r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Involution;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    #[test]
    fn gcd_of_products() {
        let n = 3;
        let one = LaurentPoly::one(n);
        let f = &one - &(&x(n, 0) * &x(n, 1));
        let g = &one - &x(n, 2);
        let h = &(&x(n, 0) + &x(n, 2)) + &one;
        let a = &(&f * &g) * &LaurentPoly::constant(n, 6);
        let b = &(&f * &h) * &LaurentPoly::constant(n, 4);
        let expected = normalize_sign(&f * &LaurentPoly::constant(n, 2));
        assert_eq!(poly_gcd(&a, &b), expected);
    }

    #[test]
    fn gcd_ignores_monomial_factors() {
        let n = 2;
        let one = LaurentPoly::one(n);
        let f = &one - &x(n, 0);
        let a = &f * &x(n, 1).involute();
        let b = &f * &x(n, 0);
        assert_eq!(poly_gcd(&a, &b), normalize_sign(f));
    }

    #[test]
    fn coprime_gives_one() {
        let n = 2;
        let one = LaurentPoly::one(n);
        let a = &one - &x(n, 0);
        let b = &one - &x(n, 1);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_zero() {
        let n = 1;
        let a = &LaurentPoly::constant(n, -3) * &x(n, 0);
        assert_eq!(poly_gcd(&a, &LaurentPoly::zero(n)), LaurentPoly::constant(n, 3));
    }
}
