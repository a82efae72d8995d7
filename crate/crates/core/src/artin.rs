//! Artin's action of the braid group on the free group, and the evaluation
//! of free words in the semidirect product `R^{n+1} ⋊ H`, where `H` is the
//! free abelian group on `X_1, ..., X_{n+1}`.
//!
//! This module is an independent oracle: unreduced Gassner matrices are read
//! off from first principles here and compared against the closed-form
//! generator matrices of [`crate::gassner`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{permutation_image, BraidWord};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{ExponentVector, LaurentPoly};

/// A freely reduced word in `x_1, ..., x_m`; letter `±i` is `x_i^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// `x_i` (one-based).
    pub fn generator(i: usize) -> Self {
        FreeWord(vec![i as i32])
    }

    /// Reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            assert!(l != 0, "free word letters are nonzero");
            w.push(l);
        }
        w
    }

    /// `x_1 x_2 ... x_m`.
    pub fn product_of_generators(m: usize) -> Self {
        FreeWord((1..=m as i32).collect())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// `[a, b] = a b a^{-1} b^{-1}`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// If the word is `u x_j u^{-1}`, returns `j` (one-based).
    pub fn conjugate_of_generator(&self) -> Option<usize> {
        let n = self.0.len();
        if n.is_multiple_of(2) {
            return None;
        }
        let mid = self.0[n / 2];
        if mid < 0 || (0..n / 2).any(|i| self.0[i] != -self.0[n - 1 - i]) {
            return None;
        }
        Some(mid as usize)
    }

    /// Replaces each `x_i` by `images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> Self {
        let inverses: Vec<FreeWord> = images.iter().map(FreeWord::inverse).collect();
        let mut w = FreeWord::identity();
        for &l in &self.0 {
            let i = l.unsigned_abs() as usize - 1;
            let img = if l > 0 { &images[i] } else { &inverses[i] };
            for &m in &img.0 {
                w.push(m);
            }
        }
        w
    }

    /// Parses tokens like `x1 x2^-1 x3^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
            let bad = || Error::Invalid(format!("malformed free-group token `{tok}`"));
            let rest = tok.strip_prefix('x').ok_or_else(bad)?;
            let (base, exp) = match rest.split_once('^') {
                Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let i = base.parse::<i32>().map_err(|_| bad())?;
            if i <= 0 {
                return Err(bad());
            }
            let l = if exp < 0 { -i } else { i };
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(FreeWord::from_letters(letters))
    }

    fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Images of all generators under a single braid letter.
fn letter_images(m: usize, letter: i32) -> Vec<FreeWord> {
    let i = letter.unsigned_abs() as usize;
    let (xi, xj) = (i as i32, i as i32 + 1);
    (1..=m)
        .map(|g| {
            if g == i {
                if letter > 0 {
                    FreeWord(vec![xi, xj, -xi])
                } else {
                    FreeWord(vec![xj])
                }
            } else if g == i + 1 {
                if letter > 0 {
                    FreeWord(vec![xi])
                } else {
                    FreeWord(vec![-xj, xi, xj])
                }
            } else {
                FreeWord::generator(g)
            }
        })
        .collect()
}

/// Artin's action: `s_i(x_i) = x_i x_{i+1} x_i^{-1}`, `s_i(x_{i+1}) = x_i`, other generators fixed.
///
/// The action is on the left, so the last letter of `w` is applied first.
pub fn artin_apply(w: &BraidWord, u: &FreeWord) -> Result<FreeWord> {
    let m = w.strands();
    if u.max_generator() > m {
        return Err(Error::StrandMismatch { expected: m, actual: u.max_generator() });
    }
    let mut out = u.clone();
    for &l in w.letters().iter().rev() {
        out = out.substitute(&letter_images(m, l));
    }
    Ok(out)
}

/// True iff `w` fixes `x_1 x_2 ... x_{n+1}`.
pub fn artin_product_invariance(w: &BraidWord) -> bool {
    let p = FreeWord::product_of_generators(w.strands());
    artin_apply(w, &p).map(|img| img == p).unwrap_or(false)
}

/// An element `(v, t)` of `R^m ⋊ H`, with product `(v, t)(v', t') = (v + t v', t t')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectElement {
    pub vector: Vec<LaurentPoly>,
    pub monomial: ExponentVector,
}

impl SemidirectElement {
    pub fn identity(m: usize) -> Self {
        SemidirectElement { vector: vec![LaurentPoly::zero(m); m], monomial: ExponentVector::zero(m) }
    }

    /// `x_i = (e_i, X_i)`, one-based.
    pub fn generator(m: usize, i: usize) -> Self {
        let mut g = Self::identity(m);
        g.vector[i - 1] = LaurentPoly::one(m);
        g.monomial = ExponentVector::unit(m, i - 1);
        g
    }

    pub fn mul(&self, other: &Self) -> Self {
        SemidirectElement {
            vector: self
                .vector
                .iter()
                .zip(&other.vector)
                .map(|(a, b)| a + &b.mul_monomial(&self.monomial))
                .collect(),
            monomial: self.monomial.add(&other.monomial),
        }
    }

    /// `(v, t)^{-1} = (-t^{-1} v, t^{-1})`.
    pub fn inverse(&self) -> Self {
        let tinv = self.monomial.neg();
        SemidirectElement { vector: self.vector.iter().map(|a| -&a.mul_monomial(&tinv)).collect(), monomial: tinv }
    }
}

/// Image of `u` under `x_i -> (e_i, X_i)` in `R^m ⋊ H`.
pub fn semidirect_eval(m: usize, u: &FreeWord) -> SemidirectElement {
    let gens: Vec<SemidirectElement> = (1..=m).map(|i| SemidirectElement::generator(m, i)).collect();
    let invs: Vec<SemidirectElement> = gens.iter().map(SemidirectElement::inverse).collect();
    u.letters().iter().fold(SemidirectElement::identity(m), |acc, &l| {
        let i = l.unsigned_abs() as usize - 1;
        acc.mul(if l > 0 { &gens[i] } else { &invs[i] })
    })
}

/// The unreduced Gassner matrix of a pure braid, column `i` being the vector
/// part of `semidirect_eval(w(x_i))`.
pub fn derive_unreduced_matrix(w: &BraidWord) -> Result<Matrix<LaurentPoly>> {
    let m = w.strands();
    let perm = permutation_image(w);
    if !perm.is_identity() {
        return Err(Error::NonPureWord(perm.to_string()));
    }
    let proto = LaurentPoly::zero(m);
    let mut mat = Matrix::zeros(m, m, &proto);
    for i in 1..=m {
        let img = semidirect_eval(m, &artin_apply(w, &FreeWord::generator(i))?);
        if img.monomial != ExponentVector::unit(m, i - 1) {
            return Err(Error::Invariant(format!(
                "image of x{i} under {w} has monomial part {} instead of X{i}",
                img.monomial
            )));
        }
        for (j, c) in img.vector.into_iter().enumerate() {
            mat.set(j, i - 1, c);
        }
    }
    Ok(mat)
}
