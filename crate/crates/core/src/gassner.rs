//! Gassner representations as a crossed homomorphism of the braid group.
//!
//! A braid `g` goes to a pair `(σ_g, M_g)`: its permutation and a matrix over
//! the Laurent ring `R = Z[X_1^±1, ..., X_{n+1}^±1]`. Composition is twisted,
//!
//! ```text
//! (σ_g, M_g)(σ_h, M_h) = (σ_g ∘ σ_h, M_g · σ_g(M_h)),
//! ```
//!
//! where `σ_g` renames variables `X_j -> X_{σ_g(j)}` entrywise. On pure braids
//! `σ` is trivial and the map is an honest representation over `R`.
//!
//! Two bases are supported. The unreduced basis is `e_1, ..., e_{n+1}`; the
//! reduced basis is `ε_1, ..., ε_n` with `ε_i = v_i - v_{i+1}` and
//! `e_i = (1 - X_i) v_i`. Entry `[j][i]` is the coefficient of basis vector `j`
//! in the image of basis vector `i`.
//!
//! Worked example on two strands, unreduced: `s_1` sends `e_1` to
//! `(1 - X_2) e_1 + X_1 e_2` and `e_2` to `e_1`, with `σ = (1 2)`. Squaring,
//! the second factor is renamed by `σ`, giving `e_1 -> (1 - X_1 + X_1 X_2) e_1 + X_1 (1 - X_1) e_2`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::braid::{permutation_image, pure_generator, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, MatrixStrings};
use crate::rings::{Involution, LaurentPoly, RationalFunction, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Reduced,
    Unreduced,
}

impl Basis {
    /// Matrix size for a braid on `strands` strands.
    pub fn dimension(self, strands: usize) -> usize {
        match self {
            Basis::Reduced => strands - 1,
            Basis::Unreduced => strands,
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reduced" | "eps" => Ok(Basis::Reduced),
            "unreduced" | "e" => Ok(Basis::Unreduced),
            _ => Err(Error::Invalid(format!("unknown basis `{s}` (expected reduced or unreduced)"))),
        }
    }
}

/// The value `(σ, M)` of the crossed homomorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedMap {
    perm: Permutation,
    matrix: Matrix<LaurentPoly>,
}

/// Applies a variable renaming to every entry.
pub fn twist_matrix(m: &Matrix<LaurentPoly>, perm: &Permutation) -> Matrix<LaurentPoly> {
    if perm.is_identity() {
        return m.clone();
    }
    m.map(m.proto(), |a| a.permute_variables(perm.images()))
}

fn twist_rational(m: &Matrix<RationalFunction>, perm: &Permutation) -> Matrix<RationalFunction> {
    if perm.is_identity() {
        return m.clone();
    }
    m.map(m.proto(), |a| a.permute_variables(perm.images()))
}

impl TwistedMap {
    pub fn new(perm: Permutation, matrix: Matrix<LaurentPoly>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Invalid("twisted map matrix must be square".into()));
        }
        if perm.len() != matrix.proto().nvars() {
            return Err(Error::VariableCountMismatch { left: perm.len(), right: matrix.proto().nvars() });
        }
        Ok(TwistedMap { perm, matrix })
    }

    pub fn identity(basis: Basis, strands: usize) -> Self {
        TwistedMap {
            perm: Permutation::identity(strands),
            matrix: Matrix::identity(basis.dimension(strands), &LaurentPoly::zero(strands)),
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn matrix(&self) -> &Matrix<LaurentPoly> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<LaurentPoly> {
        self.matrix
    }

    /// True when the permutation is trivial, so the map is linear over `R`.
    pub fn is_linear(&self) -> bool {
        self.perm.is_identity()
    }

    /// `self · other` under the twisted rule.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.perm.len() != other.perm.len() {
            return Err(Error::StrandMismatch { expected: self.perm.len(), actual: other.perm.len() });
        }
        Ok(TwistedMap {
            perm: self.perm.compose(&other.perm),
            matrix: self.matrix.checked_mul(&twist_matrix(&other.matrix, &self.perm))?,
        })
    }

    /// The matrix with entries viewed in the fraction field.
    pub fn to_rational(&self) -> Matrix<RationalFunction> {
        let proto = RationalFunction::zero(self.perm.len());
        self.matrix.map(&proto, |a| RationalFunction::from_poly(a.clone()))
    }

    pub fn serialize(&self) -> TwistedMapJson {
        TwistedMapJson { perm: self.perm.one_line(), matrix: MatrixStrings::from(&self.matrix) }
    }
}

/// JSON form: one-line permutation images and canonical entry strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedMapJson {
    pub perm: Vec<usize>,
    pub matrix: MatrixStrings,
}

fn var(m: usize, i: usize) -> LaurentPoly {
    LaurentPoly::var(m, i)
}

fn one_minus_var(m: usize, i: usize) -> LaurentPoly {
    &LaurentPoly::one(m) - &var(m, i)
}

fn check_letter(strands: usize, letter: i32) -> Result<usize> {
    let i = letter.unsigned_abs() as usize;
    if letter == 0 || i >= strands {
        return Err(Error::IndexOutOfRange(format!("generator s{i} on {strands} strands")));
    }
    Ok(i)
}

/// `ρ(s_i^{±1})` in the unreduced basis: `s_i` sends `e_i -> (1 - X_{i+1}) e_i + X_i e_{i+1}`, `e_{i+1} -> e_i`.
pub fn unreduced_generator(letter: i32, strands: usize) -> Result<TwistedMap> {
    let i = check_letter(strands, letter)?;
    let m = strands;
    let (a, b) = (i - 1, i);
    let zero = LaurentPoly::zero(m);
    let mut mat = Matrix::identity(m, &zero);
    mat.set(a, a, zero.clone());
    mat.set(b, b, zero.clone());
    if letter > 0 {
        mat.set(a, a, one_minus_var(m, b));
        mat.set(b, a, var(m, a));
        mat.set(a, b, LaurentPoly::one(m));
    } else {
        let xb_inv = var(m, b).involute();
        mat.set(b, a, LaurentPoly::one(m));
        mat.set(a, b, xb_inv.clone());
        mat.set(b, b, -&(&one_minus_var(m, a) * &xb_inv));
    }
    TwistedMap::new(Permutation::transposition(m, a, b), mat)
}

/// `ρ(s_i^{±1})` in the reduced basis.
///
/// `s_i`: `ε_{i-1} -> ε_{i-1} + X_i ε_i`, `ε_i -> -X_i ε_i`, `ε_{i+1} -> ε_i + ε_{i+1}`, other `ε_j` fixed.
pub fn reduced_generator(letter: i32, strands: usize) -> Result<TwistedMap> {
    let i = check_letter(strands, letter)?;
    let m = strands;
    let n = strands - 1;
    let c = i - 1;
    let zero = LaurentPoly::zero(m);
    let mut mat = Matrix::identity(n, &zero);
    if letter > 0 {
        let xi = var(m, c);
        if c > 0 {
            mat.set(c, c - 1, xi.clone());
        }
        mat.set(c, c, -&xi);
        if c + 1 < n {
            mat.set(c, c + 1, LaurentPoly::one(m));
        }
    } else {
        let inv = var(m, c + 1).involute();
        if c > 0 {
            mat.set(c, c - 1, LaurentPoly::one(m));
        }
        mat.set(c, c, -&inv);
        if c + 1 < n {
            mat.set(c, c + 1, inv);
        }
    }
    TwistedMap::new(Permutation::transposition(m, c, c + 1), mat)
}

pub fn generator_map(basis: Basis, letter: i32, strands: usize) -> Result<TwistedMap> {
    match basis {
        Basis::Reduced => reduced_generator(letter, strands),
        Basis::Unreduced => unreduced_generator(letter, strands),
    }
}

/// Folds the generator maps of `w` under the twisted composition rule.
pub fn evaluate_word(w: &BraidWord, basis: Basis) -> Result<TwistedMap> {
    let strands = w.strands();
    let mut cache: BTreeMap<i32, TwistedMap> = BTreeMap::new();
    let mut acc = TwistedMap::identity(basis, strands);
    for &l in w.letters() {
        if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(l) {
            e.insert(generator_map(basis, l, strands)?);
        }
        acc = acc.compose(&cache[&l])?;
    }
    debug_assert_eq!(acc.perm, permutation_image(w));
    Ok(acc)
}

/// Images of all `A_{rs}` in one basis, keyed by `(r, s)`.
pub type PureGeneratorImages = BTreeMap<(usize, usize), Matrix<LaurentPoly>>;

type ImageCache = BTreeMap<(Basis, usize), Arc<PureGeneratorImages>>;

/// `ρ(A_{rs})` for every `1 <= r < s <= strands`, memoized per `(basis, strands)`.
pub fn pure_generator_images(basis: Basis, strands: usize) -> Result<Arc<PureGeneratorImages>> {
    static CACHE: OnceLock<Mutex<ImageCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(&(basis, strands)) {
        return Ok(hit.clone());
    }
    let mut out = BTreeMap::new();
    for r in 1..strands {
        for s in r + 1..=strands {
            let img = evaluate_word(&pure_generator(r, s, strands)?, basis)?;
            out.insert((r, s), img.into_matrix());
        }
    }
    let out = Arc::new(out);
    cache.lock().expect("cache lock").insert((basis, strands), out.clone());
    Ok(out)
}

/// The invariant vectors: unreduced `v = Σ X_1...X_{i-1} e_i`, and the formal
/// reduced `w = Σ (1 - π_i) ε_i` with `π_i = X_1...X_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVectors {
    pub unreduced: Vec<LaurentPoly>,
    pub reduced: Vec<LaurentPoly>,
}

pub fn invariant_vectors(n: usize) -> InvariantVectors {
    let m = n + 1;
    let mut prefix = LaurentPoly::one(m);
    let mut unreduced = Vec::with_capacity(m);
    let mut reduced = Vec::with_capacity(n);
    for i in 0..m {
        unreduced.push(prefix.clone());
        prefix = &prefix * &var(m, i);
        if i < n {
            reduced.push(&LaurentPoly::one(m) - &prefix);
        }
    }
    InvariantVectors { unreduced, reduced }
}

/// Coordinates of `e_1, ..., e_{n+1}` (columns) in the basis `ε_1, ..., ε_n, v_{n+1}`.
///
/// From `e_i = (1 - X_i) v_i` and `v_i = ε_i + ... + ε_n + v_{n+1}`.
pub fn basis_change_e_to_eps(n: usize) -> Matrix<RationalFunction> {
    let m = n + 1;
    let proto = RationalFunction::zero(m);
    Matrix::from_fn(m, m, &proto, |j, i| {
        if j >= i {
            RationalFunction::from_poly(one_minus_var(m, i))
        } else {
            proto.clone()
        }
    })
}

/// Converts an unreduced twisted map to the basis `(ε_1..ε_n, v_{n+1})`:
/// `P · M · σ(P)^{-1}`. Returns the full matrix over the fraction field.
pub fn to_eps_v_basis(map: &TwistedMap) -> Result<Matrix<RationalFunction>> {
    let m = map.perm.len();
    if map.matrix.rows() != m {
        return Err(Error::Invalid("expected an unreduced map".into()));
    }
    let p = basis_change_e_to_eps(m - 1);
    let p_inv = p.inverse()?.ok_or_else(|| Error::Invariant("basis change is singular".into()))?;
    p.checked_mul(&map.to_rational())?.checked_mul(&twist_rational(&p_inv, &map.perm))
}

/// The reduced map obtained from the unreduced one through the basis change.
///
/// Checks that `span(ε)` is stable (last row vanishes on the first `n`
/// columns) and that the block has Laurent entries.
pub fn reduce_from_unreduced(map: &TwistedMap) -> Result<TwistedMap> {
    let full = to_eps_v_basis(map)?;
    let m = map.perm.len();
    let n = m - 1;
    if (0..n).any(|j| !Ring::is_zero(full.get(n, j))) {
        return Err(Error::Invariant("span of the ε basis is not stable".into()));
    }
    let proto = LaurentPoly::zero(m);
    let block = full.block(0, n, 0, n).try_map(&proto, |a| {
        a.as_poly().cloned().ok_or_else(|| Error::Invariant(format!("reduced entry {a} is not a Laurent polynomial")))
    })?;
    TwistedMap::new(map.perm.clone(), block)
}

/// Substitutes `X_i -> q` in every entry, giving the Burau matrix in one variable.
pub fn burau_specialize(map: &TwistedMap) -> Matrix<LaurentPoly> {
    let m = map.perm.len();
    let weights = vec![1; m];
    map.matrix.map(&LaurentPoly::zero(1), |a| a.substitute_univariate(&weights))
}

/// Inverse of a linear (pure) map over the fraction field, converted back to `R` when possible.
pub fn linear_inverse(m: &Matrix<LaurentPoly>) -> Result<Matrix<LaurentPoly>> {
    let nvars = m.proto().nvars();
    let rat = m.map(&RationalFunction::zero(nvars), |a| RationalFunction::from_poly(a.clone()));
    let inv = rat.inverse()?.ok_or_else(|| Error::Invariant("singular representation matrix".into()))?;
    inv.try_map(&LaurentPoly::zero(nvars), |a| {
        a.as_poly().cloned().ok_or_else(|| Error::Invariant("inverse has a non-Laurent entry".into()))
    })
}
