//! The reduced Gassner representation at roots of unity.
//!
//! `X_i -> t_i = w_d^{k_i}`. When `t_1 ... t_{n+1} = 1` the form degenerates,
//! an invariant vector `w = Σ (1 - π_i) ε_i` appears and commutators of full
//! twists become unipotent. This module computes those objects exactly.

pub mod zomega;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{full_twist, permutation_image, pure_generator, BraidWord};
use crate::error::{Error, Result};
use crate::gassner::{pure_generator_images, reduced_generator, Basis};
use crate::matrix::Matrix;
use crate::rings::{coprime, CycloNum, CyclotomicField, Ring};
use zomega::{algebra_dimension, IntEchelon, stacked_fixed_rank, with_fallback, zw_mul, zw_sub, Int, ZwMatrix, ZwRing};

/// Number of random conjugates tested by [`flag_unipotency_check`].
pub const FLAG_CONJUGATES: usize = 20;
/// Maximal number of `A_{rs}` letters in a random conjugator.
pub const CONJUGATOR_MAX_LEN: usize = 10;

/// Checks `1 <= k_i <= d - 1` and `gcd(k_i, d) = 1`.
pub fn validate_weights(d: u32, k: &[i64]) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!("order d = {d} must be at least 2")));
    }
    for &ki in k {
        if ki < 1 || ki >= d as i64 {
            return Err(Error::Precondition(format!("weight {ki} outside 1..={}", d - 1)));
        }
        if !coprime(ki, d as i64) {
            return Err(Error::NotCoprime { value: ki, modulus: d });
        }
    }
    Ok(())
}

/// The pure-braid generators `A_{rs}` specialized at `t_i = w_d^{k_i}`.
#[derive(Clone, Debug)]
pub struct SpecializedRep {
    strands: usize,
    order: u32,
    weights: Vec<i64>,
    field: Arc<CyclotomicField>,
    generators: BTreeMap<(usize, usize), Matrix<CycloNum>>,
}

/// Specializes the symbolic reduced images of all `A_{rs}` on `n + 1` strands.
pub fn specialize_rep(n: usize, d: u32, k: &[i64]) -> Result<SpecializedRep> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if k.len() != n + 1 {
        return Err(Error::Precondition(format!("expected {} weights, got {}", n + 1, k.len())));
    }
    validate_weights(d, k)?;
    let field = CyclotomicField::new(d);
    let images = pure_generator_images(Basis::Reduced, n + 1)?;
    let proto = CycloNum::zero(&field);
    let mut generators = BTreeMap::new();
    for (&rs, m) in images.iter() {
        generators.insert(rs, m.try_map(&proto, |a| a.specialize(&field, k))?);
    }
    Ok(SpecializedRep { strands: n + 1, order: d, weights: k.to_vec(), field, generators })
}

impl SpecializedRep {
    pub fn n(&self) -> usize {
        self.strands - 1
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn generators(&self) -> &BTreeMap<(usize, usize), Matrix<CycloNum>> {
        &self.generators
    }

    pub fn generator(&self, r: usize, s: usize) -> Option<&Matrix<CycloNum>> {
        self.generators.get(&(r, s))
    }

    /// `t_1 ... t_{n+1}`.
    pub fn central_scalar(&self) -> CycloNum {
        CycloNum::omega_pow(&self.field, self.weights.iter().sum())
    }

    pub fn is_degenerate(&self) -> bool {
        self.weights.iter().sum::<i64>().rem_euclid(self.order as i64) == 0
    }

    /// The formal invariant vector `Σ_{i <= n} (1 - π_i) ε_i` at these weights.
    pub fn w_vector(&self) -> Vec<CycloNum> {
        w_vector(&self.field, &self.weights, self.n())
    }
}

/// `Σ_{i <= len} (1 - t_1 ... t_i) ε_i` padded to `dim` coordinates.
fn w_vector(field: &Arc<CyclotomicField>, k: &[i64], dim: usize) -> Vec<CycloNum> {
    let one = CycloNum::one(field);
    let mut prefix = 0i64;
    (0..dim)
        .map(|i| {
            prefix += k[i];
            Ring::sub(&one, &CycloNum::omega_pow(field, prefix))
        })
        .collect()
}

/// The specialized image of any braid word, letter by letter: each generator
/// is specialized at the weights permuted by the preceding letters. This path
/// never forms symbolic products.
pub fn specialize_word(w: &BraidWord, field: &Arc<CyclotomicField>, k: &[i64]) -> Result<Matrix<CycloNum>> {
    let strands = w.strands();
    if k.len() != strands {
        return Err(Error::Precondition(format!("expected {strands} weights, got {}", k.len())));
    }
    let proto = CycloNum::zero(field);
    let mut acc = Matrix::identity(strands - 1, &proto);
    let mut prefix = BraidWord::empty(strands);
    for &l in w.letters() {
        let sigma = permutation_image(&prefix);
        let kk: Vec<i64> = (0..strands).map(|j| k[sigma.apply(j)]).collect();
        let g = reduced_generator(l, strands)?;
        let spec = g.matrix().try_map(&proto, |a| a.specialize(field, &kk))?;
        acc = acc.checked_mul(&spec)?;
        prefix = prefix.concat(&BraidWord::generator(strands, l)?)?;
    }
    Ok(acc)
}

/// Integer version of [`specialize_word`], building each letter's matrix directly.
fn specialize_word_int<I: Int>(w: &BraidWord, k: &[i64], ring: &ZwRing) -> Option<ZwMatrix<I>> {
    let strands = w.strands();
    let n = strands - 1;
    let phi = ring.phi();
    let mut sigma: Vec<usize> = (0..strands).collect();
    let mut acc = ZwMatrix::<I>::identity(n, phi);
    for &l in w.letters() {
        let c = l.unsigned_abs() as usize - 1;
        let kk = |j: usize| k[sigma[j]];
        let mut g = ZwMatrix::<I>::identity(n, phi);
        if l > 0 {
            let t = ring.omega_pow::<I>(kk(c));
            if c > 0 {
                g.entry_mut(c, c - 1).clone_from_slice(&t);
            }
            let neg: Vec<I> = t.iter().map(|x| x.neg()).collect::<Option<_>>()?;
            g.entry_mut(c, c).clone_from_slice(&neg);
            if c + 1 < n {
                g.entry_mut(c, c + 1).clone_from_slice(&ring.omega_pow::<I>(0));
            }
        } else {
            let inv = ring.omega_pow::<I>(-kk(c + 1));
            if c > 0 {
                g.entry_mut(c, c - 1).clone_from_slice(&ring.omega_pow::<I>(0));
            }
            let neg: Vec<I> = inv.iter().map(|x| x.neg()).collect::<Option<_>>()?;
            g.entry_mut(c, c).clone_from_slice(&neg);
            if c + 1 < n {
                g.entry_mut(c, c + 1).clone_from_slice(&inv);
            }
        }
        acc = acc.mul(&g, ring)?;
        sigma.swap(c, c + 1);
    }
    Some(acc)
}

/// A one-based inclusive index interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blocks {
    #[serde(rename = "I")]
    pub i: Interval,
    #[serde(rename = "J")]
    pub j: Interval,
}

/// First block of consecutive indices in `window` (one-based, inclusive) whose weights sum to 0 mod `d`.
fn prefix_scan(d: u32, k: &[i64], window: Interval) -> Option<Interval> {
    let mut seen: BTreeMap<i64, usize> = BTreeMap::new();
    let mut sum = 0i64;
    seen.insert(0, window.start - 1);
    for idx in window.indices() {
        sum = (sum + k[idx - 1]).rem_euclid(d as i64);
        if let Some(&prev) = seen.get(&sum) {
            return Some(Interval { start: prev + 1, end: idx });
        }
        seen.insert(sum, idx);
    }
    None
}

/// Two disjoint blocks `I ⊂ {1..d}`, `J ⊂ {d+1..2d}` with `Π_{i∈I} t_i = Π_{j∈J} t_j = 1`.
pub fn pigeonhole_blocks(d: u32, k: &[i64]) -> Result<Blocks> {
    validate_weights(d, k)?;
    let n = k.len().saturating_sub(1);
    if n < 2 * d as usize {
        return Err(Error::Precondition(format!("pigeonhole blocks need n >= 2d, got n = {n}, d = {d}")));
    }
    let du = d as usize;
    let i = prefix_scan(d, k, Interval { start: 1, end: du })
        .ok_or_else(|| Error::Invariant("no unit block in the first window".into()))?;
    let j = prefix_scan(d, k, Interval { start: du + 1, end: 2 * du })
        .ok_or_else(|| Error::Invariant("no unit block in the second window".into()))?;
    Ok(Blocks { i, j })
}

fn check_degenerate_prefix(p: usize, d: u32, k: &[i64], extra: usize) -> Result<()> {
    if p < 3 {
        return Err(Error::Precondition(format!("p = {p} must be at least 3")));
    }
    if k.len() != p + extra {
        return Err(Error::Precondition(format!("expected {} weights, got {}", p + extra, k.len())));
    }
    validate_weights(d, k)?;
    let s: i64 = k[..p].iter().sum();
    if s.rem_euclid(d as i64) != 0 {
        return Err(Error::Precondition(format!("k_1 + ... + k_{p} = {s} is not divisible by d = {d}")));
    }
    Ok(())
}

/// `s_1^2 · Δ'^2 · s_1^{-2} · Δ'^{-2}` with `Δ'` the twist on strands `2..p`.
pub fn commutator_word(p: usize, strands: usize) -> Result<BraidWord> {
    let g = BraidWord::new(strands, vec![1, 1])?;
    let t = full_twist(2, p, strands)?.pow(2);
    g.concat(&t)?.concat(&g.inverse())?.concat(&t.inverse())
}

/// The commutator and its shape in the basis `(w, ε_2, ..., ε_{p-1})`.
///
/// On `p` strands the reduced module has dimension `p - 1`, so the complement
/// of `w` is spanned by `ε_2, ..., ε_{p-1}` and not by `ε_2, ..., ε_p`.
#[derive(Clone, Debug)]
pub struct UnipotentCommutator {
    pub u: Matrix<CycloNum>,
    pub u_flag_basis: Matrix<CycloNum>,
    /// Coefficient of `w` in `u(ε_2)`.
    pub off_diagonal: CycloNum,
    /// `t_2 ... t_p`, the scalar by which `Δ'^2` acts on `ε_2, ..., ε_{p-1}`.
    pub twist_scalar: CycloNum,
}

/// `u = [ρ(s_1^2), ρ(Δ'^2)]` on the `p`-strand specialization, asserting `u != I` and `(u - I)^2 = 0`.
pub fn unipotent_commutator(p: usize, d: u32, k: &[i64]) -> Result<UnipotentCommutator> {
    check_degenerate_prefix(p, d, k, 0)?;
    let field = CyclotomicField::new(d);
    let n = p - 1;

    let twist = full_twist(2, p, p)?.pow(2);
    let t = specialize_word(&twist, &field, k)?;
    let c = CycloNum::omega_pow(&field, k[1..p].iter().sum());
    for j in 1..n {
        let expect: Vec<CycloNum> =
            (0..n).map(|i| if i == j { c.clone() } else { CycloNum::zero(&field) }).collect();
        if t.column(j) != expect {
            return Err(Error::Invariant(format!("Δ'^2 does not act by t_2...t_p on ε_{}", j + 1)));
        }
    }

    let u = specialize_word(&commutator_word(p, p)?, &field, k)?;
    let id = Matrix::identity(n, &CycloNum::zero(&field));
    let nil = u.checked_sub(&id)?;
    if nil.is_zero() {
        return Err(Error::Invariant("commutator is the identity".into()));
    }
    if !nil.checked_mul(&nil)?.is_zero() {
        return Err(Error::Invariant("(u - I)^2 is not zero".into()));
    }

    let w = w_vector(&field, k, n);
    let q = Matrix::from_fn(n, n, &CycloNum::zero(&field), |i, j| {
        if j == 0 {
            w[i].clone()
        } else if i == j {
            CycloNum::one(&field)
        } else {
            CycloNum::zero(&field)
        }
    });
    let q_inv = q.inverse()?.ok_or_else(|| Error::Invariant("w, ε_2, ... is not a basis".into()))?;
    let u_flag_basis = q_inv.checked_mul(&u)?.checked_mul(&q)?;
    let off_diagonal = if n >= 2 { u_flag_basis.get(0, 1).clone() } else { CycloNum::zero(&field) };
    Ok(UnipotentCommutator { u, u_flag_basis, off_diagonal, twist_scalar: c })
}

/// The flag `E w ⊂ span(w, ε_2, ..., ε_{p-1}) ⊂ V` on `p + 1` strands.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagDecomposition {
    pub w_vector: Vec<String>,
    /// One-based indices `i` of the basis vectors `ε_i` completing `w` to a basis.
    pub complement_basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagReport {
    pub holds: bool,
    pub elements_checked: usize,
    /// `Z`-rank of the additive group spanned by `g - I` over the sampled elements.
    pub sampled_lattice_rank: usize,
    pub flag: FlagDecomposition,
}

/// Checks that `g` fixes `w`, moves each `ε_j` (`2 <= j <= p-1`) by a multiple
/// of `w`, and moves `ε_p` inside `span(w, ε_2, ..., ε_{p-1})`.
fn preserves_flag<I: Int>(g: &ZwMatrix<I>, w: &[Vec<I>], p: usize, ring: &ZwRing) -> Option<bool> {
    let n = g.size();
    if g.apply(w, ring)? != w {
        return Some(false);
    }
    let w1 = &w[0];
    for j in 1..p - 1 {
        let mut y = g.column(j);
        y[j] = zw_sub(&y[j], &ring.omega_pow::<I>(0))?;
        for i in 0..n {
            let lhs = zw_mul(&y[i], w1, ring)?;
            let rhs = zw_mul(&y[0], &w[i], ring)?;
            if lhs != rhs {
                return Some(false);
            }
        }
    }
    Some(g.entry(p - 1, p - 1) == ring.omega_pow::<I>(0).as_slice())
}

fn random_conjugator(p: usize, strands: usize, rng: &mut ChaCha8Rng) -> Result<BraidWord> {
    let pairs: Vec<(usize, usize)> = (2..p).flat_map(|r| (r + 1..=p).map(move |s| (r, s))).collect();
    let len = rng.gen_range(1..=CONJUGATOR_MAX_LEN);
    let mut w = BraidWord::empty(strands);
    for _ in 0..len {
        let (r, s) = pairs[rng.gen_range(0..pairs.len())];
        let a = pure_generator(r, s, strands)?;
        let a = if rng.gen_bool(0.5) { a } else { a.inverse() };
        w = w.concat(&a)?;
    }
    Ok(w)
}

/// Runs the flag check; also returns the `Z`-rank of the additive group spanned by the `g - I`.
fn flag_check_int<I: Int>(p: usize, k: &[i64], ring: &ZwRing, words: &[BraidWord]) -> Option<(bool, usize)> {
    let w: Vec<Vec<I>> = {
        let mut prefix = 0i64;
        (0..p)
            .map(|i| {
                if i + 1 < p {
                    prefix += k[i];
                    zw_sub(&ring.omega_pow::<I>(0), &ring.omega_pow::<I>(prefix))
                } else {
                    Some(vec![I::from_i64(0); ring.phi()])
                }
            })
            .collect::<Option<_>>()?
    };
    let strands = p + 1;
    let id = ZwMatrix::<I>::identity(p, ring.phi());
    let mut lattice = IntEchelon::<I>::new(p * p * ring.phi());
    let u_word = commutator_word(p, strands).ok()?;
    let u = specialize_word_int::<I>(&u_word, k, ring)?;
    if u.is_identity() || !preserves_flag(&u, &w, p, ring)? {
        return Some((false, 0));
    }
    lattice.insert(u.sub(&id)?.flat().to_vec())?;
    for x in words {
        let xm = specialize_word_int::<I>(x, k, ring)?;
        let xi = specialize_word_int::<I>(&x.inverse(), k, ring)?;
        let g = xm.mul(&u, ring)?.mul(&xi, ring)?;
        if !preserves_flag(&g, &w, p, ring)? {
            return Some((false, lattice.rank()));
        }
        lattice.insert(g.sub(&id)?.flat().to_vec())?;
    }
    Some((true, lattice.rank()))
}

/// Block unipotency of `u` and [`FLAG_CONJUGATES`] random conjugates by words in
/// `A_{rs}`, `2 <= r < s <= p`, on `p + 1` strands (`k` has `p + 1` entries).
pub fn flag_unipotency_check(p: usize, d: u32, k: &[i64], seed: u64) -> Result<FlagReport> {
    check_degenerate_prefix(p, d, k, 1)?;
    let strands = p + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = (0..FLAG_CONJUGATES).map(|_| random_conjugator(p, strands, &mut rng)).collect::<Result<Vec<_>>>()?;
    let field = CyclotomicField::new(d);
    let ring = ZwRing::new(&field);
    let (holds, sampled_lattice_rank) = with_fallback(
        || flag_check_int::<i128>(p, k, &ring, &words),
        || flag_check_int::<BigInt>(p, k, &ring, &words),
    );
    let w = w_vector(&field, &k[..p], p - 1);
    Ok(FlagReport {
        holds,
        elements_checked: 1 + FLAG_CONJUGATES,
        sampled_lattice_rank,
        flag: FlagDecomposition {
            w_vector: w.iter().map(ToString::to_string).chain(std::iter::once("0".to_string())).collect(),
            complement_basis: (2..=p).collect(),
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideResult {
    pub span_dim: usize,
    pub irreducible: bool,
}

fn int_generators<I: Int>(rep: &SpecializedRep) -> Option<Vec<ZwMatrix<I>>> {
    rep.generators.values().map(ZwMatrix::<I>::from_cyclo).collect()
}

/// Dimension of the algebra spanned by products of the generators; irreducible iff it is `n^2`.
pub fn burnside_irreducibility(rep: &SpecializedRep) -> BurnsideResult {
    let n = rep.n();
    let ring = ZwRing::new(&rep.field);
    let cap = 2 * n * n;
    let span_dim = with_fallback(
        || algebra_dimension::<i128>(&int_generators(rep)?, n, &ring, cap),
        || algebra_dimension::<BigInt>(&int_generators(rep)?, n, &ring, cap),
    );
    BurnsideResult { span_dim, irreducible: span_dim == n * n }
}

/// Dimension of the space of vectors fixed by every generator.
pub fn fixed_space_dim(rep: &SpecializedRep) -> usize {
    let n = rep.n();
    let ring = ZwRing::new(&rep.field);
    let rank = with_fallback(
        || stacked_fixed_rank::<i128>(&int_generators(rep)?, n, &ring),
        || stacked_fixed_rank::<BigInt>(&int_generators(rep)?, n, &ring),
    );
    n - rank
}

/// Reference implementation of [`burnside_irreducibility`] by Gaussian elimination over `Q(w)`.
pub fn burnside_span_reference(gens: &[Matrix<CycloNum>], n: usize, field: &Arc<CyclotomicField>) -> usize {
    let proto = CycloNum::zero(field);
    let flat = |m: &Matrix<CycloNum>| m.entries().to_vec();
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    let mut basis: Vec<Matrix<CycloNum>> = Vec::new();
    let rank_of = |rows: &[Vec<CycloNum>]| {
        if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows.to_vec(), &proto).expect("equal rows").rank()
        }
    };
    let mut queue = std::collections::VecDeque::new();
    let id = Matrix::identity(n, &proto);
    rows.push(flat(&id));
    basis.push(id.clone());
    queue.push_back(id);
    let mut rank = 1;
    while let Some(b) = queue.pop_front() {
        if rank == n * n {
            break;
        }
        for g in gens {
            let prod = b.checked_mul(g).expect("square");
            rows.push(flat(&prod));
            let r = rank_of(&rows);
            if r > rank {
                rank = r;
                queue.push_back(prod.clone());
                basis.push(prod);
            } else {
                rows.pop();
            }
        }
    }
    rank
}

/// Reference fixed-space dimension via the kernel of the stacked `M - I`.
pub fn fixed_space_reference(gens: &[Matrix<CycloNum>], n: usize, field: &Arc<CyclotomicField>) -> usize {
    let proto = CycloNum::zero(field);
    let id = Matrix::identity(n, &proto);
    let mut rows = Vec::new();
    for g in gens {
        rows.extend(g.checked_sub(&id).expect("square").to_rows());
    }
    if rows.is_empty() {
        return n;
    }
    Matrix::from_rows(rows, &proto).expect("equal rows").kernel().len()
}

/// `ρ(Δ_n^2) = t_1 ... t_{n+1} · I` at the specialization, through the letter-by-letter path.
pub fn central_scalar_holds(n: usize, d: u32, k: &[i64]) -> Result<bool> {
    validate_weights(d, k)?;
    let strands = n + 1;
    if k.len() != strands {
        return Err(Error::Precondition(format!("expected {strands} weights, got {}", k.len())));
    }
    let field = CyclotomicField::new(d);
    let ring = ZwRing::new(&field);
    let word = full_twist(1, strands, strands)?.pow(2);
    let s: i64 = k.iter().sum();
    let check = |m: ZwMatrix<BigInt>| {
        let mut scalar = ZwMatrix::<BigInt>::zeros(n, ring.phi());
        for i in 0..n {
            scalar.entry_mut(i, i).clone_from_slice(&ring.omega_pow::<BigInt>(s));
        }
        m == scalar
    };
    let m = with_fallback(
        || specialize_word_int::<i128>(&word, k, &ring).map(|m| to_big(&m, &ring)),
        || specialize_word_int::<BigInt>(&word, k, &ring),
    );
    Ok(check(m))
}

fn to_big(m: &ZwMatrix<i128>, ring: &ZwRing) -> ZwMatrix<BigInt> {
    let n = m.size();
    let mut out = ZwMatrix::<BigInt>::zeros(n, ring.phi());
    for i in 0..n {
        for j in 0..n {
            let src: Vec<BigInt> = m.entry(i, j).iter().map(|&c| BigInt::from(c)).collect();
            out.entry_mut(i, j).clone_from_slice(&src);
        }
    }
    out
}

/// Summary of the specialization `(n, d, k)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub n: usize,
    pub d: u32,
    pub k: Vec<i64>,
    pub degenerate: bool,
    pub span_dim: usize,
    pub irreducible: bool,
    pub fixed_space_dim: usize,
    pub central_scalar: String,
    pub central_scalar_verified: bool,
    /// `p` with `d | k_1 + ... + k_p` used for the commutator, if any `3 <= p <= n + 1` qualifies.
    pub unipotent_p: Option<usize>,
    pub unipotent_found: bool,
    pub blocks: Option<Blocks>,
}

pub fn spectral_report(n: usize, d: u32, k: &[i64]) -> Result<SpectralReport> {
    let rep = specialize_rep(n, d, k)?;
    let burnside = burnside_irreducibility(&rep);
    let fixed = fixed_space_dim(&rep);
    let central_scalar_verified = central_scalar_holds(n, d, k)?;
    let mut prefix = 0i64;
    let unipotent_p = (1..=n + 1).find(|&p| {
        prefix += k[p - 1];
        p >= 3 && prefix.rem_euclid(d as i64) == 0
    });
    let unipotent_found = match unipotent_p {
        Some(p) => unipotent_commutator(p, d, &k[..p]).is_ok(),
        None => false,
    };
    let blocks = if n >= 2 * d as usize { Some(pigeonhole_blocks(d, k)?) } else { None };
    Ok(SpectralReport {
        n,
        d,
        k: k.to_vec(),
        degenerate: rep.is_degenerate(),
        span_dim: burnside.span_dim,
        irreducible: burnside.irreducible,
        fixed_space_dim: fixed,
        central_scalar: rep.central_scalar().to_string(),
        central_scalar_verified,
        unipotent_p,
        unipotent_found,
        blocks,
    })
}

#[doc(hidden)]
pub fn specialize_word_reference(w: &BraidWord, d: u32, k: &[i64]) -> Result<Matrix<CycloNum>> {
    let field = CyclotomicField::new(d);
    let ring = ZwRing::new(&field);
    let m = specialize_word_int::<BigInt>(w, k, &ring).ok_or_else(|| Error::Invariant("overflow".into()))?;
    Ok(m.to_cyclo(&field))
}
