//! Exact linear algebra over `Z[w_d]` with machine integers.
//!
//! Specialized Gassner matrices have entries in the ring of integers `Z[w_d]`,
//! so spans and ranks over `Q(w_d)` can be computed with integer row
//! reduction. A `Q(w_d)`-subspace of `Q(w_d)^N` is also a `Q`-subspace of
//! `Q^{φ(d) N}` closed under multiplication by `w`; its `Q(w_d)`-dimension is
//! the `Q`-dimension divided by `φ(d)`. Rows are reduced fraction-free and
//! divided by their content after every step.
//!
//! All arithmetic is checked. The kernel is generic over [`Int`], so callers run
//! it with `i128` first and repeat with `BigInt` when an operation overflows.

use std::fmt::Debug;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::matrix::Matrix;
use crate::rings::{CycloNum, CyclotomicField};

pub trait Int: Clone + PartialEq + Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_one_abs(&self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl Int for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one_abs(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one_abs(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u32)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Multiplication table of `Z[w_d]` in the power basis `1, w, ..., w^{φ-1}`.
#[derive(Clone, Debug)]
pub struct ZwRing {
    field: Arc<CyclotomicField>,
    phi: usize,
    /// `w^e` for `0 <= e < d`, as power-basis coefficients.
    powers: Vec<Vec<i64>>,
}

impl ZwRing {
    pub fn new(field: &Arc<CyclotomicField>) -> Self {
        let d = field.order() as i64;
        let powers = (0..d)
            .map(|e| field.power_coeffs(e).iter().map(|c| c.to_i64().expect("small cyclotomic coefficient")).collect())
            .collect();
        ZwRing { field: field.clone(), phi: field.degree(), powers }
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coefficients of `w^e` for any integer `e`.
    pub fn omega_pow<I: Int>(&self, e: i64) -> Vec<I> {
        let d = self.field.order() as i64;
        self.powers[e.rem_euclid(d) as usize].iter().map(|&c| I::from_i64(c)).collect()
    }

    /// Adds `a * b` into `acc`.
    fn mul_acc<I: Int>(&self, acc: &mut [I], a: &[I], b: &[I]) -> Option<()> {
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = x.mul(y)?;
                for (t, &c) in self.powers[(i + j) % self.powers.len()].iter().enumerate() {
                    if c != 0 {
                        acc[t] = acc[t].add(&p.mul(&I::from_i64(c))?)?;
                    }
                }
            }
        }
        Some(())
    }

    /// `w · a`.
    fn times_omega<I: Int>(&self, a: &[I]) -> Option<Vec<I>> {
        let mut out = vec![I::from_i64(0); self.phi];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, &c) in self.powers[(i + 1) % self.powers.len()].iter().enumerate() {
                if c != 0 {
                    out[t] = out[t].add(&x.mul(&I::from_i64(c))?)?;
                }
            }
        }
        Some(out)
    }
}

/// A square matrix over `Z[w_d]`, entries stored as `φ` consecutive coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ZwMatrix<I: Int> {
    n: usize,
    phi: usize,
    data: Vec<I>,
}

impl<I: Int> ZwMatrix<I> {
    pub fn zeros(n: usize, phi: usize) -> Self {
        ZwMatrix { n, phi, data: vec![I::from_i64(0); n * n * phi] }
    }

    pub fn identity(n: usize, phi: usize) -> Self {
        let mut m = Self::zeros(n, phi);
        for i in 0..n {
            m.data[(i * n + i) * phi] = I::from_i64(1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &[I] {
        let s = (i * self.n + j) * self.phi;
        &self.data[s..s + self.phi]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut [I] {
        let s = (i * self.n + j) * self.phi;
        &mut self.data[s..s + self.phi]
    }

    pub fn flat(&self) -> &[I] {
        &self.data
    }

    /// Converts a cyclotomic matrix whose entries are algebraic integers in the power basis.
    pub fn from_cyclo(m: &Matrix<CycloNum>) -> Option<Self> {
        let n = m.rows();
        let phi = m.proto().field().degree();
        let mut out = Self::zeros(n, phi);
        for i in 0..n {
            for j in 0..n {
                let coeffs = m.get(i, j).integer_coeffs()?;
                for (t, c) in coeffs.iter().enumerate() {
                    out.entry_mut(i, j)[t] = I::from_i64(c.to_i64()?);
                }
            }
        }
        Some(out)
    }

    pub fn to_cyclo(&self, field: &Arc<CyclotomicField>) -> Matrix<CycloNum> {
        let proto = CycloNum::zero(field);
        Matrix::from_fn(self.n, self.n, &proto, |i, j| {
            let coeffs: Vec<num_rational::BigRational> =
                self.entry(i, j).iter().map(|c| num_rational::BigRational::from_integer(c.to_bigint())).collect();
            CycloNum::from_coeffs(field, &coeffs)
        })
    }

    pub fn mul(&self, other: &Self, ring: &ZwRing) -> Option<Self> {
        let n = self.n;
        let phi = self.phi;
        let mut out = Self::zeros(n, phi);
        let mut acc = vec![I::from_i64(0); phi];
        for i in 0..n {
            for j in 0..n {
                for a in acc.iter_mut() {
                    *a = I::from_i64(0);
                }
                for k in 0..n {
                    let a = self.entry(i, k);
                    let b = other.entry(k, j);
                    if a.iter().all(Int::is_zero) || b.iter().all(Int::is_zero) {
                        continue;
                    }
                    ring.mul_acc(&mut acc, a, b)?;
                }
                out.entry_mut(i, j).clone_from_slice(&acc);
            }
        }
        Some(out)
    }

    pub fn sub(&self, other: &Self) -> Option<Self> {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect::<Option<Vec<I>>>()?;
        Some(ZwMatrix { n: self.n, phi: self.phi, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.phi)
    }

    /// `(M - I)^2 = 0`.
    pub fn is_square_zero_unipotent(&self, ring: &ZwRing) -> Option<bool> {
        let nil = self.sub(&Self::identity(self.n, self.phi))?;
        Some(nil.mul(&nil, ring)?.is_zero())
    }

    /// Column `j` as a vector of `Z[w]` entries.
    pub fn column(&self, j: usize) -> Vec<Vec<I>> {
        (0..self.n).map(|i| self.entry(i, j).to_vec()).collect()
    }

    /// `M v` for a vector of `Z[w]` entries.
    pub fn apply(&self, v: &[Vec<I>], ring: &ZwRing) -> Option<Vec<Vec<I>>> {
        (0..self.n)
            .map(|i| {
                let mut acc = vec![I::from_i64(0); self.phi];
                for (k, vk) in v.iter().enumerate() {
                    ring.mul_acc(&mut acc, self.entry(i, k), vk)?;
                }
                Some(acc)
            })
            .collect()
    }
}

/// Product of two `Z[w]` elements.
pub fn zw_mul<I: Int>(a: &[I], b: &[I], ring: &ZwRing) -> Option<Vec<I>> {
    let mut acc = vec![I::from_i64(0); ring.phi];
    ring.mul_acc(&mut acc, a, b)?;
    Some(acc)
}

pub fn zw_sub<I: Int>(a: &[I], b: &[I]) -> Option<Vec<I>> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Incremental row echelon form over `Z` for vectors of a fixed length.
#[derive(Clone, Debug)]
pub struct IntEchelon<I: Int> {
    len: usize,
    rows: Vec<(usize, Vec<I>)>,
}

impl<I: Int> IntEchelon<I> {
    pub fn new(len: usize) -> Self {
        IntEchelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; the result vanishes iff `v` is in their span.
    pub fn reduce(&self, mut v: Vec<I>) -> Option<Vec<I>> {
        debug_assert_eq!(v.len(), self.len);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            let g = a.gcd(&b);
            let (a, b) = (a.div_exact(&g), b.div_exact(&g));
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.mul(&a)?.sub(&r.mul(&b)?)?;
            }
            remove_content(&mut v);
        }
        Some(v)
    }

    /// Reduces and stores `v`; returns whether the rank grew, and the reduced vector.
    pub fn insert(&mut self, v: Vec<I>) -> Option<(bool, Vec<I>)> {
        let r = self.reduce(v)?;
        match r.iter().position(|x| !x.is_zero()) {
            None => Some((false, r)),
            Some(p) => {
                self.rows.push((p, r.clone()));
                Some((true, r))
            }
        }
    }
}

fn remove_content<I: Int>(v: &mut [I]) {
    let mut g = I::from_i64(0);
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one_abs() {
                return;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}

/// Flattens a vector of `Z[w]` entries into `Z^{φ N}`.
fn flatten<I: Int>(v: &[Vec<I>]) -> Vec<I> {
    v.iter().flat_map(|e| e.iter().cloned()).collect()
}

/// `w · v` for a flattened vector.
fn flat_times_omega<I: Int>(v: &[I], ring: &ZwRing) -> Option<Vec<I>> {
    let mut out = Vec::with_capacity(v.len());
    for chunk in v.chunks(ring.phi) {
        out.extend(ring.times_omega(chunk)?);
    }
    Some(out)
}

/// A `Q(w)`-subspace tracked through its `Q`-span.
#[derive(Clone, Debug)]
pub struct CycloSpan<I: Int> {
    ech: IntEchelon<I>,
    phi: usize,
}

impl<I: Int> CycloSpan<I> {
    /// Subspace of `Q(w)^entries`.
    pub fn new(entries: usize, phi: usize) -> Self {
        CycloSpan { ech: IntEchelon::new(entries * phi), phi }
    }

    pub fn dim(&self) -> usize {
        self.ech.rank() / self.phi
    }

    /// Adds a flattened vector; returns the reduced representative when it was new.
    pub fn insert_flat(&mut self, v: Vec<I>, ring: &ZwRing) -> Option<Option<Vec<I>>> {
        let (grew, reduced) = self.ech.insert(v)?;
        if !grew {
            return Some(None);
        }
        let mut cur = reduced.clone();
        for _ in 1..self.phi {
            cur = flat_times_omega(&cur, ring)?;
            self.ech.insert(cur.clone())?;
        }
        Some(Some(reduced))
    }

    pub fn insert(&mut self, v: &[Vec<I>], ring: &ZwRing) -> Option<bool> {
        Some(self.insert_flat(flatten(v), ring)?.is_some())
    }
}

/// Dimension of the algebra generated by `gens` (with the identity), by
/// closing the span under right multiplication by generators.
///
/// Products are explored breadth first up to length `max_len`.
pub fn algebra_dimension<I: Int>(gens: &[ZwMatrix<I>], n: usize, ring: &ZwRing, max_len: usize) -> Option<usize> {
    let phi = ring.phi;
    let full = n * n;
    let mut span = CycloSpan::<I>::new(full, phi);
    let mut queue = std::collections::VecDeque::new();
    let id = ZwMatrix::<I>::identity(n, phi);
    if let Some(r) = span.insert_flat(id.data.clone(), ring)? {
        queue.push_back((ZwMatrix { n, phi, data: r }, 0usize));
    }
    while let Some((b, depth)) = queue.pop_front() {
        if span.dim() == full {
            break;
        }
        if depth >= max_len {
            continue;
        }
        for g in gens {
            let p = b.mul(g, ring)?;
            if let Some(r) = span.insert_flat(p.data, ring)? {
                queue.push_back((ZwMatrix { n, phi, data: r }, depth + 1));
            }
        }
    }
    Some(span.dim())
}

/// `Q(w)`-rank of the stacked matrices `M - I`; a common fixed vector exists iff it is below `n`.
pub fn stacked_fixed_rank<I: Int>(gens: &[ZwMatrix<I>], n: usize, ring: &ZwRing) -> Option<usize> {
    let phi = ring.phi;
    let mut span = CycloSpan::<I>::new(n, phi);
    let id = ZwMatrix::<I>::identity(n, phi);
    for g in gens {
        let nil = g.sub(&id)?;
        for i in 0..n {
            let row: Vec<Vec<I>> = (0..n).map(|j| nil.entry(i, j).to_vec()).collect();
            span.insert(&row, ring)?;
            if span.dim() == n {
                return Some(n);
            }
        }
    }
    Some(span.dim())
}

/// Runs `f` with `i128`, falling back to `BigInt` if any operation overflowed.
pub fn with_fallback<T>(f128: impl FnOnce() -> Option<T>, fbig: impl FnOnce() -> Option<T>) -> T {
    f128().or_else(fbig).expect("arbitrary precision arithmetic cannot overflow")
}
