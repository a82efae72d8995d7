//! Dense matrices over the exact rings of [`crate::rings`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{ExactDiv, Field, Involution, Ring};

/// A dense row-major matrix.
///
/// Ring elements carry context (variable count or cyclotomic order), so every
/// matrix keeps a `proto` element from which zeros and ones are produced. This
/// makes empty matrices well defined too.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    proto: T,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        Matrix { rows, cols, data: vec![zero.clone(); rows * cols], proto: zero }
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        Self::scalar(n, &proto.one_like())
    }

    pub fn scalar(n: usize, c: &T) -> Self {
        let mut m = Self::zeros(n, n, c);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>, proto: &T) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect(), proto: proto.zero_like() })
    }

    pub fn from_fn(rows: usize, cols: usize, proto: &T, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data, proto: proto.zero_like() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn proto(&self) -> &T {
        &self.proto
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, proto: &U, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect(), proto: proto.zero_like() }
    }

    pub fn try_map<U: Ring>(&self, proto: &U, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<U>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data, proto: proto.zero_like() })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.proto, |i, j| self.get(j, i).clone())
    }

    /// The submatrix of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, &self.proto, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Invalid(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.zip_with(rhs, T::add))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.zip_with(rhs, T::sub))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols, &self.proto);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Invalid(format!("vector length {} vs {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.proto.zero_like(), |acc, (a, b)| if a.is_zero() { acc } else { acc.add(&a.mul(b)) })
            })
            .collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(T::neg).collect(), proto: self.proto.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    /// The scalar `c` if the matrix is `c * I`.
    pub fn as_scalar(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.rows, &c)).then_some(c)
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::identity(self.rows, &self.proto);
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Entry strings in row-major nesting, for serialization.
    pub fn to_strings(&self) -> Vec<Vec<String>>
    where
        T: fmt::Display,
    {
        (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect()
    }
}

impl<T: Ring + Involution> Matrix<T> {
    /// Entrywise involution.
    pub fn involute(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(T::involute).collect(), proto: self.proto.clone() }
    }

    /// `involute(transpose(M))`.
    pub fn adjoint(&self) -> Self {
        self.transpose().involute()
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Fraction-free (Bareiss) determinant over an integral domain.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Invalid("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.proto.one_like());
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = self.proto.one_like();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return Ok(self.proto.zero_like());
                };
                a.swap_rows(k, p);
                sign_flip = !sign_flip;
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.mul(a.get(i, j)).sub(&a.get(i, k).mul(a.get(k, j)));
                    let q = num
                        .div_exact(&prev)
                        .ok_or_else(|| Error::Invariant("Bareiss division was not exact".into()))?;
                    a.set(i, j, q);
                }
                a.set(i, k, self.proto.zero_like());
            }
            prev = pivot;
        }
        let det = a.get(n - 1, n - 1).clone();
        Ok(if sign_flip { det.neg() } else { det })
    }
}

impl<T: Ring> Matrix<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Invalid("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, &self.proto);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(None);
            };
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let pinv = a.get(k, k).inv().expect("nonzero pivot");
            for j in 0..n {
                a.set(k, j, a.get(k, j).mul(&pinv));
                inv.set(k, j, inv.get(k, j).mul(&pinv));
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j).sub(&f.mul(a.get(k, j))));
                    inv.set(i, j, inv.get(i, j).sub(&f.mul(inv.get(k, j))));
                }
            }
        }
        Ok(Some(inv))
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let pinv = a.get(rank, col).inv().expect("nonzero pivot");
            for i in rank + 1..self.rows {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).mul(&pinv);
                for j in col..self.cols {
                    a.set(i, j, a.get(i, j).sub(&f.mul(a.get(rank, j))));
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// A basis of the right kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let pinv = a.get(r, col).inv().expect("nonzero pivot");
            for j in 0..self.cols {
                a.set(r, j, a.get(r, j).mul(&pinv));
            }
            for i in 0..self.rows {
                if i == r || a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).clone();
                for j in 0..self.cols {
                    a.set(i, j, a.get(i, j).sub(&f.mul(a.get(r, j))));
                }
            }
            pivots.push(col);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.proto.zero_like(); self.cols];
                v[fc] = self.proto.one_like();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = a.get(row, fc).neg();
                }
                v
            })
            .collect()
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Serialized form: nested arrays of canonical entry strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixStrings(pub Vec<Vec<String>>);

impl<T: Ring + fmt::Display> From<&Matrix<T>> for MatrixStrings {
    fn from(m: &Matrix<T>) -> Self {
        MatrixStrings(m.to_strings())
    }
}
