//! Dense square matrices over any [`RingOps`] element type.
//!
//! Entry accessors are 0-based. Operations that mirror the row/column
//! bookkeeping of Pfaffian expansions ([`SkewMatrix::remove_row_col_pair`])
//! take 1-based indices.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{RingOps, ScalarRing};

/// Output rows are computed in parallel from this size on.
const PARALLEL_MIN_N: usize = 16;

/// A row-major `n × n` matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.n.max(1)).collect();
        f.debug_struct("Matrix")
            .field("n", &self.n)
            .field("rows", &rows)
            .finish()
    }
}

impl<T> Matrix<T> {
    pub fn new(n: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "row of length {} in a {n}x{n} matrix",
                bad.len()
            )));
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }
}

impl<T: RingOps> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix::from_fn(n, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc.add_assign(self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingOps::is_zero)
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(RingOps::neg)
    }

    pub fn scalar_multiply(&self, c: &T) -> Self {
        self.map(|a| c.mul(a))
    }

    /// Adds `c` to every diagonal entry.
    pub fn add_to_diagonal(&mut self, c: &T) {
        for i in 0..self.n {
            self.data[i * self.n + i].add_assign(c);
        }
    }

    /// Standard product. Each output entry is summed over the inner index in
    /// ascending order, so results do not depend on the thread count.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = vec![T::zero(); n * n];
        let row_kernel = |(i, out_row): (usize, &mut [T])| {
            for (k, a_ik) in self.row(i).iter().enumerate() {
                if a_ik.is_zero() {
                    continue;
                }
                for (acc, b_kj) in out_row.iter_mut().zip(other.row(k)) {
                    acc.mul_add_assign(a_ik, b_kj);
                }
            }
        };
        if n >= PARALLEL_MIN_N {
            out.par_chunks_mut(n).enumerate().for_each(row_kernel);
        } else if n > 0 {
            out.chunks_mut(n).enumerate().for_each(row_kernel);
        }
        Matrix { n, data: out }
    }
}

impl<T: ScalarRing> Matrix<T> {
    /// Maximum entry magnitude for approximate rings.
    pub fn max_abs(&self) -> Option<f64> {
        crate::ring::Residual::of(self.data.iter()).max_abs
    }
}

impl Matrix<f64> {
    /// Rejects NaN and infinite entries.
    pub fn check_finite(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j).is_finite() {
                    return Err(Error::NonFinite {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Entrywise comparison with an explicit tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.n == other.n
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| crate::rational::approx_eq(*a, *b, tol))
    }
}

/// A matrix with `a_ij = -a_ji` and zero diagonal.
#[derive(Clone, PartialEq)]
pub struct SkewMatrix<T>(Matrix<T>);

impl<T: fmt::Debug> fmt::Debug for SkewMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("SkewMatrix").field(&self.0).finish()
    }
}

impl<T> SkewMatrix<T> {
    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        self.0.get(i, j)
    }
}

impl<T: RingOps> SkewMatrix<T> {
    /// Validates exact skew-symmetry.
    pub fn new(m: Matrix<T>) -> Result<Self> {
        for i in 0..m.n {
            if !m.get(i, i).is_zero() {
                return Err(Error::NotSkew {
                    row: i + 1,
                    col: i + 1,
                });
            }
            for j in i + 1..m.n {
                if !m.get(i, j).add(m.get(j, i)).is_zero() {
                    return Err(Error::NotSkew {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    /// Builds a skew matrix from its strictly upper triangle, given as
    /// `f(i, j)` for `i < j` (0-based).
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                m.set(j, i, v.neg());
                m.set(i, j, v);
            }
        }
        SkewMatrix(m)
    }

    /// `A⟨i,j⟩`: removes rows and columns `i` and `j` (1-based).
    pub fn remove_row_col_pair(&self, i: usize, j: usize) -> Result<Self> {
        let n = self.n();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidArgument(format!(
                "need distinct indices in 1..={n}, got ({i}, {j})"
            )));
        }
        let keep: Vec<usize> = (0..n).filter(|&k| k != i - 1 && k != j - 1).collect();
        Ok(SkewMatrix(Matrix::from_fn(n - 2, |r, c| {
            self.0.get(keep[r], keep[c]).clone()
        })))
    }

    /// Swaps rows `i`, `k` and the corresponding columns (0-based).
    pub fn swap_indices(&self, i: usize, k: usize) -> Self {
        let perm = |x: usize| {
            if x == i {
                k
            } else if x == k {
                i
            } else {
                x
            }
        };
        SkewMatrix(Matrix::from_fn(self.n(), |r, c| {
            self.0.get(perm(r), perm(c)).clone()
        }))
    }

    /// `Bᵀ A B`, which is again skew.
    pub fn congruence(&self, b: &Matrix<T>) -> Result<Self> {
        let m = b.transpose().mat_mul(&self.0)?.mat_mul(b)?;
        Ok(SkewMatrix(m))
    }
}

impl<T: ScalarRing> SkewMatrix<T> {
    /// `(A - Aᵀ) / 2`. Never applied implicitly.
    pub fn skew_symmetrize(m: &Matrix<T>) -> Result<Self> {
        let diff = m.sub(&m.transpose())?;
        Ok(SkewMatrix(diff.try_map(|x| x.divide_by_integer(2))?))
    }
}

impl SkewMatrix<f64> {
    /// Validates skew-symmetry within `tol`, then makes it exact: the
    /// diagonal becomes zero and the lower triangle the negated upper one.
    pub fn from_float(mut m: Matrix<f64>, tol: f64) -> Result<Self> {
        m.check_finite()?;
        for i in 0..m.n {
            if m.get(i, i).abs() > tol {
                return Err(Error::NotSkew {
                    row: i + 1,
                    col: i + 1,
                });
            }
            m.set(i, i, 0.0);
            for j in i + 1..m.n {
                if (m.get(i, j) + m.get(j, i)).abs() > tol {
                    return Err(Error::NotSkew {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                let upper = *m.get(i, j);
                m.set(j, i, -upper);
            }
        }
        Ok(SkewMatrix(m))
    }
}

/// The auxiliary skew matrix `J` with `J² = -I` used by the Pfaffian
/// recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JForm {
    /// Block diagonal with `[[0, 1], [-1, 0]]` blocks.
    #[default]
    Standard,
    /// `[[0, I], [-I, 0]]`.
    Alternative,
}

impl JForm {
    pub fn name(self) -> &'static str {
        match self {
            JForm::Standard => "standard",
            JForm::Alternative => "alternative",
        }
    }

    fn check_even(n: usize) -> Result<()> {
        if n % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "J needs an even size, got {n}"
            )));
        }
        Ok(())
    }

    /// For row `r` of `J`, the column holding its single nonzero entry and
    /// whether that entry is `+1`.
    fn nonzero_in_row(self, n: usize, r: usize) -> (usize, bool) {
        match self {
            JForm::Standard => {
                if r % 2 == 0 {
                    (r + 1, true)
                } else {
                    (r - 1, false)
                }
            }
            JForm::Alternative => {
                let m = n / 2;
                if r < m {
                    (r + m, true)
                } else {
                    (r - m, false)
                }
            }
        }
    }

    /// The 1-based pairs `(i, j)`, `i < j`, where `J` has `+1` entries.
    pub fn positive_pairs(self, n: usize) -> Result<Vec<(usize, usize)>> {
        Self::check_even(n)?;
        Ok((0..n)
            .filter_map(|r| {
                let (c, positive) = self.nonzero_in_row(n, r);
                positive.then_some((r + 1, c + 1))
            })
            .collect())
    }

    pub fn matrix<T: RingOps>(self, n: usize) -> Result<SkewMatrix<T>> {
        Self::check_even(n)?;
        let mut m = Matrix::zeros(n);
        for r in 0..n {
            let (c, positive) = self.nonzero_in_row(n, r);
            m.set(r, c, if positive { T::one() } else { T::one().neg() });
        }
        Ok(SkewMatrix(m))
    }

    /// `J · m` by moving rows and flipping signs; no ring multiplications.
    pub fn left_mul<T: RingOps>(self, m: &Matrix<T>) -> Result<Matrix<T>> {
        let n = m.n();
        Self::check_even(n)?;
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            let (c, positive) = self.nonzero_in_row(n, r);
            if positive {
                data.extend_from_slice(m.row(c));
            } else {
                data.extend(m.row(c).iter().map(RingOps::neg));
            }
        }
        Ok(Matrix { n, data })
    }

    /// `m -= c · J`, touching only the nonzero positions of `J`.
    pub(crate) fn sub_scaled<T: RingOps>(self, m: &mut Matrix<T>, c: &T) {
        let n = m.n();
        for r in 0..n {
            let (col, positive) = self.nonzero_in_row(n, r);
            let entry = &mut m.data[r * n + col];
            if positive {
                entry.sub_assign(c);
            } else {
                entry.add_assign(c);
            }
        }
    }
}
