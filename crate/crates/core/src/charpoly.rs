//! Faddeev-LeVerrier recursion: characteristic polynomial, determinant and
//! adjugate without dividing by matrix entries.
//!
//! With `χ(t) = det(tI - A) = Σ c_{n-j} t^j`:
//!
//! ```text
//! N_1 = I
//! c_k = -tr(A N_k) / k
//! N_{k+1} = A N_k + c_k I          (k < n)
//! ```
//!
//! After the loop `N = N_n = (-1)^{n+1} adj(A)`, and `A N_n + c_n I` is the
//! residual `N_{n+1}`, which vanishes. The residual costs nothing extra: it
//! reuses the last product `A N_n`.

use crate::error::Result;
use crate::matrix::Matrix;
use crate::ring::{Residual, ScalarRing};

/// Output of [`char_poly`].
#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyResult<T> {
    /// `[c_0, c_1, …, c_n]` with `c_0 = 1`.
    pub coefficients: Vec<T>,
    pub adjugate: Matrix<T>,
    /// `N_{n+1}`, zero for a correct ring implementation.
    pub residual: Matrix<T>,
    pub residual_report: Residual,
}

impl<T: ScalarRing> CharPolyResult<T> {
    pub fn determinant(&self) -> T {
        let n = self.coefficients.len() - 1;
        let c_n = &self.coefficients[n];
        if n % 2 == 0 {
            c_n.clone()
        } else {
            c_n.neg()
        }
    }
}

/// Runs the recursion. Over exact rings a nonzero residual is reported as an
/// [`Error::Consistency`](crate::Error::Consistency); over floats it is only
/// recorded in `residual_report`.
pub fn char_poly<T: ScalarRing>(a: &Matrix<T>) -> Result<CharPolyResult<T>> {
    let n = a.n();
    if n == 0 {
        return Ok(CharPolyResult {
            coefficients: vec![T::one()],
            adjugate: Matrix::zeros(0),
            residual: Matrix::zeros(0),
            residual_report: Residual {
                exact_zero: true,
                max_abs: None,
            },
        });
    }

    let mut coefficients = Vec::with_capacity(n + 1);
    coefficients.push(T::one());
    let mut big_n = Matrix::identity(n);
    let mut residual = Matrix::zeros(n);
    for k in 1..=n {
        let mut m = a.mul_unchecked(&big_n);
        let c = m.trace().neg().divide_by_integer(k as i64)?;
        m.add_to_diagonal(&c);
        if k < n {
            big_n = m;
        } else {
            residual = m;
        }
        coefficients.push(c);
    }

    let residual_report = Residual::of(residual.entries()).enforce::<T>("N_{n+1}")?;
    let adjugate = if n % 2 == 1 { big_n } else { big_n.neg() };
    Ok(CharPolyResult {
        coefficients,
        adjugate,
        residual,
        residual_report,
    })
}

pub fn determinant<T: ScalarRing>(a: &Matrix<T>) -> Result<T> {
    Ok(char_poly(a)?.determinant())
}

pub fn adjugate<T: ScalarRing>(a: &Matrix<T>) -> Result<Matrix<T>> {
    Ok(char_poly(a)?.adjugate)
}
