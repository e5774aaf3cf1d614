//! Per-ring glue between parsed files and the generic algorithms.

use pfaff_core::io::AnyMatrix;
use pfaff_core::{
    EvenForm, Matrix, Poly, Rational, RationalizedInteger, Result, ScalarRing, SkewMatrix,
};

pub trait CliScalar: ScalarRing {
    /// Canonical text of a single result value.
    fn render(&self) -> Result<String>;

    /// Wraps a result matrix so it can be written in the file format.
    fn wrap(m: Matrix<Self>, exterior_dim: usize) -> Result<AnyMatrix>;

    /// Admits `m` as skew-symmetric, or skew-symmetrizes it on request.
    fn admit_skew(m: &Matrix<Self>, symmetrize: bool, _tol: f64) -> Result<SkewMatrix<Self>> {
        if symmetrize {
            SkewMatrix::skew_symmetrize(m)
        } else {
            SkewMatrix::new(m.clone())
        }
    }
}

impl CliScalar for Rational {
    fn render(&self) -> Result<String> {
        Ok(self.to_string())
    }

    fn wrap(m: Matrix<Self>, _: usize) -> Result<AnyMatrix> {
        Ok(AnyMatrix::Rational(m))
    }
}

impl CliScalar for RationalizedInteger {
    fn render(&self) -> Result<String> {
        Ok(self.to_integer()?.to_string())
    }

    fn wrap(m: Matrix<Self>, _: usize) -> Result<AnyMatrix> {
        for x in m.entries() {
            x.to_integer()?;
        }
        Ok(AnyMatrix::Integer(m))
    }
}

impl CliScalar for f64 {
    fn render(&self) -> Result<String> {
        Ok(self.to_string())
    }

    fn wrap(m: Matrix<Self>, _: usize) -> Result<AnyMatrix> {
        Ok(AnyMatrix::Float(m))
    }

    fn admit_skew(m: &Matrix<Self>, symmetrize: bool, tol: f64) -> Result<SkewMatrix<Self>> {
        if symmetrize {
            SkewMatrix::skew_symmetrize(m)
        } else {
            SkewMatrix::from_float(m.clone(), tol)
        }
    }
}

impl CliScalar for Poly {
    fn render(&self) -> Result<String> {
        Ok(self.to_string())
    }

    fn wrap(m: Matrix<Self>, _: usize) -> Result<AnyMatrix> {
        Ok(AnyMatrix::Polynomial(m))
    }
}

impl CliScalar for EvenForm<Rational> {
    fn render(&self) -> Result<String> {
        Ok(self.to_string())
    }

    fn wrap(m: Matrix<Self>, exterior_dim: usize) -> Result<AnyMatrix> {
        Ok(AnyMatrix::Exterior(exterior_dim, m))
    }
}
