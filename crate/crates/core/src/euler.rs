//! Euler forms of curvature 2-form matrices.
//!
//! For an orthonormal frame the Euler form is `pf(Ω)`. For a general frame
//! with Gram matrix `G` it is `det(G)^{-1/2} · pf(Ω)`. Both Pfaffians run
//! through [`pfaffian_fl`] over the even exterior algebra.

use std::f64::consts::PI;

use crate::charpoly::determinant;
use crate::error::{Error, Result};
use crate::exterior::{EvenForm, FormElement};
use crate::matrix::{JForm, Matrix, SkewMatrix};
use crate::pfaffian::pfaffian_fl;
use crate::rational::{CoefficientField, Rational};
use crate::ring::RingOps;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Orthonormal,
    General,
}

/// A curvature 2-form matrix `Ω` with the Gram matrix of its frame.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureInput<S: CoefficientField> {
    omega: SkewMatrix<EvenForm<S>>,
    /// `None` for orthonormal frames.
    gram: Option<Matrix<S>>,
}

impl<S: CoefficientField> CurvatureInput<S> {
    /// Validates `Ω` (skew, even size, entries of degree 0 or 2 in
    /// dimension `n`) and the Gram matrix (symmetric, positive diagonal).
    pub fn new(omega: Matrix<EvenForm<S>>, gram: Option<Matrix<S>>) -> Result<Self> {
        let n = omega.n();
        if n % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "curvature matrices need even size, got {n}"
            )));
        }
        for (idx, entry) in omega.entries().iter().enumerate() {
            let form = entry.form();
            if form.dimension() != 0 && form.dimension() != n {
                return Err(Error::DimensionMismatch {
                    left: form.dimension(),
                    right: n,
                });
            }
            if form.degrees().iter().any(|&d| d != 0 && d != 2) {
                return Err(Error::InvalidArgument(format!(
                    "curvature entry ({}, {}) is not a 2-form",
                    idx / n + 1,
                    idx % n + 1
                )));
            }
        }
        let omega = SkewMatrix::new(omega)?;
        if let Some(g) = &gram {
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    left: g.n(),
                    right: n,
                });
            }
            for i in 0..n {
                if !g.get(i, i).is_positive() {
                    return Err(Error::InvalidArgument(format!(
                        "gram diagonal entry {} is not positive",
                        i + 1
                    )));
                }
                for j in 0..i {
                    if g.get(i, j) != g.get(j, i) {
                        return Err(Error::InvalidArgument(format!(
                            "gram matrix is not symmetric at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(CurvatureInput { omega, gram })
    }

    pub fn n(&self) -> usize {
        self.omega.n()
    }

    pub fn omega(&self) -> &SkewMatrix<EvenForm<S>> {
        &self.omega
    }

    pub fn gram(&self) -> Option<&Matrix<S>> {
        self.gram.as_ref()
    }

    pub fn frame_kind(&self) -> FrameKind {
        if self.gram.is_some() {
            FrameKind::General
        } else {
            FrameKind::Orthonormal
        }
    }

    /// The same curvature in the frame `s = e·B`: `Ω ↦ BᵀΩB`, `G ↦ BᵀGB`.
    pub fn change_frame(&self, b: &Matrix<S>) -> Result<Self> {
        let n = self.n();
        let lifted = b.try_map(|c| scalar_form(n, c.clone()))?;
        let omega = self.omega.congruence(&lifted)?;
        let g = self.gram.clone().unwrap_or_else(|| Matrix::identity(n));
        let gram = b.transpose().mat_mul(&g)?.mat_mul(b)?;
        Ok(CurvatureInput {
            omega,
            gram: Some(gram),
        })
    }
}

fn scalar_form<S: CoefficientField>(n: usize, c: S) -> Result<EvenForm<S>> {
    EvenForm::new(FormElement::scalar(n, c)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EulerFormResult<S: CoefficientField> {
    /// Homogeneous of degree `n`, or zero.
    pub form: FormElement<S>,
    /// Coefficient of `e_1 ∧ … ∧ e_n`.
    pub top_coefficient: S,
    pub gauss_bonnet_integral: Option<f64>,
}

impl<S: CoefficientField> EulerFormResult<S> {
    /// Records `top_coefficient × volume` as the Gauss-Bonnet integral.
    pub fn with_volume(mut self, volume: f64) -> Self {
        self.gauss_bonnet_integral = Some(self.top_coefficient.to_f64() * volume);
        self
    }
}

pub fn euler_form<S: CoefficientField>(input: &CurvatureInput<S>) -> Result<EulerFormResult<S>> {
    let n = input.n();
    let pf = pfaffian_fl(&input.omega, JForm::Standard)?
        .value
        .into_form()
        .with_dimension(n)?;
    let form = match &input.gram {
        None => pf,
        Some(g) => {
            let det = determinant(g)?;
            let root = det
                .sqrt()
                .ok_or_else(|| Error::NoSquareRoot(format!("{det:?}")))?;
            let inv = root
                .recip()
                .ok_or_else(|| Error::NotInvertible(format!("det(G) = {det:?}")))?;
            pf.scale(&inv)
        }
    };
    if !form.is_zero() && form.homogeneous_degree() != Some(n as u32) {
        return Err(Error::Consistency(format!(
            "Euler form is not homogeneous of degree {n}"
        )));
    }
    let top_coefficient = form.top_coefficient();
    Ok(EulerFormResult {
        form,
        top_coefficient,
        gauss_bonnet_integral: None,
    })
}

/// A built-in constant-curvature example with its volume and Euler
/// characteristic.
#[derive(Debug, Clone, PartialEq)]
pub struct Example {
    pub name: &'static str,
    pub input: CurvatureInput<Rational>,
    pub volume: f64,
    pub euler_characteristic: i64,
}

/// Unit-curvature `Ω` with `Ω_ij = e_i ∧ e_j` in an orthonormal frame.
pub fn unit_sphere_curvature(n: usize) -> Result<CurvatureInput<Rational>> {
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let f = match i.cmp(&j) {
                std::cmp::Ordering::Less => FormElement::blade(n, &[i, j], Rational::one())?,
                std::cmp::Ordering::Greater => {
                    FormElement::blade(n, &[j, i], Rational::one())?.neg()
                }
                std::cmp::Ordering::Equal => FormElement::zero_in(n)?,
            };
            entries.push(EvenForm::new(f)?);
        }
    }
    CurvatureInput::new(Matrix::new(n, entries)?, None)
}

/// Looks up `s2`, `s4` or `flat2`.
pub fn builtin_example(name: &str) -> Result<Example> {
    match name {
        "s2" => Ok(Example {
            name: "s2",
            input: unit_sphere_curvature(2)?,
            volume: 4.0 * PI,
            euler_characteristic: 2,
        }),
        "s4" => Ok(Example {
            name: "s4",
            input: unit_sphere_curvature(4)?,
            volume: 8.0 * PI * PI / 3.0,
            euler_characteristic: 2,
        }),
        // The unit square torus.
        "flat2" => Ok(Example {
            name: "flat2",
            input: CurvatureInput::new(Matrix::from_fn(2, |_, _| EvenForm::zero()), None)?,
            volume: 1.0,
            euler_characteristic: 0,
        }),
        _ => Err(Error::InvalidArgument(format!(
            "unknown example `{name}` (expected s2, s4 or flat2)"
        ))),
    }
}

/// `∫ χ` against `(2π)^m · χ(M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussBonnetReport {
    pub n: usize,
    pub top_coefficient: Rational,
    pub integral: f64,
    pub expected: f64,
    /// `|integral - expected| / |expected|`, or the absolute difference
    /// when `expected` is zero.
    pub relative_difference: f64,
}

impl GaussBonnetReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.relative_difference <= tol
    }
}

pub fn gauss_bonnet_check(example: &Example) -> Result<GaussBonnetReport> {
    let result = euler_form(&example.input)?.with_volume(example.volume);
    let integral = result.gauss_bonnet_integral.unwrap_or_default();
    Ok(report_from_integral(
        example.input.n(),
        result.top_coefficient,
        integral,
        example.euler_characteristic,
    ))
}

/// Builds a report from an already computed top coefficient.
pub fn gauss_bonnet_report(
    n: usize,
    top_coefficient: Rational,
    volume: f64,
    euler_characteristic: i64,
) -> Result<GaussBonnetReport> {
    let integral = top_coefficient.to_f64() * volume;
    Ok(report_from_integral(
        n,
        top_coefficient,
        integral,
        euler_characteristic,
    ))
}

fn report_from_integral(
    n: usize,
    top_coefficient: Rational,
    integral: f64,
    euler_characteristic: i64,
) -> GaussBonnetReport {
    let expected = (2.0 * PI).powi((n / 2) as i32) * euler_characteristic as f64;
    let diff = (integral - expected).abs();
    let relative_difference = if expected == 0.0 {
        diff
    } else {
        diff / expected.abs()
    };
    GaussBonnetReport {
        n,
        top_coefficient,
        integral,
        expected,
        relative_difference,
    }
}
