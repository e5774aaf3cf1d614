//! Scalar instances of the ring contract: exact rationals, integers viewed
//! inside their rationalization, and machine floats.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{RingOps, ScalarRing};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(k: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Rational(BigRational::from_integer(k))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// The nonnegative rational square root, if it exists.
    ///
    /// Numerator and denominator are reduced, so `p/q` is a square exactly
    /// when both `p` and `q` are perfect squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.0.is_negative() {
            return None;
        }
        let p = self.numer().sqrt();
        let q = self.denom().sqrt();
        if &(&p * &p) == self.numer() && &(&q * &q) == self.denom() {
            Some(Rational(BigRational::new(p, q)))
        } else {
            None
        }
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with an optional leading sign on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("not a rational literal: `{s}`"));
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_bigint(parse_int(s)?)),
            Some((p, q)) => {
                if q.starts_with(['+', '-']) {
                    return Err(bad());
                }
                Rational::new(parse_int(p)?, parse_int(q)?)
            }
        }
    }
}

impl RingOps for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn add_assign(&mut self, rhs: &Self) {
        self.0 += &rhs.0;
    }

    fn sub_assign(&mut self, rhs: &Self) {
        self.0 -= &rhs.0;
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        // Integer inputs skip the gcd normalization.
        if self.0.is_integer() && a.0.is_integer() && b.0.is_integer() {
            let (mut numer, denom) = std::mem::take(&mut self.0).into_raw();
            numer += a.0.numer() * b.0.numer();
            self.0 = BigRational::new_raw(numer, denom);
        } else {
            self.0 += &a.0 * &b.0;
        }
    }
}

impl ScalarRing for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn from_integer(k: i64) -> Self {
        Rational::from_integer(k)
    }

    fn divide_by_integer(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / BigInt::from(k)))
    }
}

/// An integer viewed inside its rationalization `Q ⊗ Z`.
///
/// Arithmetic happens in the rationals so that the recursions can divide by
/// integers freely; [`RationalizedInteger::to_integer`] demotes a result back
/// to an integer and refuses if the denominator is not 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalizedInteger(Rational);

impl RationalizedInteger {
    pub fn new(value: impl Into<BigInt>) -> Self {
        RationalizedInteger(Rational::from_bigint(value.into()))
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    /// Demotes back to an integer.
    pub fn to_integer(&self) -> Result<BigInt> {
        if self.0.is_integer() {
            Ok(self.0.numer().clone())
        } else {
            Err(Error::Consistency(format!(
                "expected an integer result, got {}",
                self.0
            )))
        }
    }
}

impl fmt::Display for RationalizedInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for RationalizedInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for RationalizedInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: Rational = s.parse()?;
        if !q.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "not an integer literal: `{s}`"
            )));
        }
        Ok(RationalizedInteger(q))
    }
}

impl RingOps for RationalizedInteger {
    fn zero() -> Self {
        RationalizedInteger(Rational::zero())
    }

    fn one() -> Self {
        RationalizedInteger(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        RationalizedInteger(self.0.add(&rhs.0))
    }

    fn sub(&self, rhs: &Self) -> Self {
        RationalizedInteger(self.0.sub(&rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        RationalizedInteger(self.0.mul(&rhs.0))
    }

    fn neg(&self) -> Self {
        RationalizedInteger(self.0.neg())
    }

    fn add_assign(&mut self, rhs: &Self) {
        self.0.add_assign(&rhs.0);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        self.0.sub_assign(&rhs.0);
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        self.0.mul_add_assign(&a.0, &b.0);
    }
}

impl ScalarRing for RationalizedInteger {
    fn from_rational(q: &Rational) -> Self {
        RationalizedInteger(q.clone())
    }

    fn divide_by_integer(&self, k: i64) -> Result<Self> {
        Ok(RationalizedInteger(self.0.divide_by_integer(k)?))
    }
}

impl RingOps for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

impl ScalarRing for f64 {
    const EXACT: bool = false;

    fn from_rational(q: &Rational) -> Self {
        q.to_f64()
    }

    fn from_integer(k: i64) -> Self {
        k as f64
    }

    fn divide_by_integer(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self / k as f64)
    }

    fn magnitude(&self) -> Option<f64> {
        Some(self.abs())
    }
}

/// `|a - b| <= tol * max(1, |a|, |b|)`: absolute near zero, relative elsewhere.
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

/// Coefficient fields that support the inverse square root needed for
/// general-frame Euler forms.
pub trait CoefficientField: ScalarRing {
    fn recip(&self) -> Option<Self>;
    /// A square root in the field, if one exists.
    fn sqrt(&self) -> Option<Self>;
    fn is_positive(&self) -> bool;
    fn to_f64(&self) -> f64;
}

impl CoefficientField for Rational {
    fn recip(&self) -> Option<Self> {
        Rational::recip(self)
    }

    fn sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }

    fn is_positive(&self) -> bool {
        !self.is_negative() && !RingOps::is_zero(self)
    }

    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
}

impl CoefficientField for f64 {
    fn recip(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }

    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }

    fn is_positive(&self) -> bool {
        *self > 0.0
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}
