//! The algebraic contract every algorithm in this crate is generic over.
//!
//! [`RingOps`] is the bare (not necessarily commutative) ring interface.
//! [`ScalarRing`] adds what the Faddeev-LeVerrier recursions need on top of
//! it: commutativity, an embedding of the rationals, and exact division by
//! nonzero integers. Nothing here ever divides by a ring element.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Ring operations without any commutativity promise.
///
/// All operations are pure; elements are immutable values that can be sent
/// and shared between threads.
pub trait RingOps: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }

    /// `self += a * b`.
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        self.add_assign(&a.mul(b));
    }
}

/// A commutative Q-algebra element.
///
/// Implementors promise that multiplication commutes and that
/// `divide_by_integer(k)` followed by multiplication with `from_integer(k)`
/// is the identity.
pub trait ScalarRing: RingOps {
    /// Whether `==` is mathematically exact for this ring. Float rings set
    /// this to `false`; consistency checks then report instead of failing.
    const EXACT: bool = true;

    /// The canonical image of a rational number.
    fn from_rational(q: &Rational) -> Self;

    fn from_integer(k: i64) -> Self {
        Self::from_rational(&Rational::from_integer(k))
    }

    /// Returns `y` with `k * y == self`.
    fn divide_by_integer(&self, k: i64) -> Result<Self>;

    /// Absolute size of the element for approximate rings, `None` otherwise.
    fn magnitude(&self) -> Option<f64> {
        None
    }
}

/// A ring law that [`ring_axiom_check`] verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    AdditiveIdentity,
    AdditiveInverse,
    MultiplicativeIdentity,
    AddCommutative,
    AddAssociative,
    MulCommutative,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub law: Law,
    /// Indices into the sample list of the offending tuple.
    pub samples: Vec<usize>,
}

/// Outcome of [`ring_axiom_check`].
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub triples_checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_laws(&self) -> Vec<Law> {
        let mut laws: Vec<Law> = Vec::new();
        for f in &self.failures {
            if !laws.contains(&f.law) {
                laws.push(f.law);
            }
        }
        laws
    }
}

/// Checks the commutative-ring laws on every triple of `samples` using exact
/// equality.
pub fn ring_axiom_check<T: RingOps>(samples: &[T]) -> Result<AxiomReport> {
    ring_axiom_check_with(samples, |a, b| a == b)
}

/// Like [`ring_axiom_check`] but with a caller-supplied equality, e.g. a
/// tolerance comparison for floats.
pub fn ring_axiom_check_with<T, F>(samples: &[T], eq: F) -> Result<AxiomReport>
where
    T: RingOps,
    F: Fn(&T, &T) -> bool,
{
    if samples.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "axiom check needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    let mut report = AxiomReport::default();
    let zero = T::zero();
    let one = T::one();
    let fail = |report: &mut AxiomReport, law, idx: &[usize]| {
        report.failures.push(AxiomFailure {
            law,
            samples: idx.to_vec(),
        })
    };

    for (i, a) in samples.iter().enumerate() {
        if !eq(&a.add(&zero), a) {
            fail(&mut report, Law::AdditiveIdentity, &[i]);
        }
        if !eq(&a.add(&a.neg()), &zero) || !eq(&a.sub(a), &zero) {
            fail(&mut report, Law::AdditiveInverse, &[i]);
        }
        if !eq(&a.mul(&one), a) || !eq(&one.mul(a), a) {
            fail(&mut report, Law::MultiplicativeIdentity, &[i]);
        }
    }

    for (i, a) in samples.iter().enumerate() {
        for (j, b) in samples.iter().enumerate() {
            if !eq(&a.add(b), &b.add(a)) {
                fail(&mut report, Law::AddCommutative, &[i, j]);
            }
            if !eq(&a.mul(b), &b.mul(a)) {
                fail(&mut report, Law::MulCommutative, &[i, j]);
            }
            for (k, c) in samples.iter().enumerate() {
                report.triples_checked += 1;
                if !eq(&a.add(b).add(c), &a.add(&b.add(c))) {
                    fail(&mut report, Law::AddAssociative, &[i, j, k]);
                }
                if !eq(&a.mul(b).mul(c), &a.mul(&b.mul(c))) {
                    fail(&mut report, Law::MulAssociative, &[i, j, k]);
                }
                if !eq(&a.mul(&b.add(c)), &a.mul(b).add(&a.mul(c))) {
                    fail(&mut report, Law::LeftDistributive, &[i, j, k]);
                }
                if !eq(&a.add(b).mul(c), &a.mul(c).add(&b.mul(c))) {
                    fail(&mut report, Law::RightDistributive, &[i, j, k]);
                }
            }
        }
    }
    Ok(report)
}

/// Residual of a consistency check such as `N_{n+1} = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    /// Every entry compared equal to zero.
    pub exact_zero: bool,
    /// Largest entry magnitude, for approximate rings.
    pub max_abs: Option<f64>,
}

impl Residual {
    pub fn of<'a, T: ScalarRing + 'a>(entries: impl IntoIterator<Item = &'a T>) -> Self {
        let mut exact_zero = true;
        let mut max_abs: Option<f64> = None;
        for e in entries {
            if !e.is_zero() {
                exact_zero = false;
            }
            if let Some(m) = e.magnitude() {
                max_abs = Some(max_abs.map_or(m, |cur: f64| cur.max(m)));
            }
        }
        Residual {
            exact_zero,
            max_abs,
        }
    }

    /// Turns a nonzero residual into an error for exact rings.
    pub(crate) fn enforce<T: ScalarRing>(self, what: &str) -> Result<Self> {
        if T::EXACT && !self.exact_zero {
            return Err(Error::Consistency(format!("{what} is not zero")));
        }
        Ok(self)
    }
}
