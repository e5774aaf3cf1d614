//! Exterior algebra `Λ(e_1, …, e_n)` over a scalar coefficient ring.
//!
//! Basis blades are bitmasks over the covectors (bit `i - 1` is `e_i`), so
//! `n ≤ 64`. The full algebra is only a ring in the non-commutative sense;
//! [`EvenForm`] restricts to even degrees, which is commutative and is what
//! may be placed in matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{RingOps, ScalarRing};

pub const MAX_DIMENSION: usize = 64;

/// Sign of `e_A ∧ e_B` relative to the sorted blade, for disjoint `a`, `b`.
fn blade_sign(a: u64, b: u64) -> bool {
    // Count pairs (i in a, j in b) with i > j: each needs one transposition.
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (a >> j >> 1).count_ones();
    }
    swaps % 2 == 1
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Canonical term order: by degree, then lexicographically by index tuple.
fn canonical_key(mask: u64) -> (u32, Vec<usize>) {
    (mask.count_ones(), mask_indices(mask))
}

/// An element of the exterior algebra on `dimension` covectors.
///
/// Dimension 0 marks a dimension-free scalar (as produced by `zero()` and
/// `one()`); it combines with elements of any dimension.
#[derive(Clone)]
pub struct FormElement<S> {
    dimension: usize,
    terms: BTreeMap<u64, S>,
}

impl<S: ScalarRing> FormElement<S> {
    pub fn zero_in(dimension: usize) -> Result<Self> {
        check_dimension(dimension)?;
        Ok(FormElement {
            dimension,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(dimension: usize, c: S) -> Result<Self> {
        let mut f = Self::zero_in(dimension)?;
        f.add_term(0, c);
        Ok(f)
    }

    /// `c · e_{i_1} ∧ … ∧ e_{i_k}` with strictly increasing 1-based indices.
    pub fn blade(dimension: usize, indices: &[usize], c: S) -> Result<Self> {
        let mut f = Self::zero_in(dimension)?;
        let mut mask = 0u64;
        let mut prev = 0;
        for &i in indices {
            if i <= prev || i > dimension {
                return Err(Error::InvalidArgument(format!(
                    "blade indices must be strictly increasing in 1..={dimension}, got {indices:?}"
                )));
            }
            prev = i;
            mask |= 1 << (i - 1);
        }
        f.add_term(mask, c);
        Ok(f)
    }

    /// The covector `e_i`.
    pub fn covector(dimension: usize, i: usize) -> Result<Self> {
        Self::blade(dimension, &[i], S::one())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn joint_dimension(&self, other: &Self) -> Result<usize> {
        match (self.dimension, other.dimension) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::DimensionMismatch { left: a, right: b }),
        }
    }

    /// Terms in canonical order as (1-based index tuple, coefficient).
    pub fn terms(&self) -> Vec<(Vec<usize>, &S)> {
        let mut out: Vec<(u64, &S)> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        out.sort_by_key(|(m, _)| canonical_key(*m));
        out.into_iter().map(|(m, c)| (mask_indices(m), c)).collect()
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| m.count_ones()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Some(k)` if every term has degree `k` (zero counts as homogeneous of any degree, reported as 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [] => Some(0),
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// Wedge product; fails if the dimensions differ.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        let dimension = self.joint_dimension(other)?;
        let mut out = FormElement {
            dimension,
            terms: BTreeMap::new(),
        };
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let prod = ca.mul(cb);
                let c = if blade_sign(a, b) { prod.neg() } else { prod };
                out.add_term(a | b, c);
            }
        }
        Ok(out)
    }

    /// Keeps only the degree-`k` part.
    pub fn grade_project(&self, k: usize) -> Self {
        FormElement {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the volume form `e_1 ∧ … ∧ e_n`.
    pub fn top_coefficient(&self) -> S {
        let top = if self.dimension == 64 {
            u64::MAX
        } else {
            (1u64 << self.dimension) - 1
        };
        self.terms.get(&top).cloned().unwrap_or_else(S::zero)
    }

    pub fn coefficient(&self, indices: &[usize]) -> S {
        let mask = indices.iter().fold(0u64, |m, i| m | 1 << (i - 1));
        self.terms.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = FormElement {
            dimension: self.dimension,
            terms: BTreeMap::new(),
        };
        for (m, k) in &self.terms {
            out.add_term(*m, k.mul(c));
        }
        out
    }

    /// Re-labels a dimension-free scalar as living in `dimension`.
    pub fn with_dimension(mut self, dimension: usize) -> Result<Self> {
        check_dimension(dimension)?;
        if self.dimension != 0 && self.dimension != dimension {
            return Err(Error::DimensionMismatch {
                left: self.dimension,
                right: dimension,
            });
        }
        if let Some(max) = self
            .terms
            .keys()
            .map(|m| 64 - m.leading_zeros() as usize)
            .max()
        {
            if max > dimension {
                return Err(Error::DimensionMismatch {
                    left: max,
                    right: dimension,
                });
            }
        }
        self.dimension = dimension;
        Ok(self)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let dimension = self
            .joint_dimension(other)
            .unwrap_or_else(|e| panic!("form arithmetic: {e}"));
        let mut out = FormElement {
            dimension,
            terms: self.terms.clone(),
        };
        for (m, c) in &other.terms {
            out.add_term(*m, if subtract { c.neg() } else { c.clone() });
        }
        out
    }
}

impl<S: ScalarRing + std::str::FromStr<Err = Error>> FormElement<S> {
    /// Parses `c * e_i^e_j^… + …`; a bare coefficient is a scalar term and a
    /// bare blade has coefficient 1.
    pub fn parse(dimension: usize, text: &str) -> Result<Self> {
        let mut f = Self::zero_in(dimension)?;
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidArgument("empty form literal".into()));
        }
        for term in text.split(" + ") {
            let term = term.trim();
            let (coeff, blade) = match term.split_once('*') {
                Some((c, b)) => (c.trim().parse::<S>()?, b.trim()),
                None if term.starts_with("e_") || term.starts_with("-e_") => {
                    let neg = term.starts_with('-');
                    let c = if neg { S::one().neg() } else { S::one() };
                    (c, term.trim_start_matches('-'))
                }
                None => (term.parse::<S>()?, ""),
            };
            let mut indices = Vec::new();
            if !blade.is_empty() {
                for factor in blade.split('^') {
                    let idx = factor
                        .trim()
                        .strip_prefix("e_")
                        .and_then(|i| i.parse::<usize>().ok())
                        .ok_or_else(|| {
                            Error::InvalidArgument(format!("bad basis covector `{factor}`"))
                        })?;
                    indices.push(idx);
                }
            }
            f = f.combine(&Self::blade(dimension, &indices, coeff)?, false);
        }
        Ok(f)
    }
}

fn check_dimension(dimension: usize) -> Result<()> {
    if dimension > MAX_DIMENSION {
        return Err(Error::InvalidArgument(format!(
            "exterior algebra dimension {dimension} exceeds {MAX_DIMENSION}"
        )));
    }
    Ok(())
}

/// Equality of terms; the dimension tag is not compared.
impl<S: PartialEq> PartialEq for FormElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<S: ScalarRing + fmt::Display> fmt::Display for FormElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (indices, c)) in terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if indices.is_empty() {
                write!(f, "{c}")?;
            } else {
                let blade: Vec<String> = indices.iter().map(|i| format!("e_{i}")).collect();
                write!(f, "{c} * {}", blade.join("^"))?;
            }
        }
        Ok(())
    }
}

impl<S: ScalarRing + fmt::Debug> fmt::Debug for FormElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(i, c)| format!("{c:?}·e{i:?}"))
            .collect();
        write!(f, "Form[{}]({})", self.dimension, terms.join(" + "))
    }
}

/// The full exterior algebra as a (non-commutative) ring. Arithmetic between
/// elements of different nonzero dimension panics; use [`FormElement::wedge`]
/// for a checked product.
impl<S: ScalarRing> RingOps for FormElement<S> {
    fn zero() -> Self {
        FormElement {
            dimension: 0,
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        let mut f = Self::zero();
        f.add_term(0, S::one());
        f
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.wedge(rhs)
            .unwrap_or_else(|e| panic!("form arithmetic: {e}"))
    }

    fn neg(&self) -> Self {
        FormElement {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
}

/// An even-degree form: an element of the commutative algebra
/// `⊕_k Λ^{2k}`, admissible as a matrix entry.
#[derive(Clone, PartialEq)]
pub struct EvenForm<S>(FormElement<S>);

impl<S: ScalarRing> EvenForm<S> {
    pub fn new(form: FormElement<S>) -> Result<Self> {
        if !form.is_even() {
            return Err(Error::OddDegree(format!(
                "degrees {:?} present",
                form.degrees()
            )));
        }
        Ok(EvenForm(form))
    }

    pub fn form(&self) -> &FormElement<S> {
        &self.0
    }

    pub fn into_form(self) -> FormElement<S> {
        self.0
    }
}

impl<S: ScalarRing> TryFrom<FormElement<S>> for EvenForm<S> {
    type Error = Error;

    fn try_from(form: FormElement<S>) -> Result<Self> {
        EvenForm::new(form)
    }
}

impl<S: ScalarRing + fmt::Display> fmt::Display for EvenForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<S: ScalarRing + fmt::Debug> fmt::Debug for EvenForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl<S: ScalarRing> RingOps for EvenForm<S> {
    fn zero() -> Self {
        EvenForm(FormElement::zero())
    }

    fn one() -> Self {
        EvenForm(FormElement::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        EvenForm(self.0.add(&rhs.0))
    }

    fn sub(&self, rhs: &Self) -> Self {
        EvenForm(self.0.sub(&rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        EvenForm(self.0.mul(&rhs.0))
    }

    fn neg(&self) -> Self {
        EvenForm(self.0.neg())
    }
}

impl<S: ScalarRing> ScalarRing for EvenForm<S> {
    const EXACT: bool = S::EXACT;

    fn from_rational(q: &Rational) -> Self {
        let mut f = FormElement::zero();
        f.add_term(0, S::from_rational(q));
        EvenForm(f)
    }

    fn divide_by_integer(&self, k: i64) -> Result<Self> {
        let mut out = FormElement::zero_in(self.0.dimension)?;
        for (m, c) in &self.0.terms {
            out.add_term(*m, c.divide_by_integer(k)?);
        }
        Ok(EvenForm(out))
    }

    fn magnitude(&self) -> Option<f64> {
        let mut max: Option<f64> = None;
        for c in self.0.terms.values() {
            if let Some(m) = c.magnitude() {
                max = Some(max.map_or(m, |x: f64| x.max(m)));
            }
        }
        max.or_else(|| S::magnitude(&S::zero()))
    }
}
