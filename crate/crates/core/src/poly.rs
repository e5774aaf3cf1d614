//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Used to run every algorithm fully symbolically: matrices whose entries
//! are the variables `a_i_j`, and polynomials in an auxiliary variable `t`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{RingOps, ScalarRing};

fn interner() -> &'static Mutex<HashSet<Arc<str>>> {
    static INTERNER: OnceLock<Mutex<HashSet<Arc<str>>>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(HashSet::new()))
}

/// An interned variable identifier. Ordered lexicographically by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        let mut set = interner().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(existing) = set.get(name) {
            return Var(existing.clone());
        }
        let name: Arc<str> = Arc::from(name);
        set.insert(name.clone());
        Var(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A power product of variables. Exponents are positive and the factors are
/// sorted by variable name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in factors {
            m = m.mul(&Monomial(vec![(v, e)]));
        }
        m.0.retain(|(_, e)| *e > 0);
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Graded order: higher total degree first, then lexicographic with smaller
/// variable names (and larger exponents) first. This is the printing order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            for (x, y) in self.0.iter().zip(&other.0) {
                let ord = x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial: sparse map from monomials to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(name: &str) -> Self {
        Poly::monomial(Monomial::var(Var::new(name)), Rational::from_integer(1))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(m, c);
        p
    }

    /// Iterates terms in printing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `var`.
    pub fn derivative(&self, var: &str) -> Poly {
        let v = Var::new(var);
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let e = m.exponent(&v);
            if e == 0 {
                continue;
            }
            let factors =
                m.0.iter()
                    .map(|(w, k)| {
                        if *w == v {
                            (w.clone(), k - 1)
                        } else {
                            (w.clone(), *k)
                        }
                    })
                    .filter(|(_, k)| *k > 0)
                    .collect();
            out.add_term(Monomial(factors), c.mul(&Rational::from_integer(e as i64)));
        }
        out
    }

    /// Evaluates at `assignment`, mapping rational coefficients into `T`.
    pub fn evaluate<T: ScalarRing>(&self, assignment: &HashMap<String, T>) -> Result<T> {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut term = T::from_rational(c);
            for (v, e) in &m.0 {
                let x = assignment
                    .get(v.name())
                    .ok_or_else(|| Error::MissingVariable(v.name().to_string()))?;
                for _ in 0..*e {
                    term = term.mul(x);
                }
            }
            acc.add_assign(&term);
        }
        Ok(acc)
    }

    /// Substitutes polynomials for some variables; others are kept.
    pub fn substitute(&self, assignment: &HashMap<String, Poly>) -> Poly {
        let mut acc = Poly::default();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (v, e) in &m.0 {
                let x = assignment.get(v.name()).cloned().unwrap_or_else(|| {
                    Poly::monomial(Monomial(vec![(v.clone(), 1)]), Rational::from_integer(1))
                });
                for _ in 0..*e {
                    term = term.mul(&x);
                }
            }
            acc.add_assign(&term);
        }
        acc
    }

    /// Builds `Σ coeffs[k] * var^k` from coefficients in ascending degree.
    pub fn univariate(var: &str, coeffs: &[Poly]) -> Poly {
        let v = Var::new(var);
        let mut acc = Poly::default();
        for (k, c) in coeffs.iter().enumerate() {
            let power = if k == 0 {
                Monomial::one()
            } else {
                Monomial(vec![(v.clone(), k as u32)])
            };
            acc.add_assign(&c.mul(&Poly::monomial(power, Rational::from_integer(1))));
        }
        acc
    }
}

impl RingOps for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn one() -> Self {
        Poly::constant(Rational::from_integer(1))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    fn add_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn sub_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.neg());
        }
    }
}

impl ScalarRing for Poly {
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }

    fn divide_by_integer(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let inv = Rational::new(1, k)?;
        Ok(self.scale(&inv))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == Rational::from_integer(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the text form produced by `Display`: terms joined by `+`/`-`,
    /// factors by `*`, exponents with `^`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidArgument(format!("bad polynomial `{s}`: {msg}"));
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let bytes = text.as_bytes();
        let mut out = Poly::default();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad("expected `+` or `-` between terms"));
            }
            let end = bytes[pos..]
                .iter()
                .position(|&b| b == b'+' || b == b'-')
                .map_or(bytes.len(), |p| pos + p);
            let term = &text[pos..end];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = Rational::from_integer(sign);
            let mut mono = Monomial::one();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.as_bytes()[0].is_ascii_digit() {
                    coeff = coeff.mul(
                        &factor
                            .parse::<Rational>()
                            .map_err(|_| bad("bad coefficient"))?,
                    );
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (factor, 1),
                    };
                    if !Var::is_valid_name(name) {
                        return Err(bad("bad variable name"));
                    }
                    if exp > 0 {
                        mono = mono.mul(&Monomial(vec![(Var::new(name), exp)]));
                    }
                }
            }
            out.add_term(mono, coeff);
            pos = end;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let x = Poly::var("x");
        let one = Poly::one();
        assert_eq!(x.add(&one).mul(&x.sub(&one)), p("x^2 - 1"));
        assert_eq!(p("x^2 - 1").to_string(), "x^2 - 1");
    }

    #[test]
    fn additive_identity() {
        let q = p("3/2*x*y^2 - y + 7");
        assert_eq!(q.add(&Poly::zero()), q);
    }

    #[test]
    fn generic_four_by_four_pfaffian_expression() {
        let v = |s: &str| Poly::var(s);
        let pf = v("a_1_2")
            .mul(&v("a_3_4"))
            .add(&v("a_2_3").mul(&v("a_1_4")))
            .sub(&v("a_2_4").mul(&v("a_1_3")));
        assert_eq!(pf.num_terms(), 3);
        assert_eq!(pf.to_string(), "a_1_2*a_3_4 - a_1_3*a_2_4 + a_1_4*a_2_3");
        assert_eq!(pf, p("a_1_2*a_3_4 - a_1_3*a_2_4 + a_1_4*a_2_3"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("t^3").derivative("t"), p("3*t^2"));
        assert!(p("17/3").derivative("t").is_zero());
        // c0 t^m + ... + cm with m = 3
        let psi = p("2*t^3 + 5*t^2 - t + 4");
        assert_eq!(psi.derivative("t"), p("6*t^2 + 10*t - 1"));
        assert_eq!(p("x*t^2*y").derivative("t"), p("2*t*x*y"));
    }

    #[test]
    fn evaluation() {
        let mut at = HashMap::new();
        at.insert("x".to_string(), Rational::from_integer(3));
        assert_eq!(
            p("x^2 - 1").evaluate(&at).unwrap(),
            Rational::from_integer(8)
        );

        let q = p("x*y + 2*y - 5/3");
        let mut zero = HashMap::new();
        zero.insert("x".to_string(), Rational::from_integer(0));
        zero.insert("y".to_string(), Rational::from_integer(0));
        assert_eq!(q.evaluate(&zero).unwrap(), "-5/3".parse().unwrap());

        assert_eq!(
            q.evaluate(&at),
            Err(Error::MissingVariable("y".to_string()))
        );
    }

    #[test]
    fn ordering_is_graded() {
        assert_eq!(p("1 + x + x^2").to_string(), "x^2 + x + 1");
        assert_eq!(p("y + x").to_string(), "x + y");
        assert_eq!(p("x*y + x^2 + y^2").to_string(), "x^2 + x*y + y^2");
        assert_eq!(p("-x + 1/2").to_string(), "-x + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x +", "x**y", "2x", "x^-1", "x^y", "3/0"] {
            assert!(bad.parse::<Poly>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn coefficients_cancel() {
        assert!(p("x - x").is_zero());
        assert_eq!(p("x*y - y*x + 2").to_string(), "2");
    }

    #[test]
    fn divide_by_integer_is_coefficientwise() {
        assert_eq!(p("2*x + 3").divide_by_integer(2).unwrap(), p("x + 3/2"));
        assert!(p("x").divide_by_integer(0).is_err());
    }

    #[test]
    fn univariate_builder() {
        let c = [p("1"), p("a"), p("0"), p("-2")];
        assert_eq!(Poly::univariate("t", &c), p("-2*t^3 + a*t + 1"));
    }

    #[test]
    fn substitution() {
        let mut s = HashMap::new();
        s.insert("x".to_string(), p("t + 1"));
        assert_eq!(p("x^2 + y").substitute(&s), p("t^2 + 2*t + 1 + y"));
    }
}
