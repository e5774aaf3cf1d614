//! Pfaffians of skew-symmetric matrices.
//!
//! [`pfaffian_fl`] is the Faddeev-LeVerrier style recursion on the Pfaffian
//! characteristic polynomial `Ψ(t) = pf(tJ + A) = Σ c_{m-j} t^j`, `n = 2m`:
//!
//! ```text
//! N_1     = -pf(J) J
//! c_k     = tr(A N_k) / 2k
//! N_{k+1} = J A N_k - c_k J          (k < m)
//! ```
//!
//! It ends with `c_m = pf(A)` and `N_m = Padj(A)`, and `A N_m - c_m I` must
//! vanish. [`pfaffian_matchings`] (sum over perfect matchings) and
//! [`pfaffian_laplace`] (row expansion) are slow independent references.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{JForm, Matrix, SkewMatrix};
use crate::poly::Poly;
use crate::ring::{Residual, RingOps, ScalarRing};

/// Largest size [`pfaffian_matchings`] accepts without an override.
pub const MATCHINGS_MAX_N: usize = 14;

/// Output of [`pfaffian_fl`].
#[derive(Debug, Clone, PartialEq)]
pub struct PfaffianResult<T> {
    pub value: T,
    /// `Padj(A) = N_m`; `None` for odd sizes.
    pub pfaff_adjugate: Option<Matrix<T>>,
    /// `[c_0, …, c_m]` with `c_0 = pf(J)` and `c_m = pf(A)`; empty for odd sizes.
    pub psi_coefficients: Vec<T>,
    pub j_form: JForm,
    /// Set when `n` is odd; the value is then 0 by convention.
    pub odd_dimension: bool,
    /// `A N_m - c_m I`, for even sizes.
    pub residual: Option<Residual>,
}

/// A perfect matching of `{1, …, n}` as pairs `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatching {
    pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    /// Validates that the pairs are ordered, disjoint and cover `1..=2·len`.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = 2 * pairs.len();
        let mut seen = vec![false; n + 1];
        for &(i, j) in &pairs {
            if i >= j || i == 0 || j > n {
                return Err(Error::InvalidArgument(format!(
                    "pair ({i}, {j}) is not an ordered pair in 1..={n}"
                )));
            }
            for x in [i, j] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidArgument(format!("index {x} matched twice")));
                }
            }
        }
        Ok(PerfectMatching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn sign(&self) -> i64 {
        matching_sign(self)
    }
}

/// Sign of the permutation `[1, 2, …, n] ↦ [i_1, j_1, …, i_m, j_m]`,
/// computed as `(-1)^(n - #cycles)`.
pub fn matching_sign(p: &PerfectMatching) -> i64 {
    let perm: Vec<usize> = p.pairs.iter().flat_map(|&(i, j)| [i - 1, j - 1]).collect();
    let mut visited = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !visited[x] {
            visited[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All perfect matchings of `{1, …, n}`, pairing the smallest unpaired index
/// with each larger unpaired index in turn.
pub fn perfect_matchings(n: usize) -> Vec<PerfectMatching> {
    fn rec(remaining: &[usize], current: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
        if remaining.is_empty() {
            out.push(PerfectMatching {
                pairs: current.clone(),
            });
            return;
        }
        let i = remaining[0];
        for idx in 1..remaining.len() {
            let rest: Vec<usize> = remaining[1..]
                .iter()
                .enumerate()
                .filter(|(k, _)| *k + 1 != idx)
                .map(|(_, &x)| x)
                .collect();
            current.push((i, remaining[idx]));
            rec(&rest, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        let all: Vec<usize> = (1..=n).collect();
        rec(&all, &mut Vec::new(), &mut out);
    }
    out
}

/// `pf(J)`, read off the single matching supported by `J`'s `+1` entries.
pub fn pfaffian_of_j(j: JForm, n: usize) -> Result<i64> {
    let m = PerfectMatching::new(j.positive_pairs(n)?)?;
    Ok(matching_sign(&m))
}

/// Pfaffian, Pfaff-adjugate and Ψ-coefficients by the division-free
/// recursion.
pub fn pfaffian_fl<T: ScalarRing>(a: &SkewMatrix<T>, j: JForm) -> Result<PfaffianResult<T>> {
    let n = a.n();
    if n % 2 == 1 {
        return Ok(PfaffianResult {
            value: T::zero(),
            pfaff_adjugate: None,
            psi_coefficients: Vec::new(),
            j_form: j,
            odd_dimension: true,
            residual: None,
        });
    }
    let m = n / 2;
    let pf_j = pfaffian_of_j(j, n)?;
    let mut psi = Vec::with_capacity(m + 1);
    psi.push(T::from_integer(pf_j));

    let j_matrix = j.matrix::<T>(n)?.into_matrix();
    let mut big_n = if pf_j == 1 { j_matrix.neg() } else { j_matrix };
    let mut residual = Matrix::zeros(n);
    let a = a.matrix();
    for k in 1..=m {
        let mut prod = a.mul_unchecked(&big_n);
        let c = prod.trace().divide_by_integer(2 * k as i64)?;
        if k < m {
            big_n = j.left_mul(&prod)?;
            j.sub_scaled(&mut big_n, &c);
        } else {
            prod.add_to_diagonal(&c.neg());
            residual = prod;
        }
        psi.push(c);
    }

    let report = Residual::of(residual.entries()).enforce::<T>("A·N_m - c_m·I")?;
    Ok(PfaffianResult {
        value: psi[m].clone(),
        pfaff_adjugate: Some(big_n),
        psi_coefficients: psi,
        j_form: j,
        odd_dimension: false,
        residual: Some(report),
    })
}

/// The Pfaff-adjugate `Padj(A)` from the recursion. For odd sizes every
/// entry is the Pfaffian of an odd matrix, so this is the zero matrix.
pub fn pfaff_adjugate<T: ScalarRing>(a: &SkewMatrix<T>) -> Result<Matrix<T>> {
    Ok(pfaffian_fl(a, JForm::Standard)?
        .pfaff_adjugate
        .unwrap_or_else(|| Matrix::zeros(a.n())))
}

/// Sum over all perfect matchings. Refuses `n > MATCHINGS_MAX_N` unless
/// `allow_large` is set.
pub fn pfaffian_matchings<T: RingOps>(a: &SkewMatrix<T>, allow_large: bool) -> Result<T> {
    let n = a.n();
    if n > MATCHINGS_MAX_N && !allow_large {
        return Err(Error::CapExceeded {
            algorithm: "matchings",
            n,
            cap: MATCHINGS_MAX_N,
        });
    }
    if n % 2 == 1 {
        return Ok(T::zero());
    }

    fn rec<T: RingOps>(
        a: &SkewMatrix<T>,
        remaining: &[usize],
        prefix: &T,
        negative: bool,
        acc: &mut T,
    ) {
        if remaining.is_empty() {
            if negative {
                acc.sub_assign(prefix);
            } else {
                acc.add_assign(prefix);
            }
            return;
        }
        let i = remaining[0];
        let mut rest = Vec::with_capacity(remaining.len() - 2);
        for idx in 1..remaining.len() {
            let a_ij = a.get(i, remaining[idx]);
            if a_ij.is_zero() {
                continue;
            }
            rest.clear();
            rest.extend(remaining[1..idx].iter().chain(&remaining[idx + 1..]));
            // Moving j next to i passes over the idx - 1 unpaired indices between them.
            let flip = (idx - 1) % 2 == 1;
            rec(a, &rest, &prefix.mul(a_ij), negative ^ flip, acc);
        }
    }

    let all: Vec<usize> = (0..n).collect();
    let mut acc = T::zero();
    rec(a, &all, &T::one(), false, &mut acc);
    Ok(acc)
}

/// Expansion along row `pivot` (1-based); minors are expanded along their
/// first row. `pf` of the empty matrix is 1.
pub fn pfaffian_laplace<T: RingOps>(a: &SkewMatrix<T>, pivot: usize) -> Result<T> {
    let n = a.n();
    if n == 0 {
        return Ok(T::one());
    }
    if pivot == 0 || pivot > n {
        return Err(Error::InvalidArgument(format!(
            "pivot row {pivot} outside 1..={n}"
        )));
    }
    if n % 2 == 1 {
        return Ok(T::zero());
    }
    let i = pivot;
    let mut acc = T::zero();
    for j in 1..=n {
        if j == i {
            continue;
        }
        let a_ij = a.get(i - 1, j - 1);
        if a_ij.is_zero() {
            continue;
        }
        let minor = pfaffian_laplace(&a.remove_row_col_pair(i, j)?, 1)?;
        let exponent = if j < i { i + j } else { i + j + 1 };
        let term = a_ij.mul(&minor);
        if exponent % 2 == 0 {
            acc.add_assign(&term);
        } else {
            acc.sub_assign(&term);
        }
    }
    Ok(acc)
}

/// `Padj(A)` straight from its definition: `b_ij = ±pf(A⟨i,j⟩)`, with the
/// minors evaluated by [`pfaffian_laplace`].
pub fn pfaff_adjugate_entrywise<T: RingOps>(a: &SkewMatrix<T>) -> Result<Matrix<T>> {
    let n = a.n();
    let mut out = Matrix::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let minor = pfaffian_laplace(&a.remove_row_col_pair(i, j)?, 1)?;
            let exponent = if i < j { i + j } else { i + j + 1 };
            out.set(
                i - 1,
                j - 1,
                if exponent % 2 == 0 {
                    minor
                } else {
                    minor.neg()
                },
            );
        }
    }
    Ok(out)
}

/// Name of the auxiliary variable used by the polynomial-in-`t` checks.
pub const T_VAR: &str = "t";

/// `tJ + A` over the polynomial ring.
pub fn shifted_by_j(a: &SkewMatrix<Poly>, j: JForm) -> Result<SkewMatrix<Poly>> {
    if a.matrix()
        .entries()
        .iter()
        .any(|p| p.variables().iter().any(|v| v.name() == T_VAR))
    {
        return Err(Error::InvalidArgument(format!(
            "matrix entries already use the variable `{T_VAR}`"
        )));
    }
    let t = Poly::var(T_VAR);
    let jm = j.matrix::<Poly>(a.n())?;
    let shifted = jm.matrix().scalar_multiply(&t).add(a.matrix())?;
    SkewMatrix::new(shifted)
}

/// Both sides of `d/dt pf(A(t)) = ½ tr(Ȧ(t) · Padj(A(t)))` for `A(t) = tJ + A`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiReport {
    pub lhs: Poly,
    pub rhs: Poly,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Largest size the symbolic checks accept.
pub const SYMBOLIC_CHECK_MAX_N: usize = 8;

/// Evaluates both sides of the Pfaffian Jacobi formula symbolically: the
/// left through the matchings sum and a formal derivative, the right
/// through the entrywise Pfaff-adjugate.
pub fn jacobi_pfaffian_check(a: &SkewMatrix<Poly>, j: JForm) -> Result<JacobiReport> {
    let n = a.n();
    if n % 2 == 1 || n > SYMBOLIC_CHECK_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "symbolic check needs even n <= {SYMBOLIC_CHECK_MAX_N}, got {n}"
        )));
    }
    let a_t = shifted_by_j(a, j)?;
    let lhs = pfaffian_matchings(&a_t, false)?.derivative(T_VAR);
    let a_dot = a_t.matrix().map(|p| p.derivative(T_VAR));
    let padj = pfaff_adjugate_entrywise(&a_t)?;
    let rhs = a_dot.mat_mul(&padj)?.trace().divide_by_integer(2)?;
    Ok(JacobiReport { lhs, rhs })
}

/// `Σ c_{m-j} t^j` from the recursion against `pf(tJ + A)` from matchings.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiReport {
    pub from_recursion: Poly,
    pub from_matchings: Poly,
}

impl PsiReport {
    pub fn passed(&self) -> bool {
        self.from_recursion == self.from_matchings
    }
}

pub fn psi_polynomial_check(a: &SkewMatrix<Poly>, j: JForm) -> Result<PsiReport> {
    let n = a.n();
    if n % 2 == 1 || n > SYMBOLIC_CHECK_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "symbolic check needs even n <= {SYMBOLIC_CHECK_MAX_N}, got {n}"
        )));
    }
    let r = pfaffian_fl(a, j)?;
    let ascending: Vec<Poly> = r.psi_coefficients.iter().rev().cloned().collect();
    let from_recursion = Poly::univariate(T_VAR, &ascending);
    let from_matchings = pfaffian_matchings(&shifted_by_j(a, j)?, false)?;
    Ok(PsiReport {
        from_recursion,
        from_matchings,
    })
}

/// The generic skew matrix with entries `a_i_j` above the diagonal.
pub fn generic_skew(n: usize) -> SkewMatrix<Poly> {
    SkewMatrix::from_upper(n, |i, j| Poly::var(&format!("a_{}_{}", i + 1, j + 1)))
}

/// Assignment `a_i_j ↦ A[i][j]` for evaluating polynomials in generic entries.
pub fn generic_assignment<T: Clone>(a: &SkewMatrix<T>) -> HashMap<String, T> {
    let mut map = HashMap::new();
    for i in 0..a.n() {
        for j in i + 1..a.n() {
            map.insert(format!("a_{}_{}", i + 1, j + 1), a.get(i, j).clone());
        }
    }
    map
}
