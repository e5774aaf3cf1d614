//! Seeded property registry shared by the `properties` and `acceptance`
//! test targets.

#![allow(dead_code)]

use std::collections::HashMap;

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use pfaff_core::bench::{run_bench, Algorithm, BenchConfig};
use pfaff_core::euler::{euler_form, CurvatureInput};
use pfaff_core::io::{parse_matrix_file, write_matrix, AnyMatrix};
use pfaff_core::pfaffian::{pfaff_adjugate_entrywise, psi_polynomial_check};
use pfaff_core::ring::ring_axiom_check;
use pfaff_core::{
    char_poly, determinant, pfaffian_fl, pfaffian_laplace, pfaffian_matchings, EvenForm,
    FormElement, JForm, Matrix, Poly, Rational, RationalizedInteger, RingOps, ScalarRing,
    SkewMatrix,
};

pub const CASES: u32 = 100;

pub struct Property {
    pub module: &'static str,
    pub name: &'static str,
    pub check: fn() -> Result<(), String>,
}

/// 64-bit FNV-1a, used to derive a per-property seed from its name.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn runner(name: &str, cases: u32) -> TestRunner {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&fnv1a(name).to_le_bytes());
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn run<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(name, cases)
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn ok<T>(r: pfaff_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

// ---- strategies ----

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn q(k: i64) -> Rational {
    Rational::from_integer(k)
}

pub fn int_matrix(n: usize, bound: i64) -> impl Strategy<Value = Matrix<Rational>> {
    vec(-bound..=bound, n * n)
        .prop_map(move |v| Matrix::new(n, v.into_iter().map(q).collect()).unwrap())
}

pub fn rational_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    vec(rational(), n * n).prop_map(move |v| Matrix::new(n, v).unwrap())
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Skew matrix from `n(n-1)/2` upper entries in row-major order.
pub fn skew_from_upper<T: RingOps>(n: usize, upper: &[T]) -> SkewMatrix<T> {
    SkewMatrix::from_upper(n, |i, j| upper[upper_index(n, i, j)].clone())
}

pub fn skew_int(n: usize) -> impl Strategy<Value = SkewMatrix<Rational>> {
    vec(-9i64..=9, n * n.saturating_sub(1) / 2).prop_map(move |v| {
        let v: Vec<Rational> = v.into_iter().map(q).collect();
        skew_from_upper(n, &v)
    })
}

pub fn skew_int_sized(
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = SkewMatrix<Rational>> {
    sizes.prop_flat_map(skew_int)
}

pub fn even_skew_int(max_m: usize) -> impl Strategy<Value = SkewMatrix<Rational>> {
    (1..=max_m).prop_flat_map(|m| skew_int(2 * m))
}

pub fn poly() -> impl Strategy<Value = Poly> {
    vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, ex, ey, ez) in terms {
            let mut t = Poly::constant(q(c));
            for (name, e) in [("x", ex), ("y", ey), ("z", ez)] {
                for _ in 0..e {
                    t = t.mul(&Poly::var(name));
                }
            }
            p.add_assign(&t);
        }
        p
    })
}

pub fn assignment() -> impl Strategy<Value = HashMap<String, Rational>> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| {
        [("x", x), ("y", y), ("z", z)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect()
    })
}

fn blade_from_mask(dim: usize, mask: u64, c: Rational) -> FormElement<Rational> {
    let idx: Vec<usize> = (0..dim)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect();
    FormElement::blade(dim, &idx, c).unwrap()
}

/// Random forms in `dim` covectors whose terms have a degree in `grades`.
pub fn form(dim: usize, grades: &'static [u32]) -> impl Strategy<Value = FormElement<Rational>> {
    vec((0u64..(1 << dim), -4i64..=4), 0..5).prop_map(move |terms| {
        let mut f = FormElement::zero_in(dim).unwrap();
        for (mask, c) in terms {
            if grades.contains(&mask.count_ones()) {
                f = f.add(&blade_from_mask(dim, mask, q(c)));
            }
        }
        f
    })
}

pub fn homogeneous_form(dim: usize) -> impl Strategy<Value = (u32, FormElement<Rational>)> {
    (0..=dim as u32).prop_flat_map(move |k| {
        vec((0u64..(1 << dim), -4i64..=4), 0..4).prop_map(move |terms| {
            let mut f = FormElement::zero_in(dim).unwrap();
            for (mask, c) in terms {
                if mask.count_ones() == k {
                    f = f.add(&blade_from_mask(dim, mask, q(c)));
                }
            }
            (k, f)
        })
    })
}

/// A curvature matrix of random 2-forms in `n` covectors.
pub fn curvature(n: usize) -> impl Strategy<Value = CurvatureInput<Rational>> {
    vec(form(n, &[2]), n * (n - 1) / 2).prop_map(move |forms| {
        let entries: Vec<EvenForm<Rational>> = forms
            .into_iter()
            .map(|f| EvenForm::new(f).unwrap())
            .collect();
        let omega = skew_from_upper(n, &entries).into_matrix();
        CurvatureInput::new(omega, None).unwrap()
    })
}

fn cofactor_det(a: &Matrix<Rational>) -> Rational {
    let n = a.n();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        let minor = Matrix::from_fn(n - 1, |r, c| {
            a.get(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = a.get(0, j).mul(&cofactor_det(&minor));
        if j % 2 == 0 {
            acc.add_assign(&term);
        } else {
            acc.sub_assign(&term);
        }
    }
    acc
}

fn naive_product(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    let n = a.n();
    Matrix::from_fn(n, |i, j| {
        (0..n).fold(Rational::zero(), |acc, k| {
            acc.add(&a.get(i, k).mul(b.get(k, j)))
        })
    })
}

// ---- ring-core ----

fn rational_axioms() -> Result<(), String> {
    run("rational_axioms", CASES, vec(rational(), 3), |s| {
        let report = ok(ring_axiom_check(&s))?;
        prop_assert!(report.passed(), "{:?}", report.failed_laws());
        Ok(())
    })
}

fn divide_by_integer_round_trip() -> Result<(), String> {
    let nonzero = (-20i64..=20).prop_filter("k != 0", |k| *k != 0);
    run(
        "divide_by_integer_round_trip",
        CASES,
        (
            nonzero,
            -1000i64..=1000,
            rational(),
            poly(),
            form(4, &[0, 2, 4]),
        ),
        |(k, m, x, p, f)| {
            prop_assert_eq!(ok(q(k * m).divide_by_integer(k))?, q(m));
            let int = RationalizedInteger::new(k * m);
            prop_assert_eq!(ok(ok(int.divide_by_integer(k))?.to_integer())?, m.into());
            prop_assert_eq!(ok(x.divide_by_integer(k))?.mul(&q(k)), x);
            prop_assert_eq!(ok(p.divide_by_integer(k))?.mul(&Poly::from_integer(k)), p);
            let e = EvenForm::new(f).unwrap();
            prop_assert_eq!(
                ok(e.divide_by_integer(k))?.mul(&EvenForm::from_integer(k)),
                e
            );
            Ok(())
        },
    )
}

fn rational_normalization() -> Result<(), String> {
    run(
        "rational_normalization",
        CASES,
        (-50i64..=50, 1i64..=20, 1i64..=20),
        |(p, d, s)| {
            let a = Rational::new(p, d).unwrap();
            let b = Rational::new(p * s, d * s).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.to_string(), b.to_string());
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
            Ok(())
        },
    )
}

// ---- poly-ring ----

fn poly_axioms() -> Result<(), String> {
    run("poly_axioms", CASES, vec(poly(), 3), |s| {
        let report = ok(ring_axiom_check(&s))?;
        prop_assert!(report.passed(), "{:?}", report.failed_laws());
        Ok(())
    })
}

fn evaluation_homomorphism() -> Result<(), String> {
    run(
        "evaluation_homomorphism",
        CASES,
        (poly(), poly(), assignment()),
        |(p, q_, s)| {
            let ep = ok(p.evaluate(&s))?;
            let eq = ok(q_.evaluate(&s))?;
            prop_assert_eq!(ok(p.mul(&q_).evaluate(&s))?, ep.mul(&eq));
            prop_assert_eq!(ok(p.add(&q_).evaluate(&s))?, ep.add(&eq));
            Ok(())
        },
    )
}

fn derivative_rules() -> Result<(), String> {
    run(
        "derivative_rules",
        CASES,
        (poly(), poly(), rational()),
        |(p, q_, c)| {
            for v in ["x", "y", "z", "w"] {
                let lin = p.scale(&c).add(&q_).derivative(v);
                prop_assert_eq!(lin, p.derivative(v).scale(&c).add(&q_.derivative(v)));
                let leibniz = p.derivative(v).mul(&q_).add(&p.mul(&q_.derivative(v)));
                prop_assert_eq!(p.mul(&q_).derivative(v), leibniz);
            }
            Ok(())
        },
    )
}

fn poly_text_round_trip() -> Result<(), String> {
    run("poly_text_round_trip", CASES, poly(), |p| {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Poly>().unwrap(), p);
        Ok(())
    })
}

// ---- exterior-algebra ----

fn wedge_graded_commutativity() -> Result<(), String> {
    run(
        "wedge_graded_commutativity",
        CASES,
        (homogeneous_form(5), homogeneous_form(5)),
        |((ka, a), (kb, b))| {
            let ab = ok(a.wedge(&b))?;
            let ba = ok(b.wedge(&a))?;
            let expected = if (ka * kb) % 2 == 1 { ba.neg() } else { ba };
            prop_assert_eq!(ab, expected);
            Ok(())
        },
    )
}

fn wedge_associativity() -> Result<(), String> {
    let any = || form(5, &[0, 1, 2, 3, 4, 5]);
    run(
        "wedge_associativity",
        CASES,
        (any(), any(), any()),
        |(a, b, c)| {
            prop_assert_eq!(
                ok(ok(a.wedge(&b))?.wedge(&c))?,
                ok(a.wedge(&ok(b.wedge(&c))?))?
            );
            Ok(())
        },
    )
}

fn even_forms_satisfy_axioms() -> Result<(), String> {
    run(
        "even_forms_satisfy_axioms",
        CASES,
        vec(form(4, &[0, 2, 4]), 3),
        |s| {
            let evens: Vec<EvenForm<Rational>> =
                s.into_iter().map(|f| EvenForm::new(f).unwrap()).collect();
            let report = ok(ring_axiom_check(&evens))?;
            prop_assert!(report.passed(), "{:?}", report.failed_laws());
            Ok(())
        },
    )
}

fn nilpotency() -> Result<(), String> {
    run("nilpotency", CASES, form(4, &[1, 2, 3, 4]), |f| {
        // Every term has degree >= 1, so a fifth power has degree >= 5 > 4.
        let mut p = f.clone();
        for _ in 0..4 {
            p = ok(p.wedge(&f))?;
        }
        prop_assert!(p.is_zero());
        Ok(())
    })
}

fn form_text_round_trip() -> Result<(), String> {
    run(
        "form_text_round_trip",
        CASES,
        form(6, &[0, 1, 2, 3, 4, 5, 6]),
        |f| {
            let text = f.to_string();
            prop_assert_eq!(ok(FormElement::<Rational>::parse(6, &text))?, f);
            Ok(())
        },
    )
}

// ---- matrix ----

fn mat_mul_associative() -> Result<(), String> {
    let triple = (0usize..=5)
        .prop_flat_map(|n| (rational_matrix(n), rational_matrix(n), rational_matrix(n)));
    run("mat_mul_associative", CASES, triple, |(a, b, c)| {
        let left = ok(ok(a.mat_mul(&b))?.mat_mul(&c))?;
        let right = ok(a.mat_mul(&ok(b.mat_mul(&c))?))?;
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(ok(a.mat_mul(&b))?, naive_product(&a, &b));
        Ok(())
    })
}

fn trace_of_product_commutes() -> Result<(), String> {
    let pair = (0usize..=6).prop_flat_map(|n| (rational_matrix(n), rational_matrix(n)));
    run("trace_of_product_commutes", CASES, pair, |(a, b)| {
        prop_assert_eq!(ok(a.mat_mul(&b))?.trace(), ok(b.mat_mul(&a))?.trace());
        Ok(())
    })
}

fn j_left_mul_matches_product() -> Result<(), String> {
    let input = (1usize..=6).prop_flat_map(|m| int_matrix(2 * m, 9));
    run("j_left_mul_matches_product", 200, input, |a| {
        for j in [JForm::Standard, JForm::Alternative] {
            let jm = ok(j.matrix::<Rational>(a.n()))?;
            prop_assert_eq!(ok(j.left_mul(&a))?, naive_product(jm.matrix(), &a));
        }
        Ok(())
    })
}

fn matrix_file_round_trip() -> Result<(), String> {
    let mats = (0usize..=4).prop_flat_map(|n| {
        (
            rational_matrix(n),
            vec(poly(), n * n),
            vec(form(3, &[0, 2]), n * n),
        )
    });
    run("matrix_file_round_trip", CASES, mats, |(r, p, f)| {
        let n = r.n();
        let ints = r.map(|x| RationalizedInteger::new(x.numer().clone()));
        let evens = f.into_iter().map(|x| EvenForm::new(x).unwrap()).collect();
        let all = [
            AnyMatrix::Rational(r),
            AnyMatrix::Integer(ints),
            AnyMatrix::Polynomial(Matrix::new(n, p).unwrap()),
            AnyMatrix::Exterior(3, Matrix::new(n, evens).unwrap()),
        ];
        for m in all {
            let text = write_matrix(&m);
            let back = ok(parse_matrix_file(&text, None))?;
            prop_assert_eq!(&back.matrix, &m);
            prop_assert_eq!(write_matrix(&back.matrix), text);
        }
        Ok(())
    })
}

// ---- faddeev-leverrier ----

fn charpoly_identities() -> Result<(), String> {
    let input = (0usize..=7).prop_flat_map(rational_matrix);
    run("charpoly_identities", CASES, input, |a| {
        let n = a.n();
        let r = ok(char_poly(&a))?;
        prop_assert!(r.residual.is_zero() && r.residual_report.exact_zero);
        let det_i = Matrix::identity(n).scalar_multiply(&r.determinant());
        prop_assert_eq!(ok(a.mat_mul(&r.adjugate))?, det_i.clone());
        prop_assert_eq!(ok(r.adjugate.mat_mul(&a))?, det_i);
        if n > 0 {
            prop_assert_eq!(&r.coefficients[1], &a.trace().neg());
        }
        Ok(())
    })
}

fn determinant_multiplicative() -> Result<(), String> {
    let pair = (0usize..=6).prop_flat_map(|n| (int_matrix(n, 5), rational_matrix(n)));
    run("determinant_multiplicative", CASES, pair, |(a, b)| {
        let lhs = ok(determinant(&ok(a.mat_mul(&b))?))?;
        prop_assert_eq!(lhs, ok(determinant(&a))?.mul(&ok(determinant(&b))?));
        Ok(())
    })
}

fn determinant_matches_cofactor() -> Result<(), String> {
    let input = (0usize..=6).prop_flat_map(rational_matrix);
    run("determinant_matches_cofactor", CASES, input, |a| {
        prop_assert_eq!(ok(determinant(&a))?, cofactor_det(&a));
        Ok(())
    })
}

// ---- pfaffian ----

fn pfaffian_squared_is_determinant() -> Result<(), String> {
    run(
        "pfaffian_squared_is_determinant",
        CASES,
        skew_int_sized(0..=16),
        |a| {
            let pf = ok(pfaffian_fl(&a, JForm::Standard))?.value;
            prop_assert_eq!(pf.mul(&pf), ok(determinant(a.matrix()))?);
            Ok(())
        },
    )
}

fn pfaffian_congruence() -> Result<(), String> {
    let pair = (0usize..=10).prop_flat_map(|n| (skew_int(n), int_matrix(n, 4)));
    run("pfaffian_congruence", CASES, pair, |(a, b)| {
        let lhs = ok(pfaffian_fl(&ok(a.congruence(&b))?, JForm::Standard))?.value;
        let rhs = ok(determinant(&b))?.mul(&ok(pfaffian_fl(&a, JForm::Standard))?.value);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

fn pfaffian_swap_sign() -> Result<(), String> {
    let input = (1usize..=5).prop_flat_map(|m| (skew_int(2 * m), 0..2 * m, 0..2 * m));
    run("pfaffian_swap_sign", CASES, input, |(a, i, k)| {
        prop_assume!(i != k);
        let pf = ok(pfaffian_fl(&a, JForm::Standard))?.value;
        let swapped = ok(pfaffian_fl(&a.swap_indices(i, k), JForm::Standard))?.value;
        prop_assert_eq!(swapped, pf.neg());
        Ok(())
    })
}

fn pfaffian_three_way_agreement() -> Result<(), String> {
    run(
        "pfaffian_three_way_agreement",
        CASES,
        skew_int_sized(0..=12),
        |a| {
            let fl = ok(pfaffian_fl(&a, JForm::Standard))?.value;
            prop_assert_eq!(&fl, &ok(pfaffian_matchings(&a, false))?);
            prop_assert_eq!(&fl, &ok(pfaffian_laplace(&a, 1))?);
            Ok(())
        },
    )
}

fn pfaffian_j_independence() -> Result<(), String> {
    run(
        "pfaffian_j_independence",
        CASES,
        skew_int_sized(0..=16),
        |a| {
            let s = ok(pfaffian_fl(&a, JForm::Standard))?;
            let t = ok(pfaffian_fl(&a, JForm::Alternative))?;
            prop_assert_eq!(s.value, t.value);
            prop_assert_eq!(s.pfaff_adjugate, t.pfaff_adjugate);
            Ok(())
        },
    )
}

fn laplace_pivot_independence() -> Result<(), String> {
    run(
        "laplace_pivot_independence",
        CASES,
        skew_int_sized(1..=8),
        |a| {
            let first = ok(pfaffian_laplace(&a, 1))?;
            for pivot in 2..=a.n() {
                prop_assert_eq!(&ok(pfaffian_laplace(&a, pivot))?, &first);
            }
            Ok(())
        },
    )
}

fn pfaff_adjugate_identities() -> Result<(), String> {
    run("pfaff_adjugate_identities", CASES, even_skew_int(5), |a| {
        let n = a.n();
        let r = ok(pfaffian_fl(&a, JForm::Standard))?;
        prop_assert!(r.residual.unwrap().exact_zero);
        let padj = r.pfaff_adjugate.unwrap();
        let pf_i = Matrix::identity(n).scalar_multiply(&r.value);
        prop_assert_eq!(ok(a.matrix().mat_mul(&padj))?, pf_i);
        prop_assert_eq!(
            padj.scalar_multiply(&r.value),
            ok(char_poly(a.matrix()))?.adjugate
        );
        if n <= 8 {
            prop_assert_eq!(padj, ok(pfaff_adjugate_entrywise(&a))?);
        }
        Ok(())
    })
}

fn psi_polynomial() -> Result<(), String> {
    let input = (
        (1usize..=3).prop_flat_map(|m| skew_int(2 * m)),
        any::<bool>(),
    );
    run("psi_polynomial", CASES, input, |(a, alt)| {
        let j = if alt {
            JForm::Alternative
        } else {
            JForm::Standard
        };
        let lifted = SkewMatrix::new(a.matrix().map(|x| Poly::constant(x.clone()))).unwrap();
        let report = ok(psi_polynomial_check(&lifted, j))?;
        prop_assert!(report.passed(), "{report:?}");
        Ok(())
    })
}

// ---- euler-form ----

/// Integer `B` with `det B > 0`, found by negating the first column if needed.
fn positive_frame(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    int_matrix(n, 3).prop_filter_map("singular", |b| {
        let d = determinant(&b).unwrap();
        if d.is_zero() {
            None
        } else if d.is_negative() {
            let mut b = b;
            for i in 0..b.n() {
                let v = b.get(i, 0).neg();
                b.set(i, 0, v);
            }
            Some(b)
        } else {
            Some(b)
        }
    })
}

fn euler_frame_invariance() -> Result<(), String> {
    let input = prop_oneof![Just(2usize), Just(4usize)]
        .prop_flat_map(|n| (curvature(n), positive_frame(n)));
    run("euler_frame_invariance", CASES, input, |(omega, b)| {
        let base = ok(euler_form(&omega))?;
        let moved = ok(omega.change_frame(&b))?;
        prop_assert_eq!(&ok(euler_form(&moved))?.form, &base.form);
        // A second change of frame composes with the first.
        let twice = ok(moved.change_frame(&b))?;
        prop_assert_eq!(ok(euler_form(&twice))?.form, base.form);
        Ok(())
    })
}

fn euler_signed_permutation_invariance() -> Result<(), String> {
    let input = prop_oneof![Just(2usize), Just(4usize)].prop_flat_map(|n| {
        (
            curvature(n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            vec(any::<bool>(), n),
        )
    });
    run(
        "euler_signed_permutation_invariance",
        CASES,
        input,
        |(omega, perm, signs)| {
            let n = perm.len();
            let mut b = Matrix::from_fn(n, |i, j| {
                if perm[j] == i {
                    q(if signs[j] { -1 } else { 1 })
                } else {
                    q(0)
                }
            });
            if ok(determinant(&b))?.is_negative() {
                let v = b.get(perm[0], 0).neg();
                b.set(perm[0], 0, v);
            }
            let moved = ok(omega.change_frame(&b))?;
            prop_assert_eq!(moved.gram(), Some(&Matrix::identity(n)));
            prop_assert_eq!(ok(euler_form(&moved))?.form, ok(euler_form(&omega))?.form);
            Ok(())
        },
    )
}

fn euler_matches_matchings() -> Result<(), String> {
    let input = prop_oneof![Just(2usize), Just(4usize), Just(6usize)].prop_flat_map(curvature);
    run("euler_matches_matchings", CASES, input, |omega| {
        let fl = ok(euler_form(&omega))?.form;
        let oracle = ok(pfaffian_matchings(omega.omega(), false))?.into_form();
        prop_assert_eq!(fl, ok(oracle.with_dimension(omega.n()))?);
        Ok(())
    })
}

// ---- cli / bench ----

fn bench_digest_agreement() -> Result<(), String> {
    run(
        "bench_digest_agreement",
        CASES,
        (any::<u64>(), any::<bool>()),
        |(seed, integer)| {
            let config = BenchConfig {
                sizes: vec![2, 4, 6],
                ring: if integer {
                    pfaff_core::bench::BenchRing::Integer
                } else {
                    pfaff_core::bench::BenchRing::Rational
                },
                algorithms: Algorithm::ALL.to_vec(),
                reps: 1,
                seed,
                ..BenchConfig::default()
            };
            let records = ok(run_bench(&config))?;
            prop_assert_eq!(records.len(), 9);
            for chunk in records.chunks(3) {
                prop_assert!(chunk.iter().all(|r| r.digest == chunk[0].digest));
            }
            Ok(())
        },
    )
}

pub fn registry() -> Vec<Property> {
    macro_rules! props {
        ($($module:literal => $f:ident),* $(,)?) => {
            vec![$(Property { module: $module, name: stringify!($f), check: $f }),*]
        };
    }
    props![
        "ring-core" => rational_axioms,
        "ring-core" => divide_by_integer_round_trip,
        "ring-core" => rational_normalization,
        "poly-ring" => poly_axioms,
        "poly-ring" => evaluation_homomorphism,
        "poly-ring" => derivative_rules,
        "poly-ring" => poly_text_round_trip,
        "exterior-algebra" => wedge_graded_commutativity,
        "exterior-algebra" => wedge_associativity,
        "exterior-algebra" => even_forms_satisfy_axioms,
        "exterior-algebra" => nilpotency,
        "exterior-algebra" => form_text_round_trip,
        "matrix" => mat_mul_associative,
        "matrix" => trace_of_product_commutes,
        "matrix" => j_left_mul_matches_product,
        "matrix" => matrix_file_round_trip,
        "faddeev-leverrier" => charpoly_identities,
        "faddeev-leverrier" => determinant_multiplicative,
        "faddeev-leverrier" => determinant_matches_cofactor,
        "pfaffian" => pfaffian_squared_is_determinant,
        "pfaffian" => pfaffian_congruence,
        "pfaffian" => pfaffian_swap_sign,
        "pfaffian" => pfaffian_three_way_agreement,
        "pfaffian" => pfaffian_j_independence,
        "pfaffian" => laplace_pivot_independence,
        "pfaffian" => pfaff_adjugate_identities,
        "pfaffian" => psi_polynomial,
        "euler-form" => euler_frame_invariance,
        "euler-form" => euler_signed_permutation_invariance,
        "euler-form" => euler_matches_matchings,
        "cli" => bench_digest_agreement,
    ]
}

pub fn check(name: &str) {
    let prop = registry()
        .into_iter()
        .find(|p| p.name == name)
        .unwrap_or_else(|| panic!("no property named {name}"));
    if let Err(e) = (prop.check)() {
        panic!("{e}");
    }
}
