//! Seeded Pfaffian benchmarks.
//!
//! Inputs are `A = B - Bᵀ` with `B` uniform in `[-9, 9]`, drawn row-major
//! from a ChaCha8 stream seeded with `seed`, one matrix per size in the
//! order given. Float runs divide the integer matrix by `9·√n` so that
//! Pfaffians stay in range for large `n`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::matrix::{JForm, Matrix, SkewMatrix};
use crate::pfaffian::{pfaffian_fl, pfaffian_laplace, pfaffian_matchings};
use crate::rational::{Rational, RationalizedInteger};
use crate::ring::ScalarRing;

/// Name of the generator written into bench output.
pub const PRNG_NAME: &str = "chacha8";
/// Largest `n` the bench runs the matching sum at without an override.
pub const BENCH_MATCHINGS_CAP: usize = 16;
/// Largest `n` the bench runs Laplace expansion at without an override.
pub const BENCH_LAPLACE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Fl,
    Matchings,
    Laplace,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Fl, Algorithm::Matchings, Algorithm::Laplace];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fl => "fl",
            Algorithm::Matchings => "matchings",
            Algorithm::Laplace => "laplace",
        }
    }

    /// `None` means uncapped.
    pub fn cap(self) -> Option<usize> {
        match self {
            Algorithm::Fl => None,
            Algorithm::Matchings => Some(BENCH_MATCHINGS_CAP),
            Algorithm::Laplace => Some(BENCH_LAPLACE_CAP),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchRing {
    Rational,
    Integer,
    Float,
}

impl BenchRing {
    pub fn name(self) -> &'static str {
        match self {
            BenchRing::Rational => "rational",
            BenchRing::Integer => "integer",
            BenchRing::Float => "float",
        }
    }

    pub fn is_exact(self) -> bool {
        self != BenchRing::Float
    }
}

impl fmt::Display for BenchRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(BenchRing::Rational),
            "integer" => Ok(BenchRing::Integer),
            "float" => Ok(BenchRing::Float),
            _ => Err(Error::InvalidArgument(format!(
                "bench ring must be rational, integer or float, got `{s}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub ring: BenchRing,
    pub algorithms: Vec<Algorithm>,
    pub reps: usize,
    pub seed: u64,
    pub threads: usize,
    pub override_caps: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![4, 8, 10],
            ring: BenchRing::Rational,
            algorithms: vec![Algorithm::Fl, Algorithm::Matchings],
            reps: 3,
            seed: 0,
            threads: 1,
            override_caps: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub ring: BenchRing,
    /// Median wall time of one run.
    pub seconds: f64,
    pub mean_seconds: f64,
    pub reps: usize,
    /// SHA-256 prefix of the result's canonical text.
    pub digest: String,
    pub threads: usize,
}

pub const CSV_HEADER: &str = "algorithm,n,ring,seconds,reps,digest,mean_seconds,threads";

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.9},{},{},{:.9},{}",
            self.algorithm,
            self.n,
            self.ring,
            self.seconds,
            self.reps,
            self.digest,
            self.mean_seconds,
            self.threads
        )
    }
}

/// CSV text with a leading comment naming the generator and seed.
pub fn to_csv(records: &[BenchRecord], seed: u64) -> String {
    let mut out = format!("# prng={PRNG_NAME} seed={seed}\n{CSV_HEADER}\n");
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// `B - Bᵀ` with `B` uniform in `[-9, 9]`, drawn row-major.
pub fn random_skew_integers(n: usize, rng: &mut impl Rng) -> Matrix<i64> {
    let b = Matrix::from_fn(n, |_, _| rng.gen_range(-9i64..=9));
    Matrix::from_fn(n, |i, j| b.get(i, j) - b.get(j, i))
}

pub fn skew_from_integers<T: ScalarRing>(m: &Matrix<i64>) -> SkewMatrix<T> {
    SkewMatrix::from_upper(m.n(), |i, j| T::from_integer(*m.get(i, j)))
}

/// The float bench input: integer entries divided by `9·√n`.
pub fn scaled_float_skew(m: &Matrix<i64>) -> SkewMatrix<f64> {
    let scale = 9.0 * (m.n().max(1) as f64).sqrt();
    SkewMatrix::from_upper(m.n(), |i, j| *m.get(i, j) as f64 / scale)
}

pub fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Runs `algorithm` once.
pub fn run_once<T: ScalarRing>(algorithm: Algorithm, a: &SkewMatrix<T>) -> Result<T> {
    match algorithm {
        Algorithm::Fl => Ok(pfaffian_fl(a, JForm::Standard)?.value),
        Algorithm::Matchings => pfaffian_matchings(a, true),
        Algorithm::Laplace => pfaffian_laplace(a, 1),
    }
}

/// Median and mean wall time over `reps` runs, plus the last result.
pub fn time_runs<T: ScalarRing>(
    algorithm: Algorithm,
    a: &SkewMatrix<T>,
    reps: usize,
) -> Result<(f64, f64, T)> {
    let mut times = Vec::with_capacity(reps);
    let mut value = T::zero();
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        value = run_once(algorithm, a)?;
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    let median = if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2.0
    };
    let mean = times.iter().sum::<f64>() / times.len() as f64;
    Ok((median, mean, value))
}

fn check_caps(config: &BenchConfig) -> Result<()> {
    if config.override_caps {
        return Ok(());
    }
    for &alg in &config.algorithms {
        if let Some(cap) = alg.cap() {
            if let Some(&n) = config.sizes.iter().find(|&&n| n > cap) {
                return Err(Error::CapExceeded {
                    algorithm: alg.name(),
                    n,
                    cap,
                });
            }
        }
    }
    Ok(())
}

fn bench_size<T: ScalarRing + fmt::Display>(
    config: &BenchConfig,
    a: &SkewMatrix<T>,
    canonical: impl Fn(&T) -> Result<String>,
) -> Result<Vec<BenchRecord>> {
    let mut records: Vec<BenchRecord> = Vec::new();
    for &alg in &config.algorithms {
        let (median, mean, value) = time_runs(alg, a, config.reps)?;
        let d = digest(&canonical(&value)?);
        if config.ring.is_exact() {
            if let Some(first) = records.first() {
                if first.digest != d {
                    return Err(Error::Consistency(format!(
                        "n = {}: {} and {} disagree",
                        a.n(),
                        first.algorithm,
                        alg
                    )));
                }
            }
        }
        records.push(BenchRecord {
            algorithm: alg,
            n: a.n(),
            ring: config.ring,
            seconds: median,
            mean_seconds: mean,
            reps: config.reps.max(1),
            digest: d,
            threads: config.threads,
        });
    }
    Ok(records)
}

/// Runs every algorithm on every size inside a pool of `config.threads`
/// threads. Digests of exact rings must agree across algorithms.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.threads == 0 {
        return Err(Error::InvalidArgument("threads must be positive".into()));
    }
    if config.algorithms.is_empty() {
        return Err(Error::InvalidArgument("no algorithms selected".into()));
    }
    check_caps(config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut records = Vec::new();
    for &n in &config.sizes {
        let ints = random_skew_integers(n, &mut rng);
        let batch = pool.install(|| match config.ring {
            BenchRing::Rational => {
                bench_size(config, &skew_from_integers::<Rational>(&ints), |v| {
                    Ok(v.to_string())
                })
            }
            BenchRing::Integer => bench_size(
                config,
                &skew_from_integers::<RationalizedInteger>(&ints),
                |v| Ok(v.to_integer()?.to_string()),
            ),
            BenchRing::Float => {
                bench_size(config, &scaled_float_skew(&ints), |v| Ok(v.to_string()))
            }
        })?;
        records.extend(batch);
    }
    Ok(records)
}
