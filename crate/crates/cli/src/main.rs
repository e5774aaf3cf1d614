mod scalar;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pfaff_core::bench::{run_bench, to_csv, Algorithm, BenchConfig, BenchRing};
use pfaff_core::euler::{
    builtin_example, euler_form, gauss_bonnet_check, gauss_bonnet_report, CurvatureInput,
};
use pfaff_core::io::{parse_matrix_file, write_matrix, AnyMatrix, RingTag};
use pfaff_core::{char_poly, pfaffian_fl, Error, ErrorKind, JForm, Matrix};

use scalar::CliScalar;

#[derive(Parser)]
#[command(
    name = "pfaff",
    version,
    about = "Division-free determinants and Pfaffians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial coefficients, leading 1 first.
    Charpoly(ComputeArgs),
    /// Determinant.
    Det(ComputeArgs),
    /// Adjugate, written in the matrix file format.
    Adjugate(ComputeArgs),
    /// Pfaffian of a skew-symmetric matrix.
    Pfaffian(ComputeArgs),
    /// Pfaff-adjugate, written in the matrix file format.
    Padj(ComputeArgs),
    /// Seeded timing comparison of Pfaffian algorithms, as CSV.
    Bench(BenchArgs),
    /// Euler form and Gauss-Bonnet comparison for `s2`, `s4`, `flat2` or a curvature file.
    Euler(EulerArgs),
}

#[derive(Args)]
struct ComputeArgs {
    input: PathBuf,
    /// Reinterpret the entries in this ring instead of the file's.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long = "j-form", default_value = "standard")]
    j_form: String,
    /// Replace the input by (A - Aᵀ)/2 before Pfaffian computations.
    #[arg(long)]
    skew_symmetrize: bool,
    /// Absolute tolerance for skew-symmetry of float input.
    #[arg(long, default_value_t = 1e-12)]
    tolerance: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated matrix sizes.
    #[arg(long, value_delimiter = ',', default_value = "4,8,10")]
    sizes: Vec<usize>,
    #[arg(long, default_value = "rational")]
    ring: String,
    /// Comma-separated subset of fl, matchings, laplace.
    #[arg(long, value_delimiter = ',', default_value = "fl,matchings")]
    algorithms: Vec<String>,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    override_caps: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EulerArgs {
    /// Built-in example name or curvature file.
    example: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq)]
enum Op {
    Charpoly,
    Det,
    Adjugate,
    Pfaffian,
    Padj,
}

enum Failure {
    Io(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_j_form(s: &str) -> Result<JForm, Error> {
    match s {
        "standard" => Ok(JForm::Standard),
        "alternative" => Ok(JForm::Alternative),
        _ => Err(Error::InvalidArgument(format!(
            "--j-form must be standard or alternative, got `{s}`"
        ))),
    }
}

fn compute<T: CliScalar>(
    op: Op,
    m: &Matrix<T>,
    exterior_dim: usize,
    args: &ComputeArgs,
) -> Result<(String, Value), Error> {
    match op {
        Op::Charpoly | Op::Det | Op::Adjugate => {
            let r = char_poly(m)?;
            match op {
                Op::Charpoly => {
                    let coeffs = r
                        .coefficients
                        .iter()
                        .map(CliScalar::render)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok((coeffs.join(", "), json!({ "coefficients": coeffs })))
                }
                Op::Det => {
                    let d = r.determinant().render()?;
                    Ok((d.clone(), json!({ "determinant": d })))
                }
                _ => matrix_output(T::wrap(r.adjugate, exterior_dim)?, "adjugate"),
            }
        }
        Op::Pfaffian | Op::Padj => {
            let j = parse_j_form(&args.j_form)?;
            let a = T::admit_skew(m, args.skew_symmetrize, args.tolerance)?;
            let r = pfaffian_fl(&a, j)?;
            if op == Op::Pfaffian {
                let v = r.value.render()?;
                Ok((v.clone(), json!({ "pfaffian": v, "j_form": j.name() })))
            } else {
                let padj = r.pfaff_adjugate.unwrap_or_else(|| Matrix::zeros(a.n()));
                matrix_output(T::wrap(padj, exterior_dim)?, "pfaff_adjugate")
            }
        }
    }
}

fn matrix_output(m: AnyMatrix, key: &str) -> Result<(String, Value), Error> {
    let text = write_matrix(&m);
    let n = m.n();
    let texts = m.entry_texts();
    let rows: Vec<&[String]> = texts.chunks(n.max(1)).collect();
    let value = json!({ key: { "ring": m.tag().to_string(), "size": n, "entries": rows } });
    Ok((text.trim_end().to_string(), value))
}

fn run_compute(op: Op, args: &ComputeArgs) -> Result<(String, Value), Failure> {
    let text = read(&args.input)?;
    let ring = args
        .ring
        .as_deref()
        .map(str::parse::<RingTag>)
        .transpose()?;
    let file = parse_matrix_file(&text, ring)?;
    let out = match &file.matrix {
        AnyMatrix::Rational(m) => compute(op, m, 0, args),
        AnyMatrix::Integer(m) => compute(op, m, 0, args),
        AnyMatrix::Float(m) => compute(op, m, 0, args),
        AnyMatrix::Polynomial(m) => compute(op, m, 0, args),
        AnyMatrix::Exterior(d, m) => compute(op, m, *d, args),
    }?;
    Ok(out)
}

fn run_bench_cmd(args: &BenchArgs) -> Result<(String, Value), Failure> {
    let algorithms = args
        .algorithms
        .iter()
        .map(|s| s.parse::<Algorithm>())
        .collect::<Result<Vec<_>, _>>()?;
    let config = BenchConfig {
        sizes: args.sizes.clone(),
        ring: args.ring.parse::<BenchRing>()?,
        algorithms,
        reps: args.reps,
        seed: args.seed,
        threads: args.threads,
        override_caps: args.override_caps,
    };
    let records = run_bench(&config)?;
    let csv = to_csv(&records, args.seed);
    let rows: Vec<Value> = records
        .iter()
        .map(|r| {
            json!({
                "algorithm": r.algorithm.name(),
                "n": r.n,
                "ring": r.ring.name(),
                "seconds": r.seconds,
                "mean_seconds": r.mean_seconds,
                "reps": r.reps,
                "digest": r.digest,
                "threads": r.threads,
            })
        })
        .collect();
    let value = json!({ "prng": pfaff_core::bench::PRNG_NAME, "seed": args.seed, "records": rows });
    Ok((csv.trim_end().to_string(), value))
}

fn run_euler(args: &EulerArgs) -> Result<(String, Value), Failure> {
    let mut lines = Vec::new();
    let mut value = json!({});
    if let Ok(example) = builtin_example(&args.example) {
        let result = euler_form(&example.input)?;
        let report = gauss_bonnet_check(&example)?;
        lines.push(format!("example: {}", example.name));
        lines.push(format!("n: {}", report.n));
        lines.push(format!("euler form: {}", result.form));
        lines.push(format!("top coefficient: {}", report.top_coefficient));
        lines.push(format!("volume: {}", example.volume));
        lines.push(format!("integral: {}", report.integral));
        lines.push(format!("expected: {}", report.expected));
        lines.push(format!(
            "relative difference: {:e}",
            report.relative_difference
        ));
        value = json!({
            "example": example.name,
            "n": report.n,
            "euler_form": result.form.to_string(),
            "top_coefficient": report.top_coefficient.to_string(),
            "volume": example.volume,
            "integral": report.integral,
            "expected": report.expected,
            "relative_difference": report.relative_difference,
        });
    } else {
        let path = Path::new(&args.example);
        if !path.exists() {
            return Err(Failure::Io(format!(
                "`{}` is neither a built-in example (s2, s4, flat2) nor a file",
                args.example
            )));
        }
        let file = parse_matrix_file(&read(path)?, None)?;
        let AnyMatrix::Exterior(_, omega) = file.matrix else {
            return Err(
                Error::InvalidArgument("curvature files need `ring exterior:<n>`".into()).into(),
            );
        };
        let input = CurvatureInput::new(omega, file.gram)?;
        let result = euler_form(&input)?;
        let n = input.n();
        lines.push(format!("n: {n}"));
        lines.push(format!("euler form: {}", result.form));
        lines.push(format!("top coefficient: {}", result.top_coefficient));
        value["n"] = json!(n);
        value["euler_form"] = json!(result.form.to_string());
        value["top_coefficient"] = json!(result.top_coefficient.to_string());
        // A vanishing form integrates to zero whatever the volume.
        let volume = file.volume.or_else(|| result.form.is_zero().then_some(0.0));
        if let Some(volume) = volume {
            let integral = result.clone().with_volume(volume).gauss_bonnet_integral;
            let integral = integral.unwrap_or_default();
            lines.push(format!("integral: {integral}"));
            value["integral"] = json!(integral);
            if let Some(chi) = file.euler_characteristic {
                let report = gauss_bonnet_report(n, result.top_coefficient, volume, chi)?;
                lines.push(format!("expected: {}", report.expected));
                lines.push(format!(
                    "relative difference: {:e}",
                    report.relative_difference
                ));
                value["expected"] = json!(report.expected);
                value["relative_difference"] = json!(report.relative_difference);
            }
        }
    }
    Ok((lines.join("\n"), value))
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Io(_) => 1,
        Failure::Core(e) => match e.kind() {
            ErrorKind::Parse => 2,
            ErrorKind::Validation => 3,
            ErrorKind::Consistency => 4,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, json) = match &cli.command {
        Command::Charpoly(a) => (run_compute(Op::Charpoly, a), a.json),
        Command::Det(a) => (run_compute(Op::Det, a), a.json),
        Command::Adjugate(a) => (run_compute(Op::Adjugate, a), a.json),
        Command::Pfaffian(a) => (run_compute(Op::Pfaffian, a), a.json),
        Command::Padj(a) => (run_compute(Op::Padj, a), a.json),
        Command::Bench(a) => (run_bench_cmd(a), a.json),
        Command::Euler(a) => (run_euler(a), a.json),
    };
    match outcome {
        Ok((text, value)) => {
            if json {
                println!("{value}");
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Core(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
