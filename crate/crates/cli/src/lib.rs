//! Command-line front end for `squareice`.
//!
//! [`run`] is the whole program; `main` only wires it to the process. Exit
//! codes: 0 when everything verified, 1 when an identity was falsified, 2 for
//! usage and input errors.

mod report;
mod suite;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use squareice::fschur::{
    default_a_values, expand_in_factorial_basis, factorial_schur, natural_columns, Target,
};
use squareice::lattice::{
    delta_normalized, enumerate_states_in, partition_function_in, BoundarySpec, RectWeights,
};
use squareice::shapes::{enumerate_gt, enumerate_staircases};
use squareice::yangbaxter::BoundarySextuple;
use squareice::{lattice, LaurentPoly, Partition, Rational};

pub use report::{CheckRecord, Report};
pub use suite::{verify_all, verify_all_with, Bounds, Weights};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "SQUAREICE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "squareice",
    version,
    about = "Square ice partition functions and factorial Schur functions"
)]
struct Cli {
    /// Print line-delimited JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the report as line-delimited JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the ice states, patterns or staircases for λ.
    Enumerate {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Object::States)]
        what: Object,
        #[arg(long, value_enum, default_value_t = StrategyArg::ViaGt)]
        strategy: StrategyArg,
        /// Number of columns (defaults to n + λ_1).
        #[arg(long)]
        m: Option<usize>,
    },
    /// The partition function Z_λ(x|a).
    Z {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = StrategyArg::ViaGt)]
        strategy: StrategyArg,
        /// Number of columns (defaults to n + λ_1).
        #[arg(long)]
        m: Option<usize>,
    },
    /// The factorial Schur function s_λ(x|a).
    Schur {
        #[command(flatten)]
        shape: Shape,
        /// Number of column variables (defaults to n + λ_1).
        #[arg(long)]
        na: Option<usize>,
    },
    /// Counts and round trips between patterns, staircases and ice states.
    Bijection {
        #[command(flatten)]
        shape: Shape,
    },
    /// Coefficients in the factorial Schur basis at numeric column values.
    Expand {
        /// Number of row variables.
        #[arg(long)]
        n: usize,
        /// Degree bound (defaults to |λ| with --lambda).
        #[arg(long)]
        degree: Option<u32>,
        /// Column values, comma separated (defaults to 1,2,5,11,..).
        #[arg(long = "a", value_delimiter = ',', value_parser = parse_rational)]
        a_values: Vec<Rational>,
        #[command(flatten)]
        input: ExpandInput,
    },
    /// Check an identity.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ExpandInput {
    /// Expand x^{-δ} Z_λ.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    /// Expand the polynomial in this JSON file.
    #[arg(long, value_name = "FILE")]
    poly: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Z_λ a^{(λ+ρ)'} = x^δ s_λ(x|a).
    Main {
        #[command(flatten)]
        shape: Shape,
    },
    /// The star-triangle relation for all 20 boundary conditions, or one.
    YangBaxter {
        /// Six-bit mask, bit k set when the k-th of α..ζ carries a hydrogen.
        #[arg(long = "case")]
        case: Option<u8>,
    },
    /// s_λ and Z_λ at x = a_μ.
    Vanishing {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = TargetArg::Both)]
        target: TargetArg,
    },
    /// x^{-δ} Z_λ is fixed by every adjacent transposition.
    Symmetry {
        #[command(flatten)]
        shape: Shape,
    },
    /// Every check for all partitions within the bounds.
    All {
        #[arg(long, default_value_t = Bounds::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = Bounds::default().max_part)]
        max_part: u32,
    },
}

#[derive(Debug, Args)]
struct Shape {
    /// Number of row variables.
    #[arg(long)]
    n: usize,
    /// Parts of λ, comma separated; missing trailing zeros are filled in.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Object {
    States,
    Gt,
    Staircases,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    ViaGt,
    Backtrack,
}

impl From<StrategyArg> for lattice::Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::ViaGt => lattice::Strategy::ViaGt,
            StrategyArg::Backtrack => lattice::Strategy::Backtrack,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Z,
    Schur,
    Both,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
        .map_err(|e: squareice::shapes::ShapeError| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a rational number"))
}

/// A failure after argument parsing: bad input (exit 2) or an I/O error.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

impl Shape {
    fn partition(&self) -> Result<Partition, Failure> {
        if self.n == 0 {
            return Err(usage("--n must be at least 1"));
        }
        if self.lambda.n() > self.n {
            return Err(usage(format!(
                "λ = {} has more than n = {} parts",
                self.lambda, self.n
            )));
        }
        self.lambda.padded(self.n).map_err(usage)
    }
}

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match dispatch(&cli, out, &pool) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .map_err(|_| format!("{THREADS_ENV}={v:?} is not a thread count"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, pool: &rayon::ThreadPool) -> Result<i32, Failure> {
    match &cli.command {
        Command::Enumerate {
            shape,
            what,
            strategy,
            m,
        } => {
            let l = shape.partition()?;
            let lines: Vec<(String, String)> = match what {
                Object::States => {
                    let spec = boundary(&l, *m)?;
                    enumerate_states_in(&spec, (*strategy).into())
                        .map_err(usage)?
                        .into_iter()
                        .map(|s| Ok((s.render(), serde_json::to_string(&s)?)))
                        .collect::<Result<_, serde_json::Error>>()
                        .map_err(usage)?
                }
                Object::Gt => enumerate_gt(&l)
                    .into_iter()
                    .map(|g| Ok((g.to_string(), serde_json::to_string(&g)?)))
                    .collect::<Result<_, serde_json::Error>>()
                    .map_err(usage)?,
                Object::Staircases => enumerate_staircases(&l)
                    .into_iter()
                    .map(|s| Ok((s.to_string(), serde_json::to_string(&s)?)))
                    .collect::<Result<_, serde_json::Error>>()
                    .map_err(usage)?,
            };
            let count = lines.len();
            for (text, js) in lines {
                if cli.json {
                    writeln!(out, "{js}")?;
                } else {
                    writeln!(out, "{text}")?;
                }
            }
            if !cli.json {
                writeln!(out, "{count} objects")?;
            }
            write_out_values(cli, |w| {
                writeln!(w, "{}", json!({"lambda": l, "count": count}))
            })?;
            Ok(0)
        }
        Command::Z { shape, strategy, m } => {
            let l = shape.partition()?;
            let spec = boundary(&l, *m)?;
            let z = partition_function_in(&spec, (*strategy).into(), &RectWeights::default())
                .map_err(usage)?;
            emit_poly(cli, out, "z", &l, &z)?;
            Ok(0)
        }
        Command::Schur { shape, na } => {
            let l = shape.partition()?;
            let s =
                factorial_schur(&l, na.unwrap_or_else(|| natural_columns(&l))).map_err(usage)?;
            emit_poly(cli, out, "schur", &l, &s)?;
            Ok(0)
        }
        Command::Bijection { shape } => {
            let l = shape.partition()?;
            finish(
                cli,
                out,
                Report::new("bijection", vec![suite::bijection_check(&l)]),
                true,
            )
        }
        Command::Expand {
            n,
            degree,
            a_values,
            input,
        } => expand(cli, out, *n, *degree, a_values, input),
        Command::Verify(v) => verify(cli, out, v, pool),
    }
}

fn boundary(l: &Partition, m: Option<usize>) -> Result<BoundarySpec, Failure> {
    match m {
        Some(m) => BoundarySpec::with_columns(l, m).map_err(usage),
        None => Ok(BoundarySpec::for_partition(l)),
    }
}

fn emit_poly(
    cli: &Cli,
    out: &mut dyn Write,
    what: &str,
    l: &Partition,
    p: &LaurentPoly,
) -> io::Result<()> {
    let record = json!({
        "kind": what,
        "lambda": l,
        "canonical": p.render_canonical(),
        "poly": p,
    });
    if cli.json {
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "{}", p.render_canonical())?;
    }
    write_out_values(cli, |w| writeln!(w, "{record}"))
}

fn write_out_values(cli: &Cli, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> io::Result<()> {
    if let Some(path) = &cli.out {
        let mut file = io::BufWriter::new(fs::File::create(path)?);
        f(&mut file)?;
        file.flush()?;
    }
    Ok(())
}

fn expand(
    cli: &Cli,
    out: &mut dyn Write,
    n: usize,
    degree: Option<u32>,
    a_values: &[Rational],
    input: &ExpandInput,
) -> Result<i32, Failure> {
    let (f, degree) = match (&input.lambda, &input.poly) {
        (Some(lambda), _) => {
            let l = Shape {
                n,
                lambda: lambda.clone(),
            }
            .partition()?;
            let spec = BoundarySpec::for_partition(&l);
            let z = partition_function_in(&spec, lattice::Strategy::ViaGt, &RectWeights::default())
                .map_err(usage)?;
            (delta_normalized(&z), degree.unwrap_or(l.size()))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let p: LaurentPoly = serde_json::from_str(&text).map_err(usage)?;
            if p.space().nx() != n {
                return Err(usage(format!(
                    "polynomial has {} row variables, --n is {n}",
                    p.space().nx()
                )));
            }
            let d = match degree {
                Some(d) => d,
                None => p.x_degree().unwrap_or(0).max(0) as u32,
            };
            (p, d)
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let a = if a_values.is_empty() {
        default_a_values(f.space().na().max(n + degree as usize))
    } else {
        a_values.to_vec()
    };
    let e = expand_in_factorial_basis(&f, degree, &a).map_err(usage)?;
    let mut records = Vec::new();
    for (mu, c) in e.nonzero() {
        let record = json!({"mu": mu, "c": c.to_string()});
        if cli.json {
            writeln!(out, "{record}")?;
        } else {
            writeln!(out, "c{mu} = {c}")?;
        }
        records.push(record);
    }
    if !cli.json && records.is_empty() {
        writeln!(out, "all coefficients vanish")?;
    }
    write_out_values(cli, |w| {
        for r in &records {
            writeln!(w, "{r}")?;
        }
        Ok(())
    })?;
    Ok(0)
}

fn verify(
    cli: &Cli,
    out: &mut dyn Write,
    v: &Verify,
    pool: &rayon::ThreadPool,
) -> Result<i32, Failure> {
    let w = Weights::default();
    let report = match v {
        Verify::Main { shape } => {
            Report::new("main", vec![suite::main_check(&shape.partition()?, &w)])
        }
        Verify::YangBaxter { case } => {
            let records = match case {
                Some(mask) => {
                    let b = BoundarySextuple::new(*mask).map_err(usage)?;
                    vec![suite::yang_baxter_case(b, &w)]
                }
                None => suite::yang_baxter_all(&w),
            };
            Report::new("yang-baxter", records)
        }
        Verify::Vanishing { shape, mu, target } => {
            let l = shape.partition()?;
            let mu = Shape {
                n: shape.n,
                lambda: mu.clone(),
            }
            .partition()?;
            let targets: &[Target] = match target {
                TargetArg::Z => &[Target::Z],
                TargetArg::Schur => &[Target::Schur],
                TargetArg::Both => &[Target::Z, Target::Schur],
            };
            let records = targets
                .iter()
                .map(|&t| suite::vanishing_pair(&l, &mu, t))
                .collect();
            Report::new("vanishing", records)
        }
        Verify::Symmetry { shape } => Report::new(
            "symmetry",
            vec![suite::symmetry_check(&shape.partition()?, &w)],
        ),
        Verify::All { max_n, max_part } => {
            if *max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            let bounds = Bounds {
                max_n: *max_n,
                max_part: *max_part,
            };
            pool.install(|| verify_all(bounds))
        }
    };
    finish(cli, out, report, false)
}

/// Prints the report; exit 0 if it passed, 1 otherwise.
fn finish(
    cli: &Cli,
    out: &mut dyn Write,
    report: Report,
    with_values: bool,
) -> Result<i32, Failure> {
    if cli.json {
        report.write_json_lines(out)?;
    } else {
        report.write_human(out)?;
        if with_values {
            for r in &report.records {
                for (k, v) in &r.values {
                    writeln!(out, "  {k}: {v}")?;
                }
            }
        }
    }
    write_out_values(cli, |w| report.write_json_lines(w))?;
    Ok(if report.passed() { 0 } else { 1 })
}
