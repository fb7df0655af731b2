use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use x1poly::operators::WeightSpec;
use x1poly::scalar::{fmt_field, fmt_rational, ratio_to_f64};
use x1poly::suite::{run_suite, AnyParams, Suite, SuiteOptions};
use x1poly::x1::{Family, Params};
use x1poly::{Error, Exec, Field, Poly, Rational, Scalar};

#[derive(Debug, Parser)]
#[command(name = "x1poly", version, about = "X1-Jacobi and X1-Laguerre polynomials: tables and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print coefficients of the members in a degree range.
    Gen {
        #[command(flatten)]
        params: ParamArgs,
        /// Degree or inclusive range, e.g. `3` or `1..3`.
        #[arg(long, default_value = "1..3")]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and emit a report.
    Check {
        /// ode, orth, ladder, factor, rodrigues, recur, norms, zeros, pearson, complete or all.
        suite: Suite,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Tolerance for quadrature checks; exact checks ignore it.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run every case on the calling thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Sample one member and its weight on a grid, as CSV.
    Table {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        /// Inclusive range `lo..hi`.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value = "1/10")]
        step: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Rational (`1/2`) or decimal (`0.5`); decimals select the float backend.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<Scalar>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Jacobi,
    Laguerre,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Exit-code class of a failure.
enum Failure {
    Usage(String),
    Runtime(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::Parse(_) | Error::BackendMismatch => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl ParamArgs {
    fn resolve(&self) -> Result<AnyParams, Failure> {
        let need = |v: &Option<Scalar>, name: &str, fam: &str| {
            v.clone().ok_or_else(|| Failure::Usage(format!("--{name} is required for --family {fam}")))
        };
        let p = match self.family {
            FamilyArg::Jacobi => {
                if self.k.is_some() {
                    return Err(Failure::Usage("--k applies only to --family laguerre".into()));
                }
                AnyParams::jacobi(&need(&self.alpha, "alpha", "jacobi")?, &need(&self.beta, "beta", "jacobi")?)?
            }
            FamilyArg::Laguerre => {
                if self.alpha.is_some() || self.beta.is_some() {
                    return Err(Failure::Usage("--alpha/--beta apply only to --family jacobi".into()));
                }
                AnyParams::laguerre(&need(&self.k, "k", "laguerre")?)?
            }
        };
        Ok(p)
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("cannot parse degree range {s:?}; expected `n` or `lo..hi`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(Failure::Usage(format!("degree range {s:?} must satisfy 1 <= lo <= hi")));
    }
    Ok((lo, hi))
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Runtime(e.to_string())),
    }
}

fn csv_rows(rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for r in rows {
        w.write_record(r).map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Runtime(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Runtime(e.to_string()))
}

fn render_members<T: Field>(p: &Params<T>, lo: usize, hi: usize) -> Result<Vec<(usize, Poly<T>)>, Failure> {
    let all = p.x1_seq(hi)?;
    Ok((lo..=hi).map(|n| (n, all[n - 1].clone())).collect())
}

fn cmd_gen(params: &AnyParams, range: &str, format: Format, out: &Option<PathBuf>) -> Result<(), Failure> {
    let (lo, hi) = parse_range(range)?;
    let rows: Vec<(usize, Vec<String>, String)> = match params {
        AnyParams::Exact(p) => render_members(p, lo, hi)?
            .into_iter()
            .map(|(n, q)| (n, q.coeffs().iter().map(fmt_rational).collect(), q.to_string()))
            .collect(),
        AnyParams::Float(p) => render_members(p, lo, hi)?
            .into_iter()
            .map(|(n, q)| (n, q.coeffs().iter().map(fmt_field).collect(), q.to_string()))
            .collect(),
    };
    let body = match format {
        Format::Json => {
            let polys: Vec<_> = rows
                .iter()
                .map(|(n, c, s)| json!({ "n": n, "coefficients": c, "polynomial": s }))
                .collect();
            let doc = json!({
                "family": params.family().to_string(),
                "backend": params.backend(),
                "params": params.describe(),
                "order": "ascending",
                "polynomials": polys,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        Format::Csv => csv_rows(&rows.iter().map(|(_, c, _)| c.clone()).collect::<Vec<_>>())?,
        Format::Text => rows.iter().map(|(n, _, s)| format!("{n}: {s}\n")).collect(),
    };
    emit(out, &body)
}

fn cmd_check(
    suite: Suite,
    params: &AnyParams,
    opts: SuiteOptions,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let mut report = run_suite(suite, params, &opts);
    report.timestamp = Some(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    let body = match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    emit(out, &body)?;
    if format != Format::Text {
        eprint!("{}", report.to_text());
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn grid_points(grid: &str, step: &str) -> Result<Vec<Scalar>, Failure> {
    let (lo, hi) = grid
        .split_once("..")
        .ok_or_else(|| Failure::Usage(format!("cannot parse grid {grid:?}; expected `lo..hi`")))?;
    let lo: Scalar = lo.parse()?;
    let hi: Scalar = hi.parse()?;
    let step: Scalar = step.parse()?;
    if step.to_f64() <= 0.0 {
        return Err(Failure::Usage("--step must be positive".into()));
    }
    if lo.to_f64() > hi.to_f64() {
        return Err(Failure::Usage(format!("grid {grid:?} must satisfy lo <= hi")));
    }
    let count = ((hi.to_f64() - lo.to_f64()) / step.to_f64() + 1e-9).floor() as usize;
    if count > 1_000_000 {
        return Err(Failure::Usage("grid has more than a million points".into()));
    }
    match (&lo, &step) {
        (Scalar::Exact(l), Scalar::Exact(s)) => Ok((0..=count)
            .map(|i| Scalar::Exact(l.clone() + s.clone() * Rational::from_integer((i as i64).into())))
            .collect()),
        _ => Ok((0..=count).map(|i| Scalar::Float(lo.to_f64() + i as f64 * step.to_f64())).collect()),
    }
}

fn cmd_table(params: &AnyParams, n: usize, grid: &str, step: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let xs = grid_points(grid, step)?;
    let (interval, weight) = match params {
        AnyParams::Exact(p) => (interval_of(p.family()), WeightSpec::for_params(p)),
        AnyParams::Float(p) => (interval_of(p.family()), WeightSpec::for_params(p)),
    };
    if let Some(x) = xs.iter().find(|x| !(interval.0..=interval.1).contains(&x.to_f64())) {
        return Err(Failure::Usage(format!(
            "grid point {x} lies outside the orthogonality interval [{}, {}]",
            interval.0, interval.1
        )));
    }
    let mut rows = vec![vec!["x".to_string(), "value".to_string(), "weight".to_string()]];
    match params {
        AnyParams::Exact(p) => {
            let y = p.x1(n)?.poly;
            for x in &xs {
                let q = match x {
                    Scalar::Exact(q) => q.clone(),
                    Scalar::Float(_) => unreachable!("exact grid for exact parameters"),
                };
                let w = weight.eval(ratio_to_f64(&q));
                rows.push(vec![fmt_rational(&q), fmt_rational(&y.eval(&q)), w.to_string()]);
            }
        }
        AnyParams::Float(p) => {
            let y = p.x1(n)?.poly;
            for x in &xs {
                let v = x.to_f64();
                rows.push(vec![v.to_string(), y.eval(&v).to_string(), weight.eval(v).to_string()]);
            }
        }
    }
    emit(out, &csv_rows(&rows)?)
}

fn interval_of(f: Family) -> (f64, f64) {
    match f {
        Family::Jacobi => (-1.0, 1.0),
        Family::Laguerre => (0.0, f64::INFINITY),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { params, n, format, out } => cmd_gen(&params.resolve()?, &n, format, &out),
        Command::Check { suite, params, nmax, tol, format, out, sequential } => {
            if nmax == 0 {
                return Err(Failure::Usage("--nmax must be at least 1".into()));
            }
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Usage("--tol must be positive".into()));
            }
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            cmd_check(suite, &params.resolve()?, SuiteOptions { nmax, tol, exec }, format, &out)
        }
        Command::Table { params, n, grid, step, out } => cmd_table(&params.resolve()?, n, &grid, &step, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
