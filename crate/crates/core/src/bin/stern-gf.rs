//! Command-line front end. Results go to stdout as JSON, diagnostics to
//! stderr. Exit codes: 0 success, 1 other failure, 2 state limit exceeded,
//! 3 guess failed, 4 invalid spec.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use stern_gf::cfinite::{pv_classify, CFiniteSeq, NotPvReason, PvVerdict, DEFAULT_HORIZON};
use stern_gf::closure::{
    build_system, guess_gf, solve_gf, stream_terms, BuildError, SolveMethod, StateSystem, DEFAULT_LIMIT,
};
use stern_gf::specfile::SpecFileError;
use stern_gf::stern::{u_alpha_oracle_terms, OracleLimits, ProductSpec, SternError, TargetAlpha};
use stern_gf::{RationalGF, SpecFile, ZPoly};

const HORIZON_VAR: &str = "STERN_GF_HORIZON";

#[derive(Parser)]
#[command(
    name = "stern-gf",
    version,
    about = "Generating functions of shifted correlation sums of Stern-like arrays"
)]
struct Cli {
    /// Also emit human-readable polynomials
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Close the state space and solve for the generating function
    Gf {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// auto, eliminate or fit
        #[arg(long, default_value = "auto")]
        method: SolveMethod,
    },
    /// Export the transfer matrix M and initial vector v
    Matrix {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Terms u(0..=n) from the transfer system
    Terms {
        spec: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Print decimal digit counts instead of the numbers
        #[arg(long)]
        digits_only: bool,
    },
    /// Terms u(0..=n) by expanding F_n directly
    Oracle {
        spec: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = OracleLimits::default().max_coefficients)]
        max_coefficients: usize,
    },
    /// Fit a generating function to brute-force terms u(0..=n)
    Guess {
        spec: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        /// Denominator degree bound (default: as large as the terms support)
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long, default_value_t = OracleLimits::default().max_coefficients)]
        max_coefficients: usize,
    },
    /// Classify the exponent sequence as PV or not
    Pv { spec: PathBuf },
}

enum Failure {
    Limit(Value),
    GuessFailed(String),
    Invalid(String),
    Other(String),
}

impl From<SpecFileError> for Failure {
    fn from(e: SpecFileError) -> Self {
        match e {
            SpecFileError::Io { .. } => Failure::Other(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::LimitExceeded(r) => Failure::Limit(serde_json::to_value(r).expect("report serializes")),
            BuildError::Stern(e) => stern_failure(e),
        }
    }
}

fn stern_failure(e: SternError) -> Failure {
    match e {
        SternError::InvalidSpec(_) | SternError::InvalidAlpha(_) => Failure::Invalid(e.to_string()),
        _ => Failure::Other(e.to_string()),
    }
}

fn main() -> ExitCode {
    // clap's own usage exit code (2) would collide with "limit exceeded"
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{}", serde_json::to_string(&out).expect("output serializes"));
            ExitCode::SUCCESS
        }
        Err(Failure::Limit(report)) => {
            eprintln!("{}", serde_json::to_string(&report).expect("report serializes"));
            ExitCode::from(2)
        }
        Err(Failure::GuessFailed(msg)) => {
            eprintln!("guess failed: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("invalid spec: {msg}");
            ExitCode::from(4)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn horizon() -> Result<usize, Failure> {
    match std::env::var(HORIZON_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Other(format!("{HORIZON_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_HORIZON),
    }
}

fn load(path: &Path) -> Result<(ProductSpec, TargetAlpha), Failure> {
    let file = SpecFile::read(path)?;
    let spec = file.spec_with_horizon(horizon()?)?;
    let alpha = file.alpha()?;
    Ok((spec, alpha))
}

fn system(path: &Path, limit: usize) -> Result<StateSystem, Failure> {
    let (spec, alpha) = load(path)?;
    Ok(build_system(&spec, &alpha, limit)?)
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.cmd {
        Cmd::Gf { spec, limit, method } => {
            let sys = system(spec, *limit)?;
            let solved = solve_gf(&sys, *method).map_err(|e| Failure::Other(e.to_string()))?;
            let mut out = gf_json(&solved.gf, cli.pretty);
            out["dim"] = json!(sys.dim());
            out["method"] = json!(solved.method);
            Ok(out)
        }
        Cmd::Matrix { spec, limit, out } => {
            let sys = system(spec, *limit)?;
            let rows: Vec<Value> = sys
                .rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(|(t, c)| json!([t, big(c)])).collect()))
                .collect();
            let doc = json!({
                "dim": sys.dim(),
                "rows": rows,
                "v": sys.v().iter().map(big).collect::<Vec<_>>(),
                "root": sys.root(),
            });
            match out {
                Some(path) => {
                    let text = serde_json::to_string(&doc).expect("matrix serializes");
                    std::fs::write(path, text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
                    Ok(json!({"dim": sys.dim(), "out": path.display().to_string()}))
                }
                None => Ok(doc),
            }
        }
        Cmd::Terms {
            spec,
            n,
            limit,
            digits_only,
        } => {
            let sys = system(spec, *limit)?;
            Ok(terms_json(&stream_terms(&sys, *n), *digits_only))
        }
        Cmd::Oracle {
            spec,
            n,
            max_coefficients,
        } => {
            let (spec, alpha) = load(spec)?;
            let limits = OracleLimits {
                max_coefficients: *max_coefficients,
            };
            let terms = u_alpha_oracle_terms(&spec, &alpha, *n, limits).map_err(stern_failure)?;
            Ok(terms_json(&terms, false))
        }
        Cmd::Guess {
            spec,
            n,
            max_deg,
            max_coefficients,
        } => {
            let (spec, alpha) = load(spec)?;
            let limits = OracleLimits {
                max_coefficients: *max_coefficients,
            };
            let max_deg = max_deg.unwrap_or((n + 1).saturating_sub(stern_gf::arith::DEFAULT_GUARD + 1) / 2);
            match guess_gf(&spec, &alpha, *n, max_deg, limits) {
                Ok(gf) => Ok(gf_json(&gf, cli.pretty)),
                Err(stern_gf::closure::GuessError::Fit(e)) => Err(Failure::GuessFailed(e.to_string())),
                Err(stern_gf::closure::GuessError::Oracle(e)) => Err(stern_failure(e)),
            }
        }
        Cmd::Pv { spec } => {
            let file = SpecFile::read(spec)?;
            let seq = CFiniteSeq::new(file.seq.init.clone(), file.seq.rec.clone())
                .map_err(|e| Failure::Invalid(format!("seq: {e}")))?;
            let report = pv_classify(&seq);
            let (pv, reason) = match &report.verdict {
                PvVerdict::Pv => (json!(true), Value::Null),
                PvVerdict::NotPv(r) => (json!(false), json!(reason_text(r))),
                PvVerdict::Undecided { margin } => (
                    json!("undecided"),
                    json!(format!("a root lies within {margin:e} of the unit circle")),
                ),
            };
            let roots: Vec<Value> = report
                .roots
                .iter()
                .map(|z| json!({"re": z.re, "im": z.im, "modulus": z.norm()}))
                .collect();
            let mut out = json!({
                "pv": pv,
                "reason": reason,
                "indicial": poly_json(&report.indicial),
                "roots": roots,
            });
            if cli.pretty {
                out["indicial_pretty"] = json!(report.indicial.pretty("X"));
            }
            Ok(out)
        }
    }
}

fn reason_text(r: &NotPvReason) -> String {
    match r {
        NotPvReason::RootOfModulusOne { cyclotomic_index } => {
            format!("root of modulus 1 (divisible by cyclotomic polynomial {cyclotomic_index})")
        }
        NotPvReason::NoRootAboveOne => "no root of modulus greater than 1".into(),
        NotPvReason::SeveralRootsOutside { count } => format!("{count} roots outside the unit circle"),
        NotPvReason::DominantNotPositiveReal => "dominant root is not a positive real".into(),
    }
}

fn big(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

fn poly_json(p: &ZPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn gf_json(gf: &RationalGF, pretty: bool) -> Value {
    let mut out = json!({"num": poly_json(gf.num()), "den": poly_json(gf.den())});
    if pretty {
        out["pretty"] = json!(gf.pretty());
    }
    out
}

fn terms_json(terms: &[BigInt], digits_only: bool) -> Value {
    if digits_only {
        Value::Array(terms.iter().map(|x| json!(x.abs().to_string().len())).collect())
    } else {
        Value::Array(terms.iter().map(big).collect())
    }
}
