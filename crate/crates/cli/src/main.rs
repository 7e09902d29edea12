//! `ratshuffle`: enumerate rational parking functions, compute `F(D; t)` and
//! `F_{m/n}(q, t)` in the Schur basis, and run the identity sweeps.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ratshuffle::engine::{self, check_budget, DEFAULT_BUDGET};
use ratshuffle::parking::{enumerate_dyck_paths, enumerate_parking_functions};
use ratshuffle::{DyckPath, Error, Partition};

use render::{Payload, Rendered};

#[derive(Parser, Debug)]
#[command(name = "ratshuffle", version, about = "Rational parking functions and their Schur expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every m/n Dyck path with its area.
    Paths(Common),
    /// List every m/n parking function with area, dinv and inverse descents.
    Parkfns(Common),
    /// F(D; t) for every path, or for the one given by --path.
    ComputeFd {
        #[command(flatten)]
        common: Common,
        /// Row lengths of a single path, e.g. 2,2,1 (empty string for the empty path).
        #[arg(long)]
        path: Option<String>,
    },
    /// F_{m/n}(q, t) in the Schur basis.
    ComputeFmn(Common),
    /// Run every identity check over all paths; exit 1 on any failure.
    Verify(Common),
    /// Report q<->t symmetry and the comparison with F_{n/m} (informational).
    Symmetries(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long = "m", value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long = "n", value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of parking functions m^(n-1) to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A validated invocation.
struct RunConfig {
    command: &'static str,
    common: Common,
    path: Option<DyckPath>,
}

enum Failure {
    Invalid(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteMismatch { .. } | Error::NotSymmetric => Failure::Verification(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn parse_path(text: &str, m: u32, n: u32) -> Result<DyckPath, Failure> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Result<Vec<usize>, _> = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    let parts = parts.map_err(|e| Failure::Invalid(format!("cannot parse --path {text:?}: {e}")))?;
    Ok(DyckPath::new(m, n, Partition::new(parts)?)?)
}

fn configure(cli: Cli) -> Result<RunConfig, Failure> {
    let (command, common, path) = match cli.command {
        Command::Paths(c) => ("paths", c, None),
        Command::Parkfns(c) => ("parkfns", c, None),
        Command::ComputeFd { common, path } => ("compute-fd", common, path),
        Command::ComputeFmn(c) => ("compute-fmn", c, None),
        Command::Verify(c) => ("verify", c, None),
        Command::Symmetries(c) => ("symmetries", c, None),
    };
    let (m, n) = (common.m, common.n);
    if num_gcd(m, n) != 1 {
        return Err(Error::NotCoprime { m, n }.into());
    }
    let path = path.map(|p| parse_path(&p, m, n)).transpose()?;
    Ok(RunConfig { command, common, path })
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn execute(cfg: &RunConfig) -> Result<(Payload, bool), Failure> {
    let Common { m, n, budget, .. } = cfg.common;
    let payload = match cfg.command {
        "paths" => Payload::Paths(enumerate_dyck_paths(m, n)?),
        "parkfns" => {
            check_budget(m, n, budget)?;
            Payload::ParkFns(enumerate_parking_functions(m, n)?)
        }
        "compute-fd" => {
            let reports = match &cfg.path {
                Some(p) => {
                    check_budget(m, n, budget)?;
                    vec![engine::f_of_path(p)?]
                }
                None => {
                    check_budget(m, n, budget)?;
                    engine::path_reports(m, n)?
                }
            };
            Payload::PathExpansions(reports)
        }
        "compute-fmn" => {
            check_budget(m, n, budget)?;
            Payload::Total(engine::f_of_mn(m, n)?)
        }
        "verify" => {
            let report = engine::verify_identities(m, n, budget)?;
            let ok = report.passed();
            return Ok((Payload::Verify(report), ok));
        }
        "symmetries" => Payload::Symmetries(engine::exploratory_symmetries(m, n, budget)?),
        other => unreachable!("unknown command {other}"),
    };
    Ok((payload, true))
}

fn emit(cfg: &RunConfig, out: &Rendered) -> Result<(), Failure> {
    match &cfg.common.out {
        Some(file) => std::fs::write(file, out.as_bytes())
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", file.display()))),
        None => std::io::stdout()
            .write_all(out.as_bytes())
            .map_err(|e| Failure::Invalid(format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure(cli).and_then(|cfg| {
        let (payload, ok) = execute(&cfg)?;
        let rendered = render::render(cfg.command, cfg.common.m, cfg.common.n, cfg.common.format, &payload);
        emit(&cfg, &rendered)?;
        if ok {
            Ok(())
        } else {
            Err(Failure::Verification("verification failed".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
