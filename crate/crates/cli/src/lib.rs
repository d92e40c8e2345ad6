//! Command-line front end for `hkinv`: every quantity as an exact rational,
//! as a text table or a JSON report.

pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use hkinv::llv::InvolutionCase;
use hkinv::Rational;

pub use commands::{build, Params};
pub use report::{Entry, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COMPUTATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Parses `p`, `-p`, `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let (n, d) = t.split_once('/').unwrap_or((t, "1"));
    let n: num_bigint::BigInt = n
        .trim()
        .parse()
        .map_err(|_| format!("malformed rational `{s}`"))?;
    let d: num_bigint::BigInt = d
        .trim()
        .parse()
        .map_err(|_| format!("malformed rational `{s}`"))?;
    if d == 0.into() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(n, d))
}

fn parse_case(s: &str) -> Result<InvolutionCase, String> {
    s.parse()
        .map_err(|_| format!("unknown case `{s}`, expected natural or opposite"))
}

#[derive(Debug, Parser)]
#[command(
    name = "hkinv",
    version,
    about = "Exact invariants of EPW cubes and their Lagrangian fixed locus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report instead of a table
    #[arg(long, global = true)]
    json: bool,
    /// q(h), the square of the polarization
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    q: Option<Rational>,
    /// Degree [W]·h³ of the Lagrangian class
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    degree: Option<Rational>,
    /// Involution case: natural or opposite
    #[arg(long, global = true, value_parser = parse_case)]
    case: Option<InvolutionCase>,
    /// Write the output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fujiki constants and specialized integrals
    Fujiki,
    /// Top-degree numbers and Chern numbers in the Hodge ring
    Ring,
    /// Degree-8 and degree-10 relations
    Relations,
    /// Betti numbers of the quotient
    Betti,
    /// Euler characteristics of the quotient and of the fixed locus
    Euler,
    /// Class of the Lagrangian fixed locus and the involution case
    Lagrangian,
    /// Chern and Euler invariants of the fixed locus
    FixedLocus,
    /// Central charges on the wall
    Walls {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "-2")]
        beta: Rational,
    },
    /// Spherical classes from the Pell equation
    Pell {
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Ext dimensions from the Mukai pairing
    Ext,
    /// Kuranishi ideal-membership check
    Kuranishi,
    /// Intersection numbers on the symmetric cube of a curve
    Symprod {
        #[arg(long, default_value_t = 10)]
        genus: u64,
    },
    /// Hodge-number relations for the fixed locus
    F3,
    /// Every default computation in one report
    ReportAll,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Fujiki => "fujiki",
            Command::Ring => "ring",
            Command::Relations => "relations",
            Command::Betti => "betti",
            Command::Euler => "euler",
            Command::Lagrangian => "lagrangian",
            Command::FixedLocus => "fixed-locus",
            Command::Walls { .. } => "walls",
            Command::Pell { .. } => "pell",
            Command::Ext => "ext",
            Command::Kuranishi => "kuranishi",
            Command::Symprod { .. } => "symprod",
            Command::F3 => "f3",
            Command::ReportAll => "report-all",
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut params = Params::default();
    if let Some(q) = cli.q {
        params.q = q;
    }
    if let Some(d) = cli.degree {
        params.degree = d;
    }
    params.case = cli.case;
    match &cli.command {
        Command::Walls { beta } => params.beta = beta.clone(),
        Command::Pell { bound } => params.bound = *bound,
        Command::Symprod { genus } => params.genus = *genus,
        _ => {}
    }
    let report = match build(cli.command.name(), &params) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_COMPUTATION;
        }
    };
    let text = if cli.json {
        report.to_json()
    } else {
        report.to_text()
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTATION
        }
    }
}
