mod commands;
mod input;
mod report;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::commands::{bargmann, counter, os, path, su11, tube};
use crate::report::Report;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl From<osdual::Error> for CliError {
    fn from(e: osdual::Error) -> Self {
        match e {
            osdual::Error::InvalidInput(_) | osdual::Error::InvalidRank { .. } => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "osdual", version, about = "Reflection positivity and OS duality verification suite")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    group: Group,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Override the main tolerance of the command's checks.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Quadrature nodes per axis (default: OSDUAL_NODES or 200).
    #[arg(long, global = true)]
    pub nodes: Option<usize>,
    /// Emit the JSON report (default for everything except tables).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV: the table if the command has one, otherwise the checks.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report elapsed_ms as 0 so that output is reproducible byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

impl Global {
    pub fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub fn nodes(&self) -> usize {
        self.nodes.unwrap_or_else(osdual::numerics::default_nodes)
    }
}

#[derive(Subcommand)]
enum Group {
    /// OS systems, quotients, induced operators and numerical primitives.
    Os {
        #[command(subcommand)]
        action: os::Action,
    },
    /// Gaussian path measure.
    Path {
        #[command(subcommand)]
        action: path::Action,
    },
    /// Complementary series of SU(1,1).
    Su11 {
        #[command(subcommand)]
        action: su11::Action,
    },
    /// Heat kernel and Segal–Bargmann transform.
    Bargmann {
        #[command(subcommand)]
        action: bargmann::Action,
    },
    /// Tube-type structure constants.
    Tube {
        #[command(subcommand)]
        action: tube::Action,
    },
    /// Counterexamples: ax+b, projection fields, Heisenberg group.
    Counter {
        #[command(subcommand)]
        action: counter::Action,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    match &cli.group {
        Group::Os { action } => os::run(action, g),
        Group::Path { action } => path::run(action, g),
        Group::Su11 { action } => su11::run(action, g),
        Group::Bargmann { action } => bargmann::run(action, g),
        Group::Tube { action } => tube::run(action, g),
        Group::Counter { action } => counter::run(action, g),
    }
}

fn emit(report: &Report, g: &Global) -> std::io::Result<()> {
    let csv = g.csv || (!g.json && report.table.is_some());
    let mut sink: Box<dyn Write> = match &g.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    };
    if csv {
        report.write_csv(&mut sink)?;
    } else {
        report.write_json(&mut sink)?;
    }
    sink.flush()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = std::panic::catch_unwind(|| run(&cli));
    let mut report = match result {
        Ok(Ok(r)) => r,
        Ok(Err(CliError::Usage(msg))) => {
            eprintln!("osdual: {msg}");
            return ExitCode::from(2);
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("osdual: internal error: {msg}");
            return ExitCode::from(3);
        }
        Err(_) => {
            eprintln!("osdual: internal error");
            return ExitCode::from(3);
        }
    };
    report.elapsed_ms = if cli.global.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    if let Err(e) = emit(&report, &cli.global) {
        eprintln!("osdual: cannot write report: {e}");
        return ExitCode::from(3);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
