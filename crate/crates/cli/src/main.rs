//! `domtab`: counts, enumeration, bijections and cyclic sieving checks for
//! domino tableaux.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use domtab::tableaux::Partition;
use domtab::Error;

use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "domtab",
    version,
    about = "Exact computations on domino tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShapeArgs {
    /// Comma-separated parts, e.g. 5,5,3,3,2.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,

    /// Rectangle as ROWSxCOLS, e.g. 2x5.
    #[arg(long, value_parser = parse_rect)]
    rect: Option<Partition>,
}

impl ShapeArgs {
    fn shape(self) -> Partition {
        self.lambda
            .or(self.rect)
            .expect("clap enforces one shape flag")
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of domino tableaux of a shape by closed form.
    Count {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Cross-check against a count over all tilings.
        #[arg(long)]
        brute: bool,
    },
    /// List the domino tableaux of a shape in canonical order.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Show at most this many tableaux; the total stays exact.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Orbits of the cyclic shift on tableaux of shape (n, n).
    Orbits {
        #[arg(long)]
        n: u32,
    },
    /// Check the cyclic sieving phenomenon for (n, n).
    VerifyCsp {
        #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
        n: Option<u32>,
        /// Check every n from 1 up to this value.
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Check the Catalan and Fibonacci composition sums for 1..=n-max.
    Identities {
        #[arg(long)]
        n_max: u32,
    },
    /// Send a tableau to its pair of increasing tableaux. Reads the tableau
    /// as JSON from standard input unless a shape and index are given.
    Gamma {
        #[arg(long, value_parser = parse_partition, requires = "index")]
        lambda: Option<Partition>,
        /// Zero-based position in the canonical enumeration order.
        #[arg(long, requires = "lambda")]
        index: Option<usize>,
    },
    /// Probe the candidate sieving polynomial for the 2k x n rectangle.
    Conjecture {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Additional cyclic group order to test; kn is always tested.
        #[arg(long)]
        order: Option<u64>,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_rect(s: &str) -> Result<Partition, String> {
    let (rows, cols) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected ROWSxCOLS, got {s:?}"))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<u32>()
            .map_err(|_| format!("not a nonnegative integer: {v:?}"))
    };
    Ok(Partition::rectangle(parse(rows)?, parse(cols)?))
}

fn positive(name: &str, v: u32) -> Result<u32, Error> {
    if v == 0 {
        Err(Error::OutOfRange(format!("--{name} must be positive")))
    } else {
        Ok(v)
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Count { shape, brute } => commands::count(&shape.shape(), brute),
        Command::Enumerate { shape, limit } => commands::enumerate(&shape.shape(), limit),
        Command::Orbits { n } => commands::orbit_report(positive("n", n)?),
        Command::VerifyCsp { n, n_max } => match (n, n_max) {
            (Some(n), _) => commands::csp(vec![positive("n", n)?], true),
            (None, Some(m)) => commands::csp((1..=positive("n-max", m)?).collect(), false),
            (None, None) => unreachable!("clap requires one of --n, --n-max"),
        },
        Command::Identities { n_max } => commands::identities(n_max),
        Command::Gamma { lambda, index } => {
            let tableau = match (lambda, index) {
                (Some(shape), Some(i)) => commands::tableau_by_index(&shape, i)?,
                _ => {
                    let mut input = String::new();
                    io::stdin()
                        .read_to_string(&mut input)
                        .map_err(|e| Error::InvalidTableau(format!("reading stdin: {e}")))?;
                    commands::read_tableau(&input)?
                }
            };
            commands::gamma_report(&tableau)
        }
        Command::Conjecture { k, n, order } => {
            commands::conjecture(positive("k", k)?, positive("n", n)?, order)
        }
    }
}

fn emit(report: &Report, format: Format, out: Option<PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            report.write(format, &mut w)?;
            w.flush()
        }
        None => {
            let mut w = io::stdout().lock();
            report.write(format, &mut w)?;
            w.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e @ Error::Internal(_)) => {
            eprintln!("domtab: {e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            eprintln!("domtab: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&report, cli.format, cli.out) {
        eprintln!("domtab: writing output: {e}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
