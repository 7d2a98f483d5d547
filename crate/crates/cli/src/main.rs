use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use oscoh::{catalog, format, Arrangement, WeightVector};

mod commands;
mod weights;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "oscoh", version, about = "Orlik-Solomon cohomology and local system bounds for hyperplane arrangements")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Worker threads for translate searches (0 = all cores)
    #[arg(long, global = true, env = "OSCOH_JOBS")]
    jobs: Option<usize>,
    /// Quotient realized input by its center before use
    #[arg(long, global = true)]
    essentialize: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intersection lattice with Moebius values and dense flags
    Lattice { input: String },
    /// Cohomology of the Orlik-Solomon complex at rational weights
    Oscohom {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Ranks of the complex reduced mod N at integer weights
    Modn {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long = "N", short = 'N')]
        modulus: u64,
    },
    /// Lower and upper bounds for local system Betti numbers
    Bounds {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long = "box", default_value_t = 1)]
        radius: u32,
    },
    /// Non-resonance certificate (exit code 2 when it does not hold)
    Nonres {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Prime for the certificate; defaults to the common denominator when it is prime
        #[arg(long)]
        p: Option<u64>,
    },
    /// Membership in the resonance variety R^q_m
    Resonance {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Symbolic Aomoto matrices on the NBC basis
    Aomoto {
        input: String,
        /// Only this degree
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Write an arrangement file
    Export {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List built-in arrangements
    Catalog,
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Done,
    CertificateFails,
}

/// Catalog name or path to an arrangement file.
pub fn load_input(input: &str, essentialize: bool) -> Result<Arrangement> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return format::parse_arrangement(&text, essentialize).with_context(|| format!("in {input}"));
    }
    catalog::lookup(input).map_err(|e| anyhow!("{e} (not a readable file either)"))
}

pub fn load_weights(arr: &Arrangement, text: &str) -> Result<WeightVector> {
    let lam = weights::parse_weights(text)?;
    if lam.len() != arr.n() {
        bail!("expected {} weights, got {}", arr.n(), lam.len());
    }
    Ok(WeightVector::new(lam))
}

pub fn modulus_u64(w: &WeightVector) -> Result<u64> {
    w.modulus().to_u64().ok_or_else(|| anyhow!("common denominator {} is too large", w.modulus()))
}

pub fn parse_integers(text: &str) -> Result<Vec<BigInt>> {
    let lam = weights::parse_weights(text)?;
    lam.into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(anyhow!("`{x}` is not an integer"))
            }
        })
        .collect()
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    let fmt = cli.format;
    let ess = cli.essentialize;
    match cli.command {
        Command::Lattice { input } => commands::lattice(&load_input(&input, ess)?, &input, fmt),
        Command::Oscohom { input, weights } => commands::oscohom(&load_input(&input, ess)?, &weights, fmt),
        Command::Modn { input, k, modulus } => commands::modn(&load_input(&input, ess)?, &k, modulus, fmt),
        Command::Bounds { input, weights, radius } => {
            commands::bounds(&load_input(&input, ess)?, &weights, radius, fmt)
        }
        Command::Nonres { input, weights, p } => commands::nonres(&load_input(&input, ess)?, &weights, p, fmt),
        Command::Resonance { input, weights, q, m } => {
            commands::resonance(&load_input(&input, ess)?, &weights, q, m, fmt)
        }
        Command::Aomoto { input, degree } => commands::aomoto(&load_input(&input, ess)?, degree, fmt),
        Command::Export { input, output } => commands::export(&load_input(&input, ess)?, output.as_deref()),
        Command::Catalog => commands::list_catalog(fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::CertificateFails) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
