//! `arcseries`: compute and verify Hilbert–Poincaré series of arc algebras.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "arcseries",
    version,
    about = "Hilbert-Poincare series of focussed arc algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Directory for cached Gröbner bases, keyed by spec hash.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Groebner,
    Combinatorial,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    WeightRevlex,
    WeightLex,
}

impl From<OrderArg> for arcseries::poly::MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::WeightRevlex => arcseries::poly::MonomialOrder::WeightRevLex,
            OrderArg::WeightLex => arcseries::poly::MonomialOrder::WeightLex,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Series of the n-fold point y^n = 0.
    Nfold {
        n: u32,
        /// Truncation order N.
        #[arg(long)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = Method::Product)]
        method: Method,
        /// Run every route and fail on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Series of the focussed arc algebra of an ideal spec file.
    Hp {
        spec: PathBuf,
        /// Truncation order N; defaults to the weight bound.
        #[arg(long)]
        trunc: Option<usize>,
        /// Overrides the spec's weight bound.
        #[arg(long)]
        weight_bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = OrderArg::WeightRevlex)]
        order: OrderArg,
    },
    /// Compare both sides of Gordon's identity up to M.
    Gordon {
        k: u32,
        /// Largest m checked.
        #[arg(long, default_value_t = 200)]
        trunc: usize,
    },
    /// The double-point recursion for A_d and B_d.
    Recursion {
        d_max: usize,
        /// Truncation order N.
        #[arg(long)]
        trunc: usize,
        /// Fail unless the limit equals the 1,4 mod 5 product.
        #[arg(long)]
        verify: bool,
    },
    /// The Bell polynomial B_{i,j}.
    Bell { i: u32, j: u32 },
    /// Truncated Gröbner basis of the focussed jet ideal of a spec file.
    Groebner {
        spec: PathBuf,
        /// Overrides the spec's weight bound.
        #[arg(long)]
        weight_bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = OrderArg::WeightRevlex)]
        order: OrderArg,
    },
    /// Run a named verification suite.
    Verify {
        /// nfold, gordon, rogers-ramanujan, andrews-baxter, recursion, bell,
        /// leading-terms, geometry, order, properties or all.
        suite: String,
    },
}

/// Why a command did not succeed, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input files: exit 2.
    Usage(String),
    /// A check ran and failed: exit 1. The payload is printed to stdout.
    Verification(String),
}

impl Failure {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
