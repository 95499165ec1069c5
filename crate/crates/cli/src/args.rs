use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubicmap::WeightId;

pub const DEFAULT_DEPTH: usize = 20;
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(
    name = "cubicmap",
    version,
    about = "Exact recurrence coefficients, moments and the cubic Chebyshev mapping"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Tolerance for numeric checks.
    #[arg(long, global = true, env = "CUBICMAP_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact moments mu_0..mu_{2N} of a weight.
    Moments {
        #[arg(long, value_enum)]
        weight: WeightArg,

        /// Emit moments up to index 2N.
        #[arg(long, visible_alias = "n", env = "CUBICMAP_DEPTH", default_value_t = DEFAULT_DEPTH)]
        count: usize,
    },

    /// Recurrence coefficients through index 3N+2 by both routes.
    Gammas {
        #[arg(long, visible_alias = "count", env = "CUBICMAP_DEPTH", default_value_t = DEFAULT_DEPTH, value_parser = parse_depth)]
        n: usize,

        /// Which table to emit in csv format.
        #[arg(long, value_enum, default_value_t = Table::Routes)]
        table: Table,

        /// Perturb the P moment mu_k by sqrt(2)/1000 before the direct route.
        #[arg(long, hide = true)]
        corrupt_moment: Option<usize>,
    },

    /// Run one of the verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,

        #[arg(long, visible_alias = "count", env = "CUBICMAP_DEPTH", default_value_t = DEFAULT_DEPTH, value_parser = parse_depth)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightArg {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
}

impl From<WeightArg> for WeightId {
    fn from(w: WeightArg) -> Self {
        match w {
            WeightArg::P => WeightId::P,
            WeightArg::Q => WeightId::Q,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    /// n, gamma_chain, gamma_direct, agree
    Routes,
    /// Per-n Hankel determinant, s, g and gamma triple
    Ledger,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Conjecture,
    Mapping,
    Orthogonality,
    Weights,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(format!(
            "tolerance must be a positive finite number, got {s}"
        ))
    }
}

fn parse_depth(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n >= 1 {
        Ok(n)
    } else {
        Err("depth must be at least 1".into())
    }
}
