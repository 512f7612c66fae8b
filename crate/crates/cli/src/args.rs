use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "goat", version, about = "Half-grazing tether ratios for the interior goat problem")]
pub struct Cli {
    /// Root-finding tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,

    /// Output format (default: csv for table, json otherwise)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Monte Carlo seed
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Monte Carlo sample count
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub samples: u64,

    /// Trapezoidal nodes on the contour
    #[arg(long, global = true, default_value_t = 256)]
    pub nodes: usize,

    /// Write output here instead of stdout (required for plot)
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Fraser,
    Contour,
    Oracle,
    Auto,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tether ratio k_n and tether length R = k_n r for one dimension
    Solve {
        #[arg(long)]
        n: f64,
        /// Field radius
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, value_enum, default_value_t = SolveMethod::Auto)]
        method: SolveMethod,
        /// Skip the closed-form branches for n = 0 and n = 1
        #[arg(long)]
        force_numeric: bool,
    },
    /// Sweep k_n over a range of dimensions
    Table {
        #[arg(long, default_value_t = 0.0)]
        n_min: f64,
        #[arg(long, default_value_t = 10.0)]
        n_max: f64,
        #[arg(long, default_value_t = 1.0)]
        step: f64,
    },
    /// Cross-check the angle equation against the lens-volume oracle (and the
    /// contour closed form at n = 2)
    Verify {
        #[arg(long)]
        n: i64,
        /// Largest allowed pairwise |Δk|
        #[arg(long, default_value_t = 1e-8)]
        tol_cross: f64,
        /// Also check the Monte Carlo grazed fraction
        #[arg(long)]
        with_mc: bool,
        /// Include wall-clock timings (makes output non-reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// SVG plot of k_n against n with the √2 asymptote
    Plot {
        #[arg(long, default_value_t = 64.0)]
        n_max: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
    },
}
