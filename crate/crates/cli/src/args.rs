use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use trigraph::{Algorithm, DEFAULT_MATRIX_BUDGET};

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: trigraph::Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "trigraph", version, about = "Triangle detection, listing and counting")]
pub struct Cli {
    /// Emit structured JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest vertex count for which an adjacency matrix is built.
    #[arg(long, global = true, default_value_t = DEFAULT_MATRIX_BUDGET)]
    pub matrix_budget: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetectMethod {
    Matrix,
    Sampling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    CliquePlus,
    LayeredCliques,
    Gnm,
    Gnp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report one triangle, or `none`.
    Detect {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DetectMethod::Matrix)]
        method: DetectMethod,
        #[arg(long, default_value_t = 0.25)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        max_rounds: usize,
    },
    /// Count triangles with one exact algorithm.
    Count {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "hybrid", value_parser = parse_algorithm)]
        algo: Algorithm,
        /// Degree threshold for the ayz algorithm (default ⌈√m⌉).
        #[arg(long)]
        threshold: Option<usize>,
    },
    /// List triangles, one `i j k` per line.
    List {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "hybrid", value_parser = parse_algorithm)]
        algo: Algorithm,
        #[arg(long)]
        threshold: Option<usize>,
        /// Collect and sort before printing.
        #[arg(long)]
        sorted: bool,
        /// Print only the number of triangles.
        #[arg(long)]
        count_only: bool,
    },
    /// Estimate the triangle count by vertex sampling.
    Approx {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0.25)]
        delta: f64,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Sampling probability, replacing n^-delta.
        #[arg(long)]
        p: Option<f64>,
    },
    /// Find a large independent set or a triangle.
    IsOrTriangle {
        #[arg(long = "in")]
        input: PathBuf,
        /// Use the √n-approximation variant.
        #[arg(long)]
        approx: bool,
    },
    /// List complete subgraphs on `ell` vertices.
    Cliques {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Write a generated instance and its certificate sidecar.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge-list destination; the certificate goes to `<out>.cert.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every exact algorithm (and the certificate, when present).
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Certificate sidecar; defaults to `<in>.cert.json` when that file exists.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Time algorithms over a suite of instances.
    Bench {
        /// JSON suite description.
        #[arg(long, conflicts_with = "input")]
        suite: Option<PathBuf>,
        /// Benchmark a single edge-list file instead of a suite.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Comma-separated algorithms; defaults to every exact algorithm except brute.
        #[arg(long, value_delimiter = ',', value_parser = parse_algorithm)]
        algos: Vec<Algorithm>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree, degeneracy and arboricity statistics.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
}
