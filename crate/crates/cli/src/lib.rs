//! Library side of the `gsplit` binary: argument definitions, file formats,
//! the certificate document and the subcommands themselves.
//!
//! Every subcommand returns its exit code: 0 on a positive answer, 1 on a
//! negative one, 2 when the input cannot be read or the arguments are invalid.

pub mod certificate;
pub mod commands;
pub mod formats;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use certificate::{CertificateDocument, Counters, Verdict};
pub use commands::run;
pub use formats::{Format, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "gsplit",
    version,
    about = "Recognise unipolar and generalised split graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a graph for unipolarity and print a JSON certificate.
    Recognise(RecogniseArgs),
    /// Solve an optimisation problem on a generalised split graph.
    Solve(SolveArgs),
    /// Write a random instance.
    Gen(GenArgs),
    /// Time recognition on planted instances of growing size.
    Bench(BenchArgs),
    /// Compare every algorithm with brute force on small graphs.
    OracleCheck(OracleCheckArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input graph; `-` reads standard input.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RecogniseArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Also test the complement (generalised split graph recognition).
    #[arg(long)]
    pub gsg: bool,
    /// Also write the certificate to this file.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Clique,
    Coloring,
    StableSet,
    CliqueCover,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub problem: Problem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Unipolar,
    Gsg,
    Gnp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplementArg {
    Never,
    Always,
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "unipolar")]
    pub kind: Kind,
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fraction of vertices in the central clique.
    #[arg(long, default_value_t = 0.5)]
    pub central_fraction: f64,
    /// Mean side-clique size.
    #[arg(long, default_value_t = 2.0)]
    pub mean_side_size: f64,
    /// Probability of each central-to-side edge.
    #[arg(long, default_value_t = 0.5)]
    pub p_cross: f64,
    /// Whether `gsg` instances are complemented.
    #[arg(long, value_enum, default_value = "random")]
    pub complement: ComplementArg,
    /// Edge probability for `gnp`.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Toggle this many random vertex pairs after generating.
    #[arg(long, default_value_t = 0)]
    pub perturb: usize,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Write the planted representation here as a certificate document.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Ascending instance sizes.
    #[arg(long, value_delimiter = ',', default_value = "500,1000,2000")]
    pub sizes: Vec<usize>,
    /// Instances per size and kind.
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct OracleCheckArgs {
    /// Check every labeled graph on up to this many vertices.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Random graphs per edge probability.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    /// Vertex count of the random graphs.
    #[arg(long, default_value_t = 10)]
    pub sample_n: usize,
    /// Edge probabilities of the random graphs.
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.5,0.8")]
    pub sample_p: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
