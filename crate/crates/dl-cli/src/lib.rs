//! Command plumbing for the `dltrace` binary: argument structures, command
//! execution, and the registry of verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 precondition failure, 4 precision exhaustion.

pub mod commands;
pub mod verify;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "dltrace",
    about = "Exact character traces of stratified flag-variety closures and \
             arithmetic intersection numbers over finite and p-adic fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor a polynomial and classify self-reciprocal factors and pairs.
    Factor {
        /// Polynomial in the `p^e:c0,c1,...` format.
        poly: String,
        /// Treat the coefficient field as GF(q^2) with conjugation.
        #[arg(long)]
        conjugate: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Trace of a group element on the closed stratified space.
    Trace {
        /// Family: so-even, so-odd, sp, u.
        kind: String,
        /// Rank parameter n.
        n: usize,
        /// Base field order q (an odd prime here).
        q: u64,
        /// Closed form only, from a characteristic polynomial.
        #[arg(long)]
        charpoly: Option<String>,
        /// Draw a seeded random regular isometry and run the engine.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value = "0")]
        seed: u64,
        /// Read the element from a matrix file (rows `a,b,...;c,d,...`).
        #[arg(long)]
        matrix: Option<String>,
        /// Force both the engine (with brute-force torus counts) and the
        /// closed form, and fail on any disagreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Unitary intersection length: closed formula or full pipeline.
    IntAfl {
        /// Residue characteristic polynomial over GF(q^2).
        #[arg(long)]
        charpoly: Option<String>,
        /// Synthesize a minuscule instance and run the lattice pipeline.
        #[arg(long)]
        synthesize: bool,
        /// Group element as a pi-adic matrix file (`digits@N` entries).
        #[arg(long)]
        matrix: Option<String>,
        /// Cyclic vector file (whitespace-separated pi-adic entries).
        #[arg(long)]
        u: Option<String>,
        /// Hermitian Gram matrix file.
        #[arg(long)]
        form: Option<String>,
        #[arg(long, default_value = "3")]
        q: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
        /// Degree of the residue block when synthesizing.
        #[arg(long, default_value = "3")]
        residue_degree: usize,
        /// Number of unimodular reciprocal-pair blocks when synthesizing.
        #[arg(long, default_value = "1")]
        filler_pairs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Spin-orthogonal intersection length and the residual determinant law.
    IntGspin {
        /// Residue characteristic polynomial over GF(p).
        #[arg(long)]
        charpoly: Option<String>,
        /// Run the reflection-product determinant check instead.
        #[arg(long)]
        check_determinant: bool,
        #[arg(long, default_value = "3")]
        q: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "6")]
        reflections: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Validate a sigma-unbranched datum and echo the derived data.
    Coxeter {
        /// One of the four families (so-even, so-odd, sp, u).
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Datum file in the text format (nodes/edges/sigma/j/l).
        #[arg(long)]
        datum: Option<String>,
        /// Also compute the twisted closure of the top stratum.
        #[arg(long)]
        closure: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Run a verification suite.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        /// Budget: `small`, `full`, or a number.
        #[arg(long, default_value = "small")]
        budget: String,
    },
}

/// Precision for the pi-adic commands, overridable by `DLTRACE_PRECISION`.
pub fn padic_precision() -> usize {
    std::env::var("DLTRACE_PRECISION")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(32)
}

/// Process-level exit classification.
#[derive(Debug)]
pub enum RunError {
    Usage(String),
    Verification(String),
    Precondition(String),
    Precision(String),
}

impl RunError {
    pub fn code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Verification(_) => 1,
            RunError::Precondition(_) => 3,
            RunError::Precision(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            RunError::Usage(m)
            | RunError::Verification(m)
            | RunError::Precondition(m)
            | RunError::Precision(m) => m,
        }
    }
}

pub type RunResult = Result<String, RunError>;
