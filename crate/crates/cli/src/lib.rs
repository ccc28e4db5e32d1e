//! Argument model, dispatch and report emission for the `smolab` binary.

mod commands;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use smolab::euler::EulerError;
use smolab::groups::GroupError;
use smolab::primes::PrimesError;
use smolab::report::{emit, Format, Report, ReportError};
use smolab::smo::SmoError;

#[derive(Parser, Debug, Clone, Serialize)]
#[command(name = "smolab", version, about = "Multiplicity-one experiments at desk scale")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    #[serde(skip)]
    pub format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; never changes the output.
    #[arg(long, global = true, env = "SMOLAB_WORKERS")]
    #[serde(skip)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Character tables and agreement of irreducible characters.
    Charlab {
        #[command(subcommand)]
        cmd: CharlabCmd,
    },
    /// Natural and Dirichlet densities of prime selectors.
    Density {
        #[command(subcommand)]
        cmd: DensityCmd,
    },
    /// Frobenius class tallies in an abelian field.
    Frobstats(FrobArgs),
    /// Local factors, log expansions and abscissae.
    Euler {
        #[command(subcommand)]
        cmd: EulerCmd,
    },
    /// Multiplicity-one experiments.
    Smo {
        #[command(subcommand)]
        cmd: SmoCmd,
    },
    /// Data generation.
    Data {
        #[command(subcommand)]
        cmd: DataCmd,
    },
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CharlabCmd {
    /// Character table of a group file or catalog expression.
    Table { group: String },
    /// Largest agreement among distinct degree-n irreducibles.
    Extremal {
        group: String,
        #[arg(long)]
        degree: u32,
    },
    /// Agreement bound and orthogonality over the bundled catalog.
    Sweep {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
    },
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityCmd {
    Natural {
        #[arg(long)]
        selector: String,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<u64>,
    },
    Dirichlet {
        #[arg(long)]
        selector: String,
        #[arg(long, value_delimiter = ',', default_value = "1.5,1.375,1.25,1.125,1.0625")]
        s: Vec<f64>,
        #[arg(long, default_value_t = 10_000_000)]
        x: u64,
        #[arg(long, value_enum, default_value_t = CountingArg::Norms)]
        counting: CountingArg,
    },
    /// `sum_{p <= x} p^-s` against `log(1/(s-1))`.
    Primezeta {
        #[arg(long, value_delimiter = ',', default_value = "1.5,1.25,1.1,1.0625")]
        s: Vec<f64>,
        #[arg(long, default_value_t = 10_000_000)]
        x: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountingArg {
    Norms,
    Rational,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct FrobArgs {
    /// Field file or inline `N=..;H=..`.
    pub field: String,
    #[arg(long, default_value_t = 1_000_000)]
    pub x: u64,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerCmd {
    /// Local factor at a complex point.
    Eval {
        #[command(flatten)]
        factor: FactorArgs,
        /// `re`, or `re+imi`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Rightmost pole line of a local factor.
    Poleline {
        #[command(flatten)]
        factor: FactorArgs,
    },
    /// Rankin-Selberg product of two local factors.
    Rs {
        #[command(flatten)]
        factor: FactorArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        with: Vec<String>,
        #[arg(long)]
        unconjugated: bool,
    },
    /// Sign of log-expansion coefficients, and values on the real line.
    Positivity {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "all")]
        selector: String,
        #[arg(long, default_value_t = 1_000_000)]
        m: u64,
        #[arg(long, value_delimiter = ',', default_value = "1.5,2")]
        sigma: Vec<f64>,
    },
    /// Partial log-sums over selected primes with `|alpha| = q^delta`.
    Probe {
        #[arg(long)]
        selector: String,
        /// Exponent as a rational, e.g. `1/4`.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        sigma: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "1e5,1e6,1e7")]
        cutoffs: Vec<f64>,
    },
    /// Exponent of a bound towards Ramanujan.
    Profile {
        name: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct FactorArgs {
    #[arg(long)]
    pub q: f64,
    /// Comma list of complex parameters such as `2,0.5` or `0.6+0.8i`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alphas: Vec<String>,
}

/// One Euler product: Hecke data, Satake data, an abelian field, or zeta.
#[derive(Args, Debug, Clone, Serialize)]
pub struct SourceArgs {
    /// `p,a_p` file of a Hecke eigenform.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// The bundled tau table.
    #[arg(long, conflicts_with = "data")]
    pub tau: bool,
    #[arg(long, default_value_t = 12)]
    pub weight: u32,
    /// `p,q,re,im,...` file of Satake parameters.
    #[arg(long)]
    pub satake: Option<PathBuf>,
    /// Dedekind zeta of an abelian field.
    #[arg(long)]
    pub field: Option<String>,
    /// Use the data itself rather than its Rankin-Selberg square.
    #[arg(long)]
    pub no_rs: bool,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoCmd {
    /// Primes where two local factors differ.
    Compare {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 10_000)]
        x: u64,
    },
    /// Slope of `log L_S(1 + eps)` against `log(1/eps)`.
    Poleorder {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "all")]
        selector: String,
        #[arg(long, value_delimiter = ',', default_value = "1/16,1/12,1/10,1/8")]
        eps: Vec<String>,
    },
    /// Pole order of `L_S(A x conj A)` against `n^2 delta(S)`.
    Tempered {
        /// `p,a_p` file; the bundled tau table when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        weight: u32,
        #[arg(long, default_value = "all")]
        selector: String,
        #[arg(long, value_delimiter = ',', default_value = "1/16,1/12,1/10,1/8")]
        eps: Vec<String>,
    },
    /// The ratio Z_S computed two ways.
    Zratio {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "all")]
        selector: String,
        #[arg(long, value_delimiter = ',', default_value = "1.25,1.5")]
        s: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        cutoff: u64,
    },
    /// Summability of `sum q^{-2/(n^2+1)}` over a selector.
    Rajan {
        #[arg(long)]
        selector: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Abscissae for inert primes of a cyclic field of prime degree.
    Inert {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long)]
        profile: Option<String>,
        /// `delta` of the variant compared with 1/2.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        no_probe: bool,
    },
    /// Residue degrees along a cyclic tower; defaults to the bundled one.
    Tower {
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_delimiter = ',')]
        chain: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        x: u64,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct PairArgs {
    /// `p,a_p` file; the bundled tau table when omitted.
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long, default_value_t = 12)]
    pub weight: u32,
    /// Second Hecke file.
    #[arg(long, conflicts_with = "synthetic")]
    pub against: Option<PathBuf>,
    /// Compare with seeded synthetic tempered data instead.
    #[arg(long)]
    pub synthetic: bool,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DataCmd {
    /// `p,a_p` file of Ramanujan's tau for primes up to the limit.
    GenTau {
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Primes(#[from] PrimesError),
    #[error(transparent)]
    Euler(#[from] EulerError),
    #[error(transparent)]
    Smo(#[from] SmoError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("thread pool: {0}")]
    Pool(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Group(_) => "group",
            CliError::Primes(_) => "primes",
            CliError::Euler(_) => "euler",
            CliError::Smo(_) => "smo",
            CliError::Report(ReportError::Io { .. }) | CliError::Io { .. } => "io",
            CliError::Report(_) => "report",
            CliError::Pool(_) => "pool",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// What a command produces.
pub enum Output {
    Report(Box<Report>),
    /// A data file written verbatim.
    Raw(String),
}

/// Result of one invocation, as the binary would print it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command under a pool of `cli.workers` threads.
pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be positive".into()));
        }
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| CliError::Pool(e.to_string()))?;
    pool.install(|| commands::run(cli))
}

/// Parses `args` (program name first), runs, and renders the output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: format!("error[usage]: {}", text.strip_prefix("error: ").unwrap_or(&text)) }
            };
        }
    };
    let fail = |e: CliError| Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error[{}]: {e}\n", e.code()),
    };
    let output = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Csv => Format::Csv,
    };
    let text = match output {
        Output::Report(r) => match emit(&r, format, cli.out.as_deref()) {
            Ok(t) => t,
            Err(e) => return fail(e.into()),
        },
        Output::Raw(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    return fail(CliError::Io {
                        path: path.display().to_string(),
                        msg: e.to_string(),
                    });
                }
            }
            text
        }
    };
    Outcome {
        code: 0,
        stdout: if cli.out.is_some() { String::new() } else { text },
        stderr: String::new(),
    }
}
