//! The `wgcalc` command line: argument parsing, configuration, the result
//! cache and report rendering. `main.rs` only forwards to [`main_with_args`].

mod cache;
mod commands;
mod config;

pub use cache::{Cache, CacheRecord, GcReport, ENGINE_VERSION};
pub use config::{parse_b_list, ConfigFile, FlagOverrides, OutputFormat, RunConfig, CACHE_ENV, CONFIG_ENV};

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONJECTURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bound exceeded: {0}")]
    Bounds(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Bounds(_) => EXIT_BOUNDS,
        }
    }
}

/// Rendered result of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { stdout, code: EXIT_OK }
    }

    fn verdict(stdout: String, passed: bool) -> Output {
        Output { stdout, code: if passed { EXIT_OK } else { EXIT_CONJECTURE } }
    }
}

#[derive(Debug, Parser)]
#[command(name = "wgcalc", version, about = "Exact Weingarten calculus and bt-monotone Hurwitz numbers")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Key-value config file (overrides WGCALC_CONFIG).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Result cache directory (overrides WGCALC_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Skip the result cache for this run.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Allow the long-running k = 5 JM suite.
    #[arg(long, global = true)]
    pub expensive: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weingarten values for a profile (O, A, b, bt).
    Wg(WgArgs),
    /// A bt-monotone Hurwitz number H_{g,n}(mu).
    Hurwitz(HurwitzArgs),
    /// A Jack function in the power-sum basis.
    Jack(JackArgs),
    /// Same as `verify jm`.
    JmVerify(JmArgs),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Real-rootedness and interlacing sweep, as CSV.
    Sweep(RootArgs),
    /// Inspect or clean the result cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct WgArgs {
    #[arg(long, default_value = "bt")]
    pub profile: String,
    /// Level; prints every coset type.
    #[arg(long, conflicts_with = "pairing", required_unless_present = "pairing")]
    pub k: Option<usize>,
    /// A single pair partition such as "(1 3|2 4)".
    #[arg(long)]
    pub pairing: Option<String>,
    /// Expand in 1/N to this order instead of printing closed forms.
    #[arg(long)]
    pub series: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum HurwitzMethod {
    Recursion,
    Enum,
    Jack,
    /// Every method, failing unless they agree.
    All,
}

#[derive(Debug, Args)]
pub struct HurwitzArgs {
    /// Genus, e.g. 0, 1/2, 1.5.
    pub g: String,
    pub n: usize,
    /// Parts, e.g. 2,1.
    pub mu: String,
    #[arg(long, value_enum, default_value = "recursion")]
    pub method: HurwitzMethod,
}

#[derive(Debug, Args)]
pub struct JackArgs {
    pub lambda: String,
    /// Specialize b to a rational.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Debug, Args)]
pub struct JmArgs {
    /// Check levels 1..=k.
    #[arg(long, default_value_t = crate::jmops::DEFAULT_JM_MAX)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct VirasoroArgs {
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    #[arg(long)]
    pub hbar_order: Option<usize>,
    /// Constraints L_1..L_m are checked.
    #[arg(long, default_value_t = 3)]
    pub m_max: usize,
    /// Commutators [L_m, L_n] for m, n up to this.
    #[arg(long, default_value_t = 4)]
    pub commutator_max: usize,
    #[arg(long, default_value_t = 2)]
    pub seeds: u64,
}

#[derive(Debug, Args)]
pub struct RootArgs {
    /// Genera, e.g. 0,1/2,1.
    #[arg(long, default_value = "0,1/2,1,3/2")]
    pub g: String,
    /// Largest number of parts.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub min_size: usize,
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Values of b; defaults to the configured set.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum VerifySuite {
    /// b-deformed Jucys-Murphy checks.
    Jm(JmArgs),
    /// Virasoro constraints and commutation relations.
    Virasoro(VirasoroArgs),
    /// Recursion against the tabulated Hurwitz numbers.
    Tables,
    /// Real-rootedness and interlacing.
    Roots(RootArgs),
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    Ls,
    Gc {
        /// Remove every record, not only invalid ones.
        #[arg(long)]
        all: bool,
    },
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let flags = FlagOverrides {
        config: cli.global.config.clone(),
        cache_dir: cli.global.cache_dir.clone(),
        format: cli.global.format,
        expensive: cli.global.expensive,
    };
    let cfg = RunConfig::load(&flags)?;
    let cache = match (&cfg.cache_dir, cli.global.no_cache) {
        (Some(dir), false) => Some(Cache::open(dir)?),
        _ => None,
    };
    let ctx = commands::Ctx { cfg, cache };
    match cli.command {
        Command::Wg(a) => commands::wg(&ctx, &a),
        Command::Hurwitz(a) => commands::hurwitz(&ctx, &a),
        Command::Jack(a) => commands::jack(&ctx, &a),
        Command::JmVerify(a) | Command::Verify { suite: VerifySuite::Jm(a) } => commands::verify_jm(&ctx, &a),
        Command::Verify { suite: VerifySuite::Virasoro(a) } => commands::verify_virasoro(&ctx, &a),
        Command::Verify { suite: VerifySuite::Tables } => commands::verify_tables(&ctx),
        Command::Verify { suite: VerifySuite::Roots(a) } => commands::roots(&ctx, &a, false),
        Command::Sweep(a) => commands::roots(&ctx, &a, true),
        Command::Cache { action } => commands::cache(&ctx, &action),
    }
}

/// Parse `args` (including the program name), run, print, and return the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("wgcalc: {e}");
            e.exit_code()
        }
    }
}
