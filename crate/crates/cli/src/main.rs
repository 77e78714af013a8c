//! `ksf`: serve the knowledge space API, validate, import/export and query snapshots.

mod offline;
mod serve;

use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ksf_core::kst::{KstError, DEFAULT_STATE_CAP};
use ksf_core::store::StoreError;
use tracing::Level;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  semantic false (validate: not a learning space, or no KnowState nodes)
  2  corrupt or invalid snapshot (also command-line usage errors)
  3  i/o failure or address bind failure
  4  derived structure exceeds --cap";

#[derive(Parser)]
#[command(name = "ksf", version, about = "Knowledge space framework", after_help = EXIT_CODES)]
struct Cli {
    /// error, warn, info, debug or trace
    #[arg(long, global = true, default_value = "warn")]
    log_level: Level,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Serve the HTTP API; the store is saved back to --data on shutdown.
    Serve {
        #[arg(long = "data")]
        data: PathBuf,
        #[arg(long, default_value = "127.0.0.1:8080")]
        listen: SocketAddr,
        /// Maximum number of states derived from the prerequisite graph.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
        /// Directory of static client assets served outside /api.
        #[arg(long)]
        static_dir: Option<PathBuf>,
    },
    /// Print the validation report of the stored knowledge space.
    Validate {
        #[arg(long = "data")]
        data: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
    /// Write a validated canonical copy of the store to --out.
    Export {
        #[arg(long = "data")]
        data: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Validate --in and store it canonically at --data.
    Import {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "data")]
        data: PathBuf,
    },
    /// Search the store; prints one JSON node per line.
    Query {
        #[arg(long = "data")]
        data: PathBuf,
        #[command(subcommand)]
        target: QueryTarget,
    },
}

#[derive(Subcommand)]
enum QueryTarget {
    /// Knowledge states whose topic contains the pattern (case-insensitive).
    Knowstates {
        #[arg(long, default_value = "")]
        topic: String,
    },
    /// Learners whose name contains the pattern (case-insensitive).
    Learners {
        #[arg(long, default_value = "")]
        name: String,
    },
}

/// Settings for `serve`.
pub struct CliConfig {
    pub data_file: PathBuf,
    pub listen: SocketAddr,
    pub cap: usize,
    pub log_level: Level,
    pub assets: Option<PathBuf>,
}

/// A failed command: message for stderr plus the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<StoreError> for Failure {
    fn from(e: StoreError) -> Self {
        let code = match e {
            StoreError::CorruptSnapshot(_) => 2,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<KstError> for Failure {
    fn from(e: KstError) -> Self {
        let code = match e {
            KstError::TooManyStates { .. } => 4,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    tracing_subscriber::fmt()
        .with_max_level(cli.log_level)
        .with_writer(std::io::stderr)
        .init();

    let outcome = match cli.command {
        Command::Serve { data, listen, cap, static_dir } => serve::run(CliConfig {
            data_file: data,
            listen,
            cap: cap as usize,
            log_level: cli.log_level,
            assets: static_dir,
        }),
        Command::Validate { data, cap } => offline::validate(&data, cap as usize),
        Command::Export { data, out } => offline::copy(&data, &out),
        Command::Import { input, data } => offline::copy(&input, &data),
        Command::Query { data, target } => match target {
            QueryTarget::Knowstates { topic } => offline::query(&data, "knowstates", &topic),
            QueryTarget::Learners { name } => offline::query(&data, "learners", &name),
        },
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
