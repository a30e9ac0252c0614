//! `qcat`: check, construct and compose quantum categories stored as JSON documents.
//!
//! Exit status is 0 when everything requested passes, 1 when a check or
//! construction fails and 2 when the input is malformed.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcat_core::document::Document;
use thiserror::Error;

mod check;
mod compose;
mod construct;
mod report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Failed(String),
}

impl From<qcat_core::Error> for CliError {
    fn from(e: qcat_core::Error) -> Self {
        match e {
            qcat_core::Error::Schema(msg) => CliError::Malformed(msg),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Malformed(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qcat", version, about = "Decide the quantum category axioms for serialized structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document and report every verdict.
    Check {
        file: PathBuf,
        /// Decide a single axiom.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        axiom: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
    /// Build a quantum category document. `tensor` takes one or two inputs;
    /// with one input it is tensored with itself.
    Construct {
        #[arg(value_enum)]
        constructor: construct::Constructor,
        /// Input documents followed by the output path.
        #[arg(num_args = 2..=3, required = true)]
        paths: Vec<PathBuf>,
        /// Name recorded on the constructed category.
        #[arg(long)]
        name: Option<String>,
    },
    /// Compose two functors, first F then G.
    Compose {
        first: PathBuf,
        second: PathBuf,
        output: PathBuf,
        /// Name recorded on the composite.
        #[arg(long)]
        name: Option<String>,
    },
}

fn init_logging() {
    let requested = std::env::var("QCAT_LOG").unwrap_or_default();
    let level = match requested.as_str() {
        "info" => log::LevelFilter::Info,
        "debug" => log::LevelFilter::Debug,
        _ => log::LevelFilter::Error,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).target(env_logger::Target::Stderr).init();
    if !matches!(requested.as_str(), "" | "error" | "info" | "debug") {
        log::error!("QCAT_LOG must be one of error, info, debug; got '{requested}'");
    }
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    log::info!("read {}", path.display());
    Document::parse(&text).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

pub fn write_document(path: &Path, doc: &Document) -> Result<(), CliError> {
    std::fs::write(path, doc.to_string_pretty()).map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
    log::info!("wrote {}", path.display());
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Check { file, axiom, report } => {
            let doc = read_document(&file)?;
            let started = std::time::Instant::now();
            let result = check::check(&doc, axiom.map(usize::from))?;
            log::debug!("checked {} in {:?}", file.display(), started.elapsed());
            match report {
                Format::Text => print!("{}", result.text()),
                Format::Json => print!("{}", result.json()),
            }
            Ok(result.passes)
        }
        Command::Construct { constructor, paths, name } => {
            let (output, inputs) = paths.split_last().expect("clap requires two paths");
            let docs = inputs.iter().map(|p| read_document(p)).collect::<Result<Vec<_>, _>>()?;
            let out = construct::construct(constructor, &docs, name)?;
            write_document(output, &out)?;
            println!("{}", construct::summary(&out));
            Ok(true)
        }
        Command::Compose { first, second, output, name } => {
            let out = compose::compose(&read_document(&first)?, &read_document(&second)?, name)?;
            write_document(&output, &out)?;
            println!("wrote the composite functor to {}", output.display());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_logging();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qcat: {e}");
            ExitCode::from(e.code())
        }
    }
}
