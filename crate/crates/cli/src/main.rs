//! `hyperinc`: exact incidence-matrix analyses of hypergraph files.
//!
//! Exit status is 0 when every check passes, 1 when a check fails (the
//! failure names are listed) and 2 on bad input.

mod commands;
mod render;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperinc_core::format::{parse_hypergraph, to_json, to_text};
use hyperinc_core::kernel::{CertificateType, FinderBounds};
use hyperinc_core::{random_hypergraph, uniform_cycle, Hypergraph, IsoConfig, RandomSpec};

use crate::commands::WeightSource;
use crate::render::{error_json, finish, Output};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{context}: {source}")]
    Input {
        context: String,
        source: hyperinc_core::Error,
    },
    #[error(transparent)]
    Core(#[from] hyperinc_core::Error),
}

#[derive(Parser)]
#[command(name = "hyperinc", version, about = "Exact incidence-matrix toolkit for hypergraphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, nullity and kernel bases of B_H and I_H.
    Rank { file: PathBuf },
    /// Write a hypergraph file from a generator.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Units, their generators and the nullity decomposition.
    Units { file: PathBuf },
    /// The unit contraction as a hypergraph file, with rank checks.
    Contract { file: PathBuf },
    /// Check a certificate given as JSON (inline, or a path to a JSON file).
    Verify { file: PathBuf, certificate: String },
    /// Enumerate all certificates of one kind.
    Find {
        file: PathBuf,
        /// e.g. equal-edge-partition, ratio-vertex-partition, unit-pair
        kind: CertificateType,
        #[arg(long, default_value_t = FinderBounds::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = FinderBounds::default().max_edges)]
        max_edges: usize,
        #[arg(long, default_value_t = FinderBounds::default().max_results)]
        max_results: usize,
    },
    /// Eigenpairs of the weighted adjacency matrix predicted by units or classes.
    Spectra {
        file: PathBuf,
        /// `unit`, `banerjee`, or a path to a weight file.
        #[arg(long, default_value = "unit")]
        weights: String,
        /// A class of vertices, comma separated; repeat for several. Vertices
        /// not listed form singletons. Without this flag the units are used.
        #[arg(long = "class", value_delimiter = ';')]
        classes: Vec<String>,
        /// Include the adjacency matrix in the report.
        #[arg(long)]
        matrix: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The k-uniform cycle on vertices 0..n-1.
    Cycle { n: usize, k: usize },
    /// Distinct random hyperedges, uniform among subsets of size <= max-size.
    Random {
        n: usize,
        m: usize,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_source(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load(path: &Path) -> Result<Hypergraph, CliError> {
    parse_hypergraph(&read_source(path)?).map_err(|source| CliError::Input {
        context: path.display().to_string(),
        source,
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Rank { .. } => "rank",
        Command::Generate { .. } => "generate",
        Command::Units { .. } => "units",
        Command::Contract { .. } => "contract",
        Command::Verify { .. } => "verify",
        Command::Find { .. } => "find",
        Command::Spectra { .. } => "spectra",
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let name = command_name(&cli.command);
    let json = cli.json;
    Ok(match &cli.command {
        Command::Rank { file } => finish(name, &commands::rank(&load(file)?)?, json),
        Command::Units { file } => finish(name, &commands::units(&load(file)?), json),
        Command::Contract { file } => finish(name, &commands::contract(&load(file)?, &IsoConfig::from_env())?, json),
        Command::Verify { file, certificate } => {
            let h = load(file)?;
            let src = if certificate.trim_start().starts_with('{') {
                certificate.clone()
            } else {
                read_source(Path::new(certificate))?
            };
            let kind = commands::parse_certificate(&src).map_err(|source| CliError::Input {
                context: "certificate".into(),
                source,
            })?;
            finish(name, &commands::verify(&h, kind)?, json)
        }
        Command::Find {
            file,
            kind,
            max_vertices,
            max_edges,
            max_results,
        } => {
            let bounds = FinderBounds {
                max_vertices: *max_vertices,
                max_edges: *max_edges,
                max_results: *max_results,
            };
            finish(name, &commands::find(&load(file)?, *kind, &bounds)?, json)
        }
        Command::Spectra {
            file,
            weights,
            classes,
            matrix,
        } => {
            let h = load(file)?;
            let source = match weights.as_str() {
                "unit" => WeightSource::Unit,
                "banerjee" => WeightSource::Banerjee,
                path => WeightSource::File(read_source(Path::new(path))?),
            };
            let classes: Vec<Vec<String>> = classes
                .iter()
                .map(|c| {
                    c.split(',')
                        .map(|v| v.trim().to_owned())
                        .filter(|v| !v.is_empty())
                        .collect()
                })
                .collect();
            let report = commands::spectra(&h, &source, &classes, *matrix).map_err(|source| match source {
                e @ (hyperinc_core::Error::Parse { .. } | hyperinc_core::Error::BadWeight(_)) => CliError::Input {
                    context: format!("weights `{weights}`"),
                    source: e,
                },
                e => CliError::Core(e),
            })?;
            finish(name, &report, json)
        }
        Command::Generate { family } => {
            let h = match family {
                Family::Cycle { n, k } => uniform_cycle(*n, *k)?,
                Family::Random { n, m, max_size, seed } => random_hypergraph(&RandomSpec {
                    vertices: *n,
                    edges: *m,
                    max_size: max_size.unwrap_or(*n),
                    seed: *seed,
                })?,
            };
            let body = if json { to_json(&h) + "\n" } else { to_text(&h)? };
            Output {
                body,
                failures: Vec::new(),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            if out.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                print!("{}", error_json(command_name(&cli.command), &e.to_string()));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
