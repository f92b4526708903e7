//! `theta-rich` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 a checked
//! property was violated.

mod report;
mod source;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use theta_rich::rauzy::{
    n_simple_paths, rauzy_dot, rauzy_graph, reduced_dot, super_reduced_dot, super_reduced_from,
};
use theta_rich::FactorIndex;

use crate::source::{parse_range, resolve, SourceArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] theta_rich::Error),
    #[error("{0}")]
    Io(String),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Full,
    Reduced,
    Super,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "theta-rich", version, about = "Theta-palindromic richness of words")]
struct Cli {
    /// Print progress to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Richness report and complexity profile of one word.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Orders to profile, `A..B` (inclusive) or `N`.
        #[arg(long = "n")]
        n: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rauzy graphs of order n as DOT.
    Rauzy {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        graph: GraphKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Directory for `rauzy_N.dot`, `reduced_N.dot`, `super_reduced_N.dot`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check on one word, or on the builtin corpus.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "n")]
        n: Option<String>,
        /// List property ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a prefix of a word.
    Generate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the builtin corpus.
    Corpus {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {command}").to_lowercase())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let verbose = cli.verbose > 0;
    match cli.command {
        Command::Analyze { source, n, format, out } => {
            let src = resolve(&source)?;
            let range = n.as_deref().map(parse_range).transpose()?;
            let r = report::analyze(&src, range)?;
            if verbose {
                eprintln!("analyzed {} letters of {}", r.window_length, r.source);
            }
            let text = match format {
                Format::Json => json(&r)?,
                Format::Csv => report::profile_csv(r.complexity.as_deref().unwrap_or(&[]))?,
                Format::Text => report::analyze_text(&r),
                Format::Dot => return Err(unsupported(format, "analyze")),
            };
            emit(out.as_deref(), &text)?;
            Ok(if r.has_violation() { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Rauzy { source, n, graph, format, out } => {
            if format != Format::Dot {
                return Err(unsupported(format, "rauzy"));
            }
            let src = resolve(&source)?;
            if n + 1 > src.word.len() {
                return Err(CliError::Usage(format!(
                    "order {n} needs a window of at least {}, got {}",
                    n + 1,
                    src.word.len()
                )));
            }
            let idx = FactorIndex::new(src.word.clone(), n + 1);
            let theta = &src.theta;
            let mut docs: Vec<(String, String)> = Vec::new();
            if matches!(graph, GraphKind::Full | GraphKind::All) {
                docs.push((format!("rauzy_{n}.dot"), rauzy_dot(theta, &rauzy_graph(&idx, n)?)));
            }
            if matches!(graph, GraphKind::Reduced | GraphKind::Super | GraphKind::All) {
                let reduced = n_simple_paths(&idx, n)?;
                if graph != GraphKind::Super {
                    docs.push((format!("reduced_{n}.dot"), reduced_dot(theta, &reduced)));
                }
                if graph != GraphKind::Reduced {
                    let sg = super_reduced_from(theta, &reduced);
                    if verbose {
                        eprintln!(
                            "order {n}: {} classes, {} edges, tree after loop removal: {}, loops theta-fixed: {}",
                            sg.vertices.len(),
                            sg.edges.len(),
                            sg.is_tree_after_loop_removal(),
                            sg.all_loops_theta_fixed()
                        );
                    }
                    docs.push((format!("super_reduced_{n}.dot"), super_reduced_dot(theta, &sg)));
                }
            }
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)
                        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
                    for (name, text) in &docs {
                        emit(Some(&dir.join(name)), text)?;
                    }
                }
                None => {
                    let joined: Vec<&str> = docs.iter().map(|d| d.1.as_str()).collect();
                    emit(None, &joined.join("\n"))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { source, n, list, format, out } => {
            if list {
                let text: String = verify::PROPERTIES
                    .iter()
                    .map(|(id, what)| format!("{id:<22} {what}\n"))
                    .collect();
                emit(out.as_deref(), &text)?;
                return Ok(ExitCode::SUCCESS);
            }
            let range = n.as_deref().map(parse_range).transpose()?;
            let rows = if source.is_set() {
                let src = resolve(&source)?;
                let range = range.unwrap_or_else(|| {
                    (0, 30.min(src.word.len().saturating_sub(2)))
                });
                verify::verify_source(&src.label, &src, range, None)?
            } else {
                verify::verify_corpus(range)?
            };
            let r = verify::report(rows, range.unwrap_or((0, 30)));
            if verbose {
                eprintln!("{} checks, {} failed", r.rows.len(), r.failed);
            }
            let text = match format {
                Format::Json => json(&r)?,
                Format::Csv => verify::rows_csv(&r.rows)?,
                Format::Text => verify::rows_text(&r),
                Format::Dot => return Err(unsupported(format, "verify")),
            };
            emit(out.as_deref(), &text)?;
            Ok(if r.failed > 0 { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Generate { source, format, out } => {
            let src = resolve(&source)?;
            let word = src.theta.render(&src.word);
            let text = match format {
                Format::Text => format!("{word}\n"),
                Format::Json => json(&report::GenerateReport {
                    schema_version: report::SCHEMA_VERSION,
                    source: src.label.clone(),
                    theta: src.theta.spec(),
                    length: src.word.len(),
                    word,
                })?,
                _ => return Err(unsupported(format, "generate")),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { format, out } => {
            let entries = report::corpus_entries();
            let text = match format {
                Format::Text => report::corpus_text(&entries),
                Format::Json => json(&entries)?,
                Format::Csv => report::corpus_csv(&entries)?,
                Format::Dot => return Err(unsupported(format, "corpus")),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
