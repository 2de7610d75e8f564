//! The `cambrian` command line.
//!
//! Exit codes: 0 success, 1 a checked statement failed, 2 invalid input,
//! 3 a resource limit was hit.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::coxeter::CoxeterSystem;
use crate::dot::interval_dot;
use crate::error::Error;
use crate::formats::{load_system, IntervalFile, LatticeFile};
use crate::sortable::{cambrian_interval_with, sorting_word, CoxeterElement, IntervalOptions};
use crate::sweep::{sweep, SweepConfig};
use crate::verify::{trim_verdicts, verify_sortable_closure, CLOSURE_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRADICTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cambrian", version, about = "Sortable elements, Cambrian intervals and lattice properties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the γ-sorting word of an element with its blocks.
    Sort {
        /// Preset name or system JSON file.
        #[arg(long, default_value = "affine-c3")]
        system: String,
        /// Coxeter element as a word using every generator once; defaults to index order.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        json: bool,
        /// Generator names, space- or comma-separated.
        word: Vec<String>,
    },
    /// Build a Cambrian interval [bottom, top] and report its properties.
    Interval {
        #[arg(long, default_value = "affine-c3")]
        system: String,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long, default_value = "")]
        bottom: String,
        #[arg(long)]
        top: String,
        /// Write a Graphviz diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the JSON here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Largest weak-order ideal to enumerate below the top.
        #[arg(long, default_value_t = 100_000)]
        max_elems: usize,
        /// Seed for the random subsets of the meet/join closure check.
        #[arg(long, default_value_t = CLOSURE_SEED)]
        seed: u64,
    },
    /// Report lattice properties of a {"labels", "covers"} file.
    Analyze { file: PathBuf },
    /// Check trimness over every interval described by a sweep configuration.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_elems: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn gamma_for(sys: &CoxeterSystem, gamma: Option<&str>) -> Result<CoxeterElement, Failure> {
    match gamma {
        Some(text) => Ok(CoxeterElement::parse(sys, text)?),
        None => Ok(CoxeterElement::standard(sys.rank())),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let emit = |out: &mut dyn Write, text: &str| writeln!(out, "{text}").map_err(|e| input(e.to_string()));
    match cli.command {
        Command::Sort { system, gamma, json, word } => {
            let sys = load_system(&system).map_err(input)?;
            let gamma = gamma_for(&sys, gamma.as_deref())?;
            let w = sys.canonicalize(&sys.parse_word(&word.join(" ")).map_err(Error::from)?).map_err(Error::from)?;
            let sw = sorting_word(&w, &gamma)?;
            if json {
                let blocks: Vec<String> = sw.blocks().map(|b| sys.format_word(b)).collect();
                let value = json!({
                    "element": w.label(),
                    "gamma": gamma.label(&sys),
                    "sorting_word": sw.label(),
                    "blocks": blocks,
                    "sortable": sw.is_sortable(),
                });
                emit(out, &serde_json::to_string_pretty(&value).expect("serializes"))?;
            } else {
                emit(out, &format!("{}  sortable={}", sw.render(), sw.is_sortable()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Interval { system, gamma, bottom, top, dot, json, max_elems, seed } => {
            let sys = load_system(&system).map_err(input)?;
            let gamma = gamma_for(&sys, gamma.as_deref())?;
            let u = sys.parse_element(&bottom).map_err(Error::from)?;
            let v = sys.parse_element(&top).map_err(Error::from)?;
            let options = IntervalOptions { max_elems: Some(max_elems), sortable: None };
            let interval = cambrian_interval_with(&u, &v, &gamma, &options)?;
            let report = interval.lattice().analyze();
            let mut checks = verify_sortable_closure(&interval, seed)?;
            trim_verdicts(interval.lattice(), &mut checks);
            let broken = report.holds("semidistributive") == Some(false) || !checks.all_hold();
            let code = if broken { EXIT_CONTRADICTION } else { EXIT_OK };
            let file = IntervalFile::new(&interval, report, checks)?;
            let text = serde_json::to_string_pretty(&file).expect("serializes");
            match json {
                Some(path) => write(&path, &(text + "\n"))?,
                None => emit(out, &text)?,
            }
            if let Some(path) = dot {
                write(&path, &interval_dot(&interval))?;
            }
            Ok(code)
        }
        Command::Analyze { file } => {
            let text = read(&file)?;
            let parsed: LatticeFile =
                serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", file.display())))?;
            let lattice = parsed.build().map_err(|e| input(format!("{}: {e}", file.display())))?;
            emit(out, &lattice.analyze().to_json())?;
            Ok(EXIT_OK)
        }
        Command::Sweep { config, max_len, max_elems, json } => {
            let text = read(&config)?;
            let mut parsed: SweepConfig =
                serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", config.display())))?;
            if let Some(n) = max_len {
                parsed.max_len = n;
                for s in &mut parsed.systems {
                    s.max_len = None;
                }
            }
            if let Some(n) = max_elems {
                parsed.max_elems = n;
            }
            let report = sweep(&parsed)?;
            let code = if report.contradictions().is_empty() { EXIT_OK } else { EXIT_CONTRADICTION };
            let text = serde_json::to_string_pretty(&report).expect("serializes");
            match json {
                Some(path) => write(&path, &(text + "\n"))?,
                None => emit(out, &text)?,
            }
            Ok(code)
        }
    }
}
