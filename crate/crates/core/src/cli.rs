//! Command-line front end. `run_cli` takes the full argument list and the
//! two output streams so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bijections::BijectionId;
use crate::enumeration::{build_census_with, enumerate_paths, CensusConfig, EnumError};
use crate::formulas::{evaluate_formula, FormulaError, FormulaId};
use crate::path::{parse_path, Step, StepWord};
use crate::render::{render, RenderFormat};
use crate::stats::{stat_record, ClassFilter};
use crate::verify::{verify_bijection, verify_identity, IdentityId, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dyck-peaks",
    version,
    about = "Lattice paths by peaks and below-diagonal up steps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every path of semilength N in a class, in lexicographic order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = parse_step)]
        first: Option<Step>,
        #[arg(long, value_parser = parse_step)]
        last: Option<Step>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = ListFormat::Words)]
        format: ListFormat,
    },
    /// Print the statistics of a path as JSON
    Stats(WordArg),
    /// Apply a bijection and print the image
    Map {
        #[arg(long, value_parser = parse_bijection)]
        bijection: BijectionId,
        #[command(flatten)]
        word: WordArg,
    },
    /// Exact counts by (m, k, first, last) for one semilength
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest semilength the census will accept
        #[arg(long, default_value_t = crate::enumeration::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Evaluate a closed form
    Formula {
        #[arg(long, value_parser = parse_formula)]
        id: FormulaId,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<i64>,
    },
    /// Check identities and bijections exhaustively; with neither selector
    /// everything is checked
    Verify {
        #[arg(long)]
        identity: Option<String>,
        #[arg(long)]
        bijection: Option<String>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Draw a path on its grid
    Render {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_parser = parse_render)]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct WordArg {
    /// Path word over U and D
    #[arg(required_unless_present = "input", conflicts_with = "input")]
    word: Option<String>,
    /// Read the word from a file instead
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Words,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

fn parse_step(s: &str) -> Result<Step, String> {
    s.parse::<Step>().map_err(|e| e.to_string())
}

fn parse_bijection(s: &str) -> Result<BijectionId, String> {
    s.parse()
}

fn parse_formula(s: &str) -> Result<FormulaId, String> {
    s.parse()
}

fn parse_render(s: &str) -> Result<RenderFormat, String> {
    s.parse()
}

/// An error with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }

    fn io(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("IoError: {e}"),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure::domain(e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Arity { .. } => Failure::usage(format!("ArityError: {e}")),
            _ => Failure::domain(e.to_string()),
        }
    }
}

pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_word(arg: &WordArg) -> Result<StepWord, Failure> {
    let text = match (&arg.word, &arg.input) {
        (Some(w), _) => w.clone(),
        (None, Some(file)) => fs::read_to_string(file).map_err(Failure::io)?,
        (None, None) => return Err(Failure::usage("a word or --in FILE is required")),
    };
    parse_path(text.trim()).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(out: &mut dyn Write, file: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match file {
        Some(path) => fs::write(path, text).map_err(Failure::io),
        None => out.write_all(text.as_bytes()).map_err(Failure::io),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Enumerate {
            n,
            m,
            k,
            first,
            last,
            limit,
            format,
        } => {
            let filter = ClassFilter { m, k, first, last };
            let words = enumerate_paths(n, filter).take(limit.unwrap_or(usize::MAX));
            match format {
                ListFormat::Words => {
                    for w in words {
                        writeln!(out, "{w}").map_err(Failure::io)?;
                    }
                }
                ListFormat::Json => {
                    let all: Vec<StepWord> = words.collect();
                    let text = serde_json::to_string(&all).expect("words serialize");
                    writeln!(out, "{text}").map_err(Failure::io)?;
                }
            }
        }
        Command::Stats(word) => {
            let p = read_word(&word)?;
            let rec = stat_record(&p).map_err(|e| Failure::domain(e.to_string()))?;
            writeln!(out, "{}", rec.to_json()).map_err(Failure::io)?;
        }
        Command::Map { bijection, word } => {
            let p = read_word(&word)?;
            let q = bijection
                .apply(&p)
                .map_err(|e| Failure::domain(e.to_string()))?;
            writeln!(out, "{q}").map_err(Failure::io)?;
        }
        Command::Census {
            n,
            format,
            out: file,
            max_n,
        } => {
            let config = CensusConfig {
                max_n,
                ..CensusConfig::default()
            };
            let census = build_census_with(n, &config)?;
            let text = match format {
                TableFormat::Json => census.to_json() + "\n",
                TableFormat::Csv => census.to_csv(),
            };
            emit(out, file.as_ref(), &text)?;
        }
        Command::Formula { id, params } => {
            let v = evaluate_formula(id, &params)?;
            writeln!(out, "{v}").map_err(Failure::io)?;
        }
        Command::Verify {
            identity,
            bijection,
            n_max,
            format,
        } => return run_verify(identity, bijection, n_max, format, out),
        Command::Render {
            word,
            format,
            out: file,
        } => {
            let p = read_word(&word)?;
            emit(out, file.as_ref(), &render(&p, format))?;
        }
    }
    Ok(EXIT_OK)
}

fn select<T: Copy>(
    choice: Option<&str>,
    all: &[T],
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<Vec<T>, Failure> {
    match choice {
        None => Ok(Vec::new()),
        Some("all") => Ok(all.to_vec()),
        Some(name) => parse(name).map(|id| vec![id]).map_err(Failure::usage),
    }
}

fn run_verify(
    identity: Option<String>,
    bijection: Option<String>,
    n_max: usize,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (mut ids, mut maps) = (
        select(identity.as_deref(), &IdentityId::ALL, |s| s.parse())?,
        select(bijection.as_deref(), &BijectionId::ALL, |s| s.parse())?,
    );
    if identity.is_none() && bijection.is_none() {
        ids = IdentityId::ALL.to_vec();
        maps = BijectionId::ALL.to_vec();
    }
    let mut reports: Vec<VerifyReport> = Vec::new();
    for id in ids {
        reports.push(verify_identity(id, n_max).map_err(|e| Failure::domain(e.to_string()))?);
    }
    for id in maps {
        reports.push(verify_bijection(id, n_max).map_err(|e| Failure::domain(e.to_string()))?);
    }
    let mut failed = false;
    for r in &reports {
        failed |= !r.passed();
        let line = match format {
            ReportFormat::Json => r.to_json(),
            ReportFormat::Text => r.to_text(),
        };
        writeln!(out, "{line}").map_err(Failure::io)?;
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}
