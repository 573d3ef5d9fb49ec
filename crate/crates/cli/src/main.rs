//! `neutro` — classify triples, validate corpora, tabulate label relations
//! and run relational model checks from the command line.
//!
//! Exit codes: 0 success, 1 invariant violation found by `validate`,
//! 2 parse error, 3 usage error (including unreadable files).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use neutro_core::{
    classify_file, classify_str, lattice_report, load_model_str, parse_rational,
    render_json_lines, render_table, BigRational, GridSpec, Label, LoadedModel, ModelLoadError,
    ParseLabelError, RecordKind,
};

const EXIT_INVARIANT: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "neutro", version, about = "Exact (T, I, F) triple classifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every record in a file (triple literals or a JSON array)
    Classify {
        file: PathBuf,
        /// Vocabulary for the records: set elements, events, or propositions
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Emit one JSON object per record instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Parse a file and check structural invariants without reporting labels
    Validate { file: PathBuf },
    /// Tabulate label implications over a grid of singleton triples
    Lattice {
        /// Comma-separated standard parts, e.g. 0,1/4,1/2,3/4,1
        #[arg(long, value_delimiter = ',')]
        std_grid: Option<Vec<String>>,
        /// Comma-separated infinitesimal coefficients, e.g. -1,0,1
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        eps_grid: Option<Vec<String>>,
    },
    /// Run a relational check over a JSON model file
    Model {
        file: PathBuf,
        /// dialetheist, trivialist, or lift:<Label>
        #[arg(long)]
        check: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Element,
    Event,
    Proposition,
}

impl From<KindArg> for RecordKind {
    fn from(kind: KindArg) -> RecordKind {
        match kind {
            KindArg::Element => RecordKind::Element,
            KindArg::Event => RecordKind::Event,
            KindArg::Proposition => RecordKind::Proposition,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };

    match cli.command {
        Command::Classify { file, kind, json } => classify(&file, kind.into(), json),
        Command::Validate { file } => validate(&file),
        Command::Lattice { std_grid, eps_grid } => lattice(std_grid, eps_grid),
        Command::Model { file, check } => model(&file, &check),
    }
}

fn read_input(path: &std::path::Path) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_USAGE)
    })
}

fn classify(path: &std::path::Path, kind: RecordKind, json: bool) -> ExitCode {
    let outcome = match classify_file(path, kind) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if json {
        print!("{}", render_json_lines(&outcome.records));
    } else {
        print!("{}", render_table(&outcome.records));
    }
    if outcome.is_clean() {
        ExitCode::SUCCESS
    } else {
        for error in &outcome.errors {
            eprintln!("{error}");
        }
        ExitCode::from(EXIT_PARSE)
    }
}

fn validate(path: &std::path::Path) -> ExitCode {
    let input = match read_input(path) {
        Ok(input) => input,
        Err(code) => return code,
    };

    if input.trim_start().starts_with('[') {
        // corpus invariants: well-formed records, unique identifiers
        match load_model_str(&input) {
            Ok(model) => {
                let count = match model {
                    LoadedModel::Elements(m) => m.len(),
                    LoadedModel::Events(s) => s.len(),
                    LoadedModel::Propositions(c) => c.len(),
                };
                println!("{count} records: parse ok, invariants hold");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                match e {
                    ModelLoadError::Model(_)
                    | ModelLoadError::MixedShapes => ExitCode::from(EXIT_INVARIANT),
                    _ => ExitCode::from(EXIT_PARSE),
                }
            }
        }
    } else {
        let outcome = classify_str(&input, RecordKind::Element);
        if !outcome.is_clean() {
            for error in &outcome.errors {
                eprintln!("{error}");
            }
            return ExitCode::from(EXIT_PARSE);
        }
        println!(
            "{} records: parse ok, invariants hold",
            outcome.records.len()
        );
        ExitCode::SUCCESS
    }
}

fn parse_grid_values(
    values: Vec<String>,
    allow_negative: bool,
    flag: &str,
) -> Result<Vec<BigRational>, ExitCode> {
    let mut out = Vec::with_capacity(values.len());
    for raw in values {
        let trimmed = raw.trim();
        let (negative, body) = match trimmed.strip_prefix('-') {
            Some(rest) if allow_negative => (true, rest),
            _ => (false, trimmed),
        };
        match parse_rational(body) {
            Ok(r) => out.push(if negative { -r } else { r }),
            Err(e) => {
                eprintln!("invalid {flag} value \"{trimmed}\": {e}");
                return Err(ExitCode::from(EXIT_USAGE));
            }
        }
    }
    Ok(out)
}

fn lattice(std_grid: Option<Vec<String>>, eps_grid: Option<Vec<String>>) -> ExitCode {
    let mut spec = GridSpec::default();
    if let Some(values) = std_grid {
        spec.std_values = match parse_grid_values(values, false, "--std-grid") {
            Ok(v) => v,
            Err(code) => return code,
        };
    }
    if let Some(values) = eps_grid {
        spec.eps_values = match parse_grid_values(values, true, "--eps-grid") {
            Ok(v) => v,
            Err(code) => return code,
        };
    }
    if spec.endpoints().is_empty() {
        eprintln!("the grid contains no endpoints inside [0-, 1+]");
        return ExitCode::from(EXIT_USAGE);
    }
    print!("{}", lattice_report(&spec).render());
    ExitCode::SUCCESS
}

enum Check {
    Dialetheist,
    Trivialist,
    Lift(Label),
}

fn parse_check(check: &str) -> Result<Check, String> {
    if check.eq_ignore_ascii_case("dialetheist") {
        return Ok(Check::Dialetheist);
    }
    if check.eq_ignore_ascii_case("trivialist") {
        return Ok(Check::Trivialist);
    }
    if let Some(name) = check.strip_prefix("lift:") {
        return match name.parse::<Label>() {
            Ok(label) => Ok(Check::Lift(label)),
            Err(ParseLabelError::Relational(name)) => Err(format!(
                "{name} is relational; use --check {} instead of a lift",
                name.to_ascii_lowercase()
            )),
            Err(e) => Err(e.to_string()),
        };
    }
    Err(format!(
        "unknown check \"{check}\"; expected dialetheist, trivialist or lift:<Label>"
    ))
}

fn model(path: &std::path::Path, check: &str) -> ExitCode {
    let check = match parse_check(check) {
        Ok(check) => check,
        Err(message) => {
            eprintln!("{message}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let input = match read_input(path) {
        Ok(input) => input,
        Err(code) => return code,
    };
    let model = match load_model_str(&input) {
        Ok(model) => model,
        Err(e) => {
            eprintln!("{e}");
            return match e {
                ModelLoadError::Model(_) | ModelLoadError::MixedShapes => {
                    ExitCode::from(EXIT_INVARIANT)
                }
                _ => ExitCode::from(EXIT_PARSE),
            };
        }
    };

    let answer = match (&check, &model) {
        (Check::Dialetheist, LoadedModel::Elements(m)) => ("dialetheist", m.is_dialetheist()),
        (Check::Dialetheist, LoadedModel::Events(s)) => ("dialetheist", s.is_dialetheist()),
        (Check::Trivialist, LoadedModel::Elements(m)) => ("trivialist", m.is_trivialist()),
        (Check::Trivialist, LoadedModel::Events(s)) => ("trivialist", s.is_trivialist()),
        (Check::Dialetheist | Check::Trivialist, LoadedModel::Propositions(_)) => {
            eprintln!("dialetheist/trivialist checks need an element model or event pairs");
            return ExitCode::from(EXIT_USAGE);
        }
        (Check::Lift(label), LoadedModel::Elements(m)) => {
            println!("lift {label}: {}", m.lift_label(*label));
            return ExitCode::SUCCESS;
        }
        (Check::Lift(label), LoadedModel::Propositions(c)) => {
            println!("lift {label}: {}", c.lift_label(*label));
            return ExitCode::SUCCESS;
        }
        (Check::Lift(_), LoadedModel::Events(_)) => {
            eprintln!("lift checks apply to element or proposition records, not event pairs");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    println!("{}: {}", answer.0, answer.1);
    ExitCode::SUCCESS
}
