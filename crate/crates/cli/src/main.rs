use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use picard::group::{classify, element_order, eval_str, fixed_point_elliptic, GroupError, IsometryType};
use picard::handles::{build_decomposition, validate};
use picard::isotropy::{summarize, IsotropyError};
use picard::polytope::{build_dstar, export_json};
use picard::report::{Config, Report, Status};
use picard::verify;

#[derive(Parser)]
#[command(name = "picard", version, about = "Exact verification of the Eisenstein-Picard modular group")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    format: Format,
    /// Largest finite group closure before giving up.
    #[arg(long, default_value_t = 1000, global = true)]
    max_closure: usize,
    /// Largest coset table before giving up.
    #[arg(long, default_value_t = 100_000, global = true)]
    max_cosets: usize,
    /// Starting precision for certified sign evaluation.
    #[arg(long, default_value_t = 64, global = true)]
    precision_bits: u32,
    /// Seed for the randomized property checks.
    #[arg(long, default_value_t = Config::default().seed, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Run a section of the verification ledger.
    Verify {
        #[arg(value_parser = section_names())]
        section: String,
    },
    /// Print the exact matrix of a word.
    Eval { word: String },
    /// Isometry type of a word, with its fixed point when elliptic.
    Classify { word: String },
    /// Projective order of a word.
    Order {
        word: String,
        #[arg(long, default_value_t = 1000)]
        cap: u64,
    },
    /// Isotropy group of a named point.
    Isotropy { point: String },
    /// The subdivided polytope.
    Dstar {
        #[command(subcommand)]
        action: DstarAction,
    },
    /// The handle decomposition.
    Handles {
        #[command(subcommand)]
        action: HandlesAction,
    },
}

#[derive(Subcommand)]
enum DstarAction {
    Export,
}

#[derive(Subcommand)]
enum HandlesAction {
    Show,
    Validate {
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
}

fn section_names() -> clap::builder::PossibleValuesParser {
    let mut names = vec!["all"];
    names.extend(verify::SECTIONS);
    clap::builder::PossibleValuesParser::new(names)
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Word(w) => Failure::Usage(w.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<IsotropyError> for Failure {
    fn from(e: IsotropyError) -> Self {
        match e {
            IsotropyError::UnknownPoint(_) | IsotropyError::Word(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &serde_json::Value) {
    emit(&(serde_json::to_string_pretty(v).expect("serializable") + "\n"));
}

fn print_report(r: &Report, format: Format) {
    match format {
        Format::Json => print_json(&serde_json::to_value(r).expect("serializable")),
        Format::Md => emit(&r.to_markdown()),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = Config {
        max_closure: cli.max_closure,
        max_cosets: cli.max_cosets,
        precision_bits: cli.precision_bits,
        seed: cli.seed,
    };
    let fmt = cli.format;
    match cli.command {
        Command::Verify { section } => {
            let report = verify::run(&section, &cfg).ok_or_else(|| Failure::Usage(format!("unknown section {section}")))?;
            print_report(&report, fmt);
            Ok(report.passed())
        }
        Command::Eval { word } => {
            let g = eval_str(&word)?;
            match fmt {
                Format::Json => print_json(&json!({ "word": word, "matrix": g.matrix() })),
                Format::Md => out!("{}", g.matrix()),
            }
            Ok(true)
        }
        Command::Classify { word } => {
            let g = eval_str(&word)?;
            let kind = classify(&g)?;
            let fixed = match kind {
                IsometryType::RegularElliptic | IsometryType::SpecialElliptic => {
                    Some(fixed_point_elliptic(&g).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()))
                }
                _ => None,
            };
            match fmt {
                Format::Json => print_json(&json!({ "word": word, "type": kind, "fixed_point": fixed })),
                Format::Md => {
                    out!("{kind}");
                    if let Some(f) = fixed {
                        out!("fixed point: {f}");
                    }
                }
            }
            Ok(true)
        }
        Command::Order { word, cap } => {
            let n = element_order(&eval_str(&word)?, cap)?;
            match fmt {
                Format::Json => print_json(&json!({ "word": word, "order": n })),
                Format::Md => out!("{n}"),
            }
            Ok(true)
        }
        Command::Isotropy { point } => {
            let s = summarize(&point, cfg.max_closure)?;
            match fmt {
                Format::Json => print_json(&serde_json::to_value(&s).expect("serializable")),
                Format::Md => {
                    out!("point: {}", s.point);
                    out!("generators: {}", s.generators.join(", "));
                    out!("order: {}", s.order);
                    out!("abelian: {}", s.abelian);
                    out!("center order: {}", s.center_order);
                    out!("fixes point: {}", s.fixes_point);
                    out!("abelianization: {:?}", s.abelianization);
                    out!("singular loci orders: {:?}", s.singular_orders);
                }
            }
            Ok(s.fixes_point)
        }
        Command::Dstar { action: DstarAction::Export } => {
            let l = build_dstar();
            match fmt {
                Format::Json => print_json(&export_json(&l)),
                Format::Md => {
                    for (k, faces) in l.faces.iter().enumerate() {
                        out!("dimension {k}: {} faces", faces.len());
                        for f in faces {
                            out!("  {}", f.name);
                        }
                    }
                }
            }
            Ok(true)
        }
        Command::Handles { action } => {
            let c = build_decomposition();
            match action {
                HandlesAction::Show => {
                    match fmt {
                        Format::Json => print_json(&serde_json::to_value(&c).expect("serializable")),
                        Format::Md => emit(&c.ledger()),
                    }
                    Ok(true)
                }
                HandlesAction::Validate { json } => {
                    let checks = validate(&c);
                    let ok = checks.iter().all(|x| x.status != Status::Fail);
                    if json || fmt == Format::Json {
                        print_json(&serde_json::to_value(&checks).expect("serializable"));
                    } else {
                        for x in &checks {
                            out!("{} {}: {}", x.status.as_str(), x.id, x.detail);
                        }
                    }
                    Ok(ok)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
