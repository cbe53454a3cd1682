//! Command-line front end: evaluate brace words, decide equality, run the
//! verification suites, query the additive rank, reduce modulo an odd
//! integer, and check homomorphisms.
//!
//! Exit codes: 0 success / equal / all suites passed, 1 semantic negative
//! (not equal, suite failures), 2 usage or input error. Stdout carries only
//! canonical text or JSON; diagnostics go to stderr.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nilbrace::expr::{evaluate, format_canonical, parse};
use nilbrace::hom::{reduce_mod, FreeBrace, Hom, ModularFreeBrace};
use nilbrace::verify::{run_all, run_named, Report, SampleConfig, SUITE_NAMES};
use nilbrace::{dimension, Element, Rank};

#[derive(Parser)]
#[command(
    name = "nilbrace",
    version,
    about = "Exact arithmetic in free left nilpotent braces of class at most two"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a brace word and print its canonical form
    Eval {
        /// Number of generators
        #[arg(short = 'r', value_name = "INT")]
        rank: u32,
        /// Word over x1..xr with +, -, . (product), * (star), ^ (power)
        expr: String,
        /// Print the JSON form instead of canonical text
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two brace words denote the same element
    Eq {
        #[arg(short = 'r', value_name = "INT")]
        rank: u32,
        expr1: String,
        expr2: String,
    },
    /// Run verification suites and print one JSON report per line
    Axioms {
        #[arg(short = 'r', value_name = "INT")]
        rank: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Coordinates are sampled uniformly from [-bound, bound]
        #[arg(long, default_value_t = 10)]
        bound: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// One of: axioms, star, nilpotency, symmetry, fold, closed-forms,
        /// exhaustive (default: all of them)
        #[arg(long)]
        suite: Option<String>,
    },
    /// Print the additive rank of the free brace
    Dim {
        #[arg(short = 'r', value_name = "INT")]
        rank: u32,
    },
    /// Evaluate a brace word and reduce it modulo an odd integer
    Quotient {
        #[arg(short = 'r', value_name = "INT")]
        rank: u32,
        /// Odd modulus, at least 3
        #[arg(short = 'm', value_name = "INT")]
        modulus: i64,
        expr: String,
        /// Print the JSON form (with its "mod" field) instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build a homomorphism from generator images and check its laws
    Homcheck {
        #[arg(short = 'r', value_name = "INT")]
        rank: u32,
        /// Check the reduction modulo an odd integer
        #[arg(short = 'm', value_name = "INT", conflicts_with_all = ["identity", "permute"])]
        modulus: Option<i64>,
        /// Check the identity homomorphism
        #[arg(long, conflicts_with = "permute")]
        identity: bool,
        /// Generator images as comma-separated indices, e.g. 2,1 (repeats
        /// are allowed; images need not be distinct)
        #[arg(long, value_name = "PERM")]
        permute: Option<String>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { rank, expr, json } => {
            let x = eval_word(rank, &expr)?;
            if json {
                println!("{}", x.to_json());
            } else {
                println!("{}", format_canonical(&x));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { rank, expr1, expr2 } => {
            let a = eval_word(rank, &expr1)?;
            let b = eval_word(rank, &expr2)?;
            if a == b {
                println!("equal");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not equal");
                Ok(ExitCode::from(1))
            }
        }
        Command::Axioms {
            rank,
            trials,
            bound,
            seed,
            suite,
        } => {
            let rank = Rank::new(rank).map_err(|e| e.to_string())?;
            let cfg = SampleConfig::new(rank, trials, bound, seed);
            let reports = match suite {
                None => run_all(&cfg),
                Some(name) => vec![run_named(&name, &cfg).ok_or_else(|| {
                    format!(
                        "unknown suite {name:?}; expected one of {}",
                        SUITE_NAMES.join(", ")
                    )
                })?],
            };
            print_reports(&reports)
        }
        Command::Dim { rank } => {
            let rank = Rank::new(rank).map_err(|e| e.to_string())?;
            println!("{}", dimension(rank));
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient {
            rank,
            modulus,
            expr,
            json,
        } => {
            let x = eval_word(rank, &expr)?;
            let reduced = reduce_mod(&x, modulus).map_err(|e| e.to_string())?;
            if json {
                println!("{}", reduced.to_json());
            } else {
                println!("{} (mod {modulus})", format_canonical(&reduced));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homcheck {
            rank,
            modulus,
            identity,
            permute,
            trials,
            seed,
        } => {
            let rank = Rank::new(rank).map_err(|e| e.to_string())?;
            let cfg = SampleConfig::new(rank, trials, 10, seed);
            let report = if let Some(m) = modulus {
                let target = ModularFreeBrace::with_modulus(rank, m).map_err(|e| e.to_string())?;
                let images = target.generators();
                Hom::new(target, rank, images)
                    .map_err(|e| e.to_string())?
                    .check(&cfg)
            } else if identity {
                let target = FreeBrace::new(rank);
                let images = target.generators();
                Hom::new(target, rank, images)
                    .map_err(|e| e.to_string())?
                    .check(&cfg)
            } else if let Some(spec) = permute {
                let images = parse_images(&spec, rank)?;
                Hom::new(FreeBrace::new(rank), rank, images)
                    .map_err(|e| e.to_string())?
                    .check(&cfg)
            } else {
                return Err("choose one of -m, --identity, --permute".to_string());
            };
            print_reports(&[report])
        }
    }
}

fn eval_word(rank: u32, word: &str) -> Result<Element, String> {
    let rank = Rank::new(rank).map_err(|e| e.to_string())?;
    let ast = parse(word).map_err(|e| e.to_string())?;
    evaluate(&ast, rank).map_err(|e| e.to_string())
}

fn parse_images(spec: &str, rank: Rank) -> Result<Vec<Element>, String> {
    let indices: Vec<u32> = spec
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid generator index {:?} in --permute", part.trim()))
        })
        .collect::<Result<_, _>>()?;
    if indices.len() != rank.get() as usize {
        return Err(format!(
            "--permute needs {} comma-separated indices, got {}",
            rank.get(),
            indices.len()
        ));
    }
    indices
        .into_iter()
        .map(|i| {
            Element::generator(rank, i)
                .map_err(|_| format!("generator index {i} exceeds rank {rank}"))
        })
        .collect()
}

fn print_reports(reports: &[Report]) -> Result<ExitCode, String> {
    for report in reports {
        println!("{}", report.to_json());
    }
    if reports.iter().all(Report::passed) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
