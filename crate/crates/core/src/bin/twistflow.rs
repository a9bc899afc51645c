use std::process::ExitCode;

use clap::{Parser, Subcommand};

use twistflow::classify::{classify, enumerate, validate_invariant, ClassificationResult};
use twistflow::expr::{parse_manifold, FiberList};
use twistflow::homology::h1;
use twistflow::manifold::{homeomorphic_with, LensRelation};
use twistflow::report::classification_json;
use twistflow::seifert::is_prime;
use twistflow::selfcheck::selfcheck;
use twistflow::Error;

const EXIT_PARSE: u8 = 1;
const EXIT_INVALID_INVARIANT: u8 = 2;
const EXIT_SELFCHECK: u8 = 3;

#[derive(Parser)]
#[command(
    name = "twistflow",
    version,
    about = "Ambient manifolds of NMS flows with one twisted saddle orbit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the flow invariant (l1, m1, l2, m2)
    Classify {
        #[arg(allow_negative_numbers = true)]
        l1: i64,
        #[arg(allow_negative_numbers = true)]
        m1: i64,
        #[arg(allow_negative_numbers = true)]
        l2: i64,
        #[arg(allow_negative_numbers = true)]
        m2: i64,
        /// Emit JSON with sorted keys
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two manifold expressions are homeomorphic
    Homeo {
        expr1: String,
        expr2: String,
        /// Also identify L(p,q) with L(p,q') when q·q' = ±1 (mod p)
        #[arg(long)]
        unoriented: bool,
    },
    /// First homology of a manifold expression
    H1 { expr: String },
    /// Classify every quadruple with entries in [-N, N]
    Enumerate {
        #[arg(long)]
        bound: i64,
        /// Print homeomorphism classes instead of one line per quadruple
        #[arg(long)]
        group: bool,
    },
    /// Cross-validate the classifier and print a report
    Selfcheck {
        #[arg(long, default_value_t = 6)]
        bound: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidQuadruple { .. } => EXIT_INVALID_INVARIANT,
                _ => EXIT_PARSE,
            })
        }
    }
}

fn run(command: Command) -> twistflow::Result<ExitCode> {
    match command {
        Command::Classify { l1, m1, l2, m2, json } => {
            let r = classify(&validate_invariant(l1, m1, l2, m2)?)?;
            if json {
                println!("{}", classification_json(&r));
            } else {
                print_classification(&r);
            }
        }
        Command::Homeo {
            expr1,
            expr2,
            unoriented,
        } => {
            let a = parse_manifold(&expr1)?;
            let b = parse_manifold(&expr2)?;
            let rel = if unoriented {
                LensRelation::Unoriented
            } else {
                LensRelation::Oriented
            };
            println!("{}", homeomorphic_with(&a, &b, rel));
        }
        Command::H1 { expr } => println!("{}", h1(&parse_manifold(&expr)?)),
        Command::Enumerate { bound, group } => {
            if bound < 0 {
                eprintln!("error: --bound must be nonnegative");
                return Ok(ExitCode::from(EXIT_PARSE));
            }
            let classes = enumerate(bound)?;
            if group {
                for class in &classes {
                    println!("{}  [{} quadruples]", class.representative, class.members.len());
                    for r in &class.members {
                        let [a, b, c, d] = r.invariant.quadruple();
                        println!("    {a} {b} {c} {d}  case {}", r.case_number);
                    }
                }
            } else {
                let mut all: Vec<&ClassificationResult> = classes.iter().flat_map(|c| &c.members).collect();
                all.sort_by_key(|r| r.invariant);
                for r in all {
                    let [a, b, c, d] = r.invariant.quadruple();
                    println!("{a} {b} {c} {d}\tcase {}\t{}", r.case_number, r.manifold);
                }
            }
        }
        Command::Selfcheck { bound } => {
            if bound < 1 {
                eprintln!("error: --bound must be positive");
                return Ok(ExitCode::from(EXIT_PARSE));
            }
            let report = selfcheck(bound)?;
            println!("{report}");
            if report.hard_failures() > 0 {
                return Ok(ExitCode::from(EXIT_SELFCHECK));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_classification(r: &ClassificationResult) {
    println!("case {}: {}", r.case_number, r.manifold);
    println!("H1: {}", h1(&r.manifold));
    println!("prime: {}", is_prime(&r.manifold));
    if let Some(s) = &r.intermediate {
        println!("intermediate Seifert: SFS(S2; {})", FiberList(s.fibers()));
    }
}
