//! `pnsym`: batch front end for the PNSym algebra, the oracle checks and the
//! identity checker.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use pnsym_core::checker::{self, OperatorExpr, Verdict};
use pnsym_core::pnsym::{parse_element, rank, PnsymElement};
use pnsym_core::text::parse_weak_mopiscotion;
use pnsym_core::verify::{self, VerifyConfig};
use pnsym_core::Error;

#[derive(Parser)]
#[command(name = "pnsym", version, about = "Exact computations in PNSym and checks of operator identities")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// External product of the given elements, left to right.
    Mul {
        #[arg(required = true, num_args = 2..)]
        elements: Vec<String>,
    },
    /// Internal product of the given elements, left to right.
    Imul {
        #[arg(required = true, num_args = 2..)]
        elements: Vec<String>,
    },
    /// Coproduct of an element.
    Coproduct { element: String },
    /// Antipode of an element.
    Antipode { element: String },
    /// Reduce a weak mopiscotion such as `((3,0,1,2,0);[4,5,1,3,2])`.
    Reduce { mopiscotion: String },
    /// Rank of the degree-n component.
    Rank { n: usize },
    /// Check that an operator expression vanishes on degree m.
    Check {
        expr: String,
        #[arg(long)]
        degree: usize,
    },
    /// Smallest k with (F((i,j);id) - F((j,i);id))^k = 0 under the internal product.
    Ktable {
        i: u32,
        j: u32,
        #[arg(long = "max", default_value_t = 15)]
        k_max: u32,
    },
    /// Run the oracle verification families.
    Verify {
        #[arg(long, default_value_t = 4)]
        model_size: u32,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

/// Failure modes that map to exit codes 1 and 2.
enum Failure {
    Identity(String),
    Input { src: String, err: Error },
}

fn input(src: &str, err: Error) -> Failure {
    Failure::Input { src: src.to_string(), err }
}

fn read_element(src: &str) -> Result<PnsymElement, Failure> {
    let parsed = if src.trim_start().starts_with('[') {
        PnsymElement::from_json(src)
    } else {
        parse_element(src)
    };
    parsed.map_err(|e| input(src, e))
}

fn print_element(e: &PnsymElement, json: bool) {
    if json {
        println!("{}", e.to_json());
    } else {
        println!("{e}");
    }
}

fn fold_elements(
    srcs: &[String],
    op: impl Fn(&PnsymElement, &PnsymElement) -> PnsymElement,
) -> Result<PnsymElement, Failure> {
    let mut acc = read_element(&srcs[0])?;
    for s in &srcs[1..] {
        acc = op(&acc, &read_element(s)?);
    }
    Ok(acc)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Mul { elements } => print_element(&fold_elements(&elements, PnsymElement::external_mul)?, json),
        Command::Imul { elements } => print_element(&fold_elements(&elements, PnsymElement::internal_mul)?, json),
        Command::Coproduct { element } => {
            let d = read_element(&element)?.coproduct();
            if json {
                println!("{}", d.to_json());
            } else {
                println!("{d}");
            }
        }
        Command::Antipode { element } => print_element(&read_element(&element)?.antipode(), json),
        Command::Reduce { mopiscotion } => {
            let r = parse_weak_mopiscotion(&mopiscotion).map_err(|e| input(&mopiscotion, e))?.reduce();
            if json {
                println!("{}", json!({ "alpha": r.alpha().entries(), "sigma": r.sigma().one_line() }));
            } else {
                println!("{r}");
            }
        }
        Command::Rank { n } => {
            let r = rank(n);
            if json {
                println!("{}", json!({ "n": n, "rank": r.to_string() }));
            } else {
                println!("{r}");
            }
        }
        Command::Check { expr, degree } => {
            let e: OperatorExpr = checker::parse(&expr).map_err(|e| input(&expr, e))?;
            let verdict = checker::check_zero_on_degree(&e, degree);
            if json {
                let witness = match &verdict {
                    Verdict::Holds => serde_json::Value::Null,
                    Verdict::Fails { key, coeff } => {
                        json!(PnsymElement::term(coeff.clone(), key.clone()).to_json_terms()[0])
                    }
                };
                let v = json!({ "expr": e.to_string(), "degree": degree, "holds": verdict.holds(), "witness": witness });
                println!("{v}");
            } else {
                println!("{verdict}");
            }
            if !verdict.holds() {
                return Err(Failure::Identity(format!("{e} is nonzero on degree {degree}")));
            }
        }
        Command::Ktable { i, j, k_max } => {
            let k = checker::k_value(i, j, k_max);
            if json {
                println!("{}", json!({ "i": i, "j": j, "max": k_max, "k": k }));
            } else {
                match k {
                    Some(k) => println!("{k}"),
                    None => println!("not found (k > {k_max})"),
                }
            }
            if k.is_none() {
                return Err(Failure::Identity(format!("no k <= {k_max} for ({i},{j})")));
            }
        }
        Command::Verify { model_size, max_size } => {
            let reports = verify::run_all(VerifyConfig { model_size, max_size });
            if json {
                let v: Vec<_> = reports
                    .iter()
                    .map(|r| json!({ "family": r.name, "cases": r.cases, "failures": r.failures, "first_failure": r.first_failure }))
                    .collect();
                println!("{}", serde_json::Value::Array(v));
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure::Identity(format!("{failed} families failed")));
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    let n = std::env::var("PNSYM_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok());
    if let Some(n) = n.filter(|&n| n > 0) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input { src, err }) => {
            eprintln!("error: {err}");
            if let Error::Parse { pos, .. } = err {
                eprintln!("  {src}");
                eprintln!("  {}^", " ".repeat(src[..pos.min(src.len())].chars().count()));
            }
            ExitCode::from(2)
        }
    }
}
