//! Command-line interface to the diagram-algebra library.
//!
//! Exit codes: 0 on success, 1 on usage or computation errors, 2 when a
//! mathematical verdict is negative (a non-semisimple specialisation or a
//! failed axiom check).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use kmy::cells::{gram_matrix, semisimple_at};
use kmy::decompose::{decompose_constructive, decompose_search, GeneratorWord};
use kmy::diagram::Diagram;
use kmy::height::{height_exact, height_upper_bound};
use kmy::ring::parse_delta;
use kmy::specht::{Partition, SpechtModule};
use kmy::tower;
use kmy::{KmyAlgebra, RingSpec};

#[derive(Parser)]
#[command(
    name = "kmy",
    version,
    about = "Exact calculus for the height-bounded diagram algebras J_{l,n}(delta)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Write output to a file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SizeArgs {
    /// Strand count.
    #[arg(short)]
    n: usize,
    /// Height bound, -1 <= l <= n-2.
    #[arg(short, allow_hyphen_values = true)]
    l: i64,
}

#[derive(Args)]
struct CellArgs {
    /// Propagating count of the cell.
    #[arg(short)]
    p: usize,
    /// Partition as comma-separated parts; omit for the empty partition.
    #[arg(long, default_value = "")]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of J_{l,n}.
    Dim(SizeArgs),
    /// The diagram basis of J_{l,n}, one canonical diagram per line.
    Basis(SizeArgs),
    /// Exact height of a diagram (also reports the drawing upper bound).
    Height {
        #[arg(short)]
        n: usize,
        /// Diagram in the pair grammar, e.g. "1-2 1'-2'".
        diagram: String,
    },
    /// Stacking product of two diagrams, with the delta exponent.
    Mul {
        #[arg(short)]
        n: usize,
        left: String,
        right: String,
    },
    /// Gram matrix of a cell module over Q[delta].
    Gram {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Gram determinant of a cell module.
    GramDet {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Evaluate every cell's Gram determinant at delta and report the
    /// semisimplicity verdict (exit code 2 when not semisimple).
    Semisimple {
        #[command(flatten)]
        size: SizeArgs,
        /// delta as `p/q` or a Gaussian rational `a+bi`.
        #[arg(long)]
        delta: String,
    },
    /// Restriction rule check for one cell (axiom A5).
    Restrict {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Run every tower axiom check (exit code 2 on failure).
    Axioms {
        #[command(flatten)]
        size: SizeArgs,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decompose a diagram into a word in the generators.
    Decompose {
        #[command(flatten)]
        size: SizeArgs,
        diagram: String,
        #[arg(long, default_value = "constructive", value_parser = ["search", "constructive"])]
        method: String,
    },
    /// Specht module data for a partition.
    Specht {
        #[arg(long, default_value = "")]
        lambda: String,
    },
}

fn parse_partition(s: &str) -> kmy::Result<Partition> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = trimmed.split(',').map(|p| p.trim().parse()).collect();
    match parts {
        Ok(parts) => Partition::new(parts),
        Err(_) => Err(kmy::KmyError::ParseError(format!("bad partition `{s}`"))),
    }
}

enum Outcome {
    Ok(String),
    VerdictNegative(String),
}

fn run(cli: &Cli) -> kmy::Result<Outcome> {
    let json = cli.format == "json";
    let out = match &cli.command {
        Command::Dim(args) => {
            let algebra = KmyAlgebra::new(args.n, args.l, RingSpec::Laurent)?;
            if json {
                Outcome::Ok(
                    json!({"schema": 1, "command": "dim", "n": args.n, "l": args.l, "dim": algebra.dim()})
                        .to_string(),
                )
            } else {
                Outcome::Ok(algebra.dim().to_string())
            }
        }
        Command::Basis(args) => {
            let algebra = KmyAlgebra::new(args.n, args.l, RingSpec::Laurent)?;
            let lines: Vec<String> = algebra.basis().iter().map(|d| d.to_string()).collect();
            if json {
                Outcome::Ok(
                    json!({"schema": 1, "command": "basis", "n": args.n, "l": args.l, "basis": lines})
                        .to_string(),
                )
            } else {
                Outcome::Ok(lines.join("\n"))
            }
        }
        Command::Height { n, diagram } => {
            let d = Diagram::parse(*n, diagram)?;
            let h = height_exact(&d);
            let ub = height_upper_bound(&d);
            if json {
                Outcome::Ok(
                    json!({"schema": 1, "command": "height", "n": n, "diagram": d.to_string(), "height": h, "upper_bound": ub})
                        .to_string(),
                )
            } else {
                Outcome::Ok(h.to_string())
            }
        }
        Command::Mul { n, left, right } => {
            let a = Diagram::parse(*n, left)?;
            let b = Diagram::parse(*n, right)?;
            let (loops, prod) = a.multiply(&b)?;
            if json {
                Outcome::Ok(
                    json!({"schema": 1, "command": "mul", "n": n, "loops": loops, "product": prod.to_string()})
                        .to_string(),
                )
            } else {
                Outcome::Ok(format!("d^{loops} {prod}"))
            }
        }
        Command::Gram { size, cell } => {
            let lambda = parse_partition(&cell.lambda)?;
            let gram = gram_matrix(size.n, size.l, cell.p, lambda)?;
            if json {
                Outcome::Ok(gram.to_json())
            } else {
                let mut lines = vec![format!(
                    "Gram matrix of Delta_({},{})({}, {}), dim {}",
                    size.l,
                    size.n,
                    cell.p,
                    gram.lambda,
                    gram.dim()
                )];
                for row in &gram.entries {
                    let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                    lines.push(format!("[ {} ]", cells.join(" , ")));
                }
                Outcome::Ok(lines.join("\n"))
            }
        }
        Command::GramDet { size, cell } => {
            let lambda = parse_partition(&cell.lambda)?;
            let det = gram_matrix(size.n, size.l, cell.p, lambda)?.det()?;
            if json {
                Outcome::Ok(
                    json!({"schema": 1, "command": "gram-det", "n": size.n, "l": size.l, "p": cell.p, "det": det.to_string()})
                        .to_string(),
                )
            } else {
                Outcome::Ok(det.to_string())
            }
        }
        Command::Semisimple { size, delta } => {
            let delta0 = parse_delta(delta)?;
            let report = semisimple_at(size.n, size.l, &delta0)?;
            let text = if json {
                serde_json::to_string_pretty(&report).expect("serializable")
            } else {
                let mut lines = Vec::new();
                for c in &report.cells {
                    lines.push(format!(
                        "cell p={} lambda={:?} dim={} det={} at delta: {} ({})",
                        c.p,
                        c.lambda,
                        c.dim,
                        c.det,
                        c.det_at_delta,
                        if c.nonzero { "nonzero" } else { "ZERO" }
                    ));
                }
                lines.push(format!(
                    "verdict: {}",
                    if report.semisimple { "semisimple" } else { "not semisimple" }
                ));
                lines.join("\n")
            };
            if report.semisimple {
                Outcome::Ok(text)
            } else {
                Outcome::VerdictNegative(text)
            }
        }
        Command::Restrict { size, cell } => {
            let lambda = parse_partition(&cell.lambda)?;
            let report = tower::restriction_check(size.n, size.l, cell.p, lambda)?;
            let ok = report.is_verified();
            let text = if json {
                serde_json::to_string_pretty(&json!({"schema": 1, "command": "restrict", "report": report}))
                    .expect("serializable")
            } else {
                format!("{:?}: {}", report.status, report.detail)
            };
            if ok {
                Outcome::Ok(text)
            } else {
                Outcome::VerdictNegative(text)
            }
        }
        Command::Axioms { size, seed } => {
            let reports = tower::check_all(size.n, size.l, *seed)?;
            let all_ok = reports.iter().all(|r| r.status != tower::Status::Failed);
            let text = if json {
                serde_json::to_string_pretty(
                    &json!({"schema": 1, "command": "axioms", "seed": seed, "reports": reports}),
                )
                .expect("serializable")
            } else {
                reports
                    .iter()
                    .map(|r| format!("{:<12} {:?}: {}", r.axiom, r.status, r.detail))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            if all_ok {
                Outcome::Ok(text)
            } else {
                Outcome::VerdictNegative(text)
            }
        }
        Command::Decompose { size, diagram, method } => {
            let d = Diagram::parse(size.n, diagram)?;
            let word: GeneratorWord = if method == "search" {
                decompose_search(&d, size.l)?
            } else {
                decompose_constructive(&d, size.l)?
            };
            if json {
                Outcome::Ok(
                    json!({
                        "schema": 1,
                        "command": "decompose",
                        "n": size.n,
                        "l": size.l,
                        "method": method,
                        "word": word.to_string(),
                        "length": word.len(),
                        "delta_exponent": word.delta_exponent,
                    })
                    .to_string(),
                )
            } else {
                Outcome::Ok(word.to_string())
            }
        }
        Command::Specht { lambda } => {
            let lambda = parse_partition(lambda)?;
            let module = SpechtModule::new(lambda.clone());
            let gram: Vec<Vec<String>> = module
                .gram()
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            if json {
                Outcome::Ok(
                    json!({
                        "schema": 1,
                        "command": "specht",
                        "lambda": lambda.parts(),
                        "dim": module.dim(),
                        "tabloids": module.tabloid_count(),
                        "gram": gram,
                    })
                    .to_string(),
                )
            } else {
                let mut lines = vec![
                    format!("S^{lambda}: dim {}", module.dim()),
                    format!("tabloids: {}", module.tabloid_count()),
                ];
                for row in &gram {
                    lines.push(format!("[ {} ]", row.join(" , ")));
                }
                Outcome::Ok(lines.join("\n"))
            }
        }
    };
    Ok(out)
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{text}")
        }
        None => {
            // tolerate downstream pipes closing early
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other,
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(text)) => {
            if emit(&cli, &text).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerdictNegative(text)) => {
            if emit(&cli, &text).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
