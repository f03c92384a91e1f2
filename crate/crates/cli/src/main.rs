use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use seidelgf3::algebra::ExponentTriple;
use seidelgf3::census::{census_audit, census_run, CensusConfig, LARGE_MAX_ORDER};
use seidelgf3::graph::{emit_graph6, parse_graph6, read_graph, GraphExpr};
use seidelgf3::realizer::{solve_basic_with, solve_extended, Extension, RealizeOutcome, RealizeStatus, DEFAULT_N_MAX};
use seidelgf3::seidel::{adjacency_charpoly, necessity_class, seidel_charpoly};
use seidelgf3::sweep::{self, Identity, SweepConfig};
use serde_json::json;

/// Seidel matrix characteristic polynomials over GF(3).
///
/// Graphs are given either as expressions (`3*K2 + ~K3`, `L(K5)`, `E4`)
/// or as graph6 strings; prefix with `g6:` to force graph6.
#[derive(Parser)]
#[command(name = "seidelgf3", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps and audits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of the Seidel (or adjacency) matrix.
    Charpoly {
        graph: String,
        /// Use the adjacency matrix instead of the Seidel matrix.
        #[arg(long)]
        adjacency: bool,
    },
    /// Check an identity exhaustively on small orders plus seeded samples.
    Verify(VerifyArgs),
    /// Build a graph whose Seidel polynomial is x^r (x-1)^s (x+1)^t.
    Realize {
        r: u64,
        s: u64,
        t: u64,
        /// Search the 3L(Kn) families even when r <= s + t.
        #[arg(long)]
        extended: bool,
        /// Largest n tried for 3L(Kn) blocks.
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        nmax: usize,
    },
    /// Tally Seidel polynomials over every labeled graph of each order.
    Census(CensusArgs),
    /// Convert between expressions and graph6.
    Convert {
        #[arg(long, conflicts_with = "from_g6", required_unless_present = "from_g6")]
        to_g6: Option<String>,
        /// Print a cograph as an expression (other graphs have none).
        #[arg(long)]
        from_g6: Option<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// thm1, unions, prop-d, cn or regular.
    which: Identity,
    /// Sampled inputs on top of the exhaustive ones.
    #[arg(long, default_value_t = 100)]
    random: usize,
    /// Largest sampled order (for prop-d: the bound on a and b).
    #[arg(long)]
    max_vertices: Option<usize>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Worker threads (defaults to the available cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// JSONL destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Permit order 8 (2^28 graphs).
    #[arg(long)]
    allow_large: bool,
    /// Recount this many random records afterwards.
    #[arg(long, default_value_t = 0)]
    audit: usize,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn charpoly(cli: &Cli, input: &str, adjacency: bool) -> Result<ExitCode, Failure> {
    let g = read_graph(input)?;
    let p = if adjacency { adjacency_charpoly(&g) } else { seidel_charpoly(&g) };
    let split = p.split_linear()?;
    if cli.json {
        let value = json!({
            "input": input,
            "matrix": if adjacency { "adjacency" } else { "seidel" },
            "order": g.order(),
            "poly": p.to_string(),
            "coeffs": p.to_bracket(),
            "exponents": split.exponents,
            "remainder": split.remainder.to_bracket(),
        });
        println!("{value}");
    } else {
        println!("{p}");
        println!("coeffs: {}", p.to_bracket());
        if !split.is_fully_split() {
            println!("factored: {}", p.factored_display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, Failure> {
    let cfg = SweepConfig {
        random: args.random,
        max_vertices: args.max_vertices.unwrap_or(args.which.default_max_vertices()),
        seed: cli.seed,
    };
    let outcome = sweep::run(args.which, &cfg);
    if cli.json {
        println!("{}", serde_json::to_string(&outcome)?);
    } else {
        let verdict = if outcome.passed() { "pass" } else { "FAIL" };
        println!("{}: {} cases, {} failures: {verdict}", outcome.identity, outcome.cases, outcome.failures.len());
        for f in &outcome.failures {
            println!("  {} {:?}: {} != {}", f.identity, f.inputs, f.lhs, f.rhs);
        }
    }
    Ok(if outcome.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn realize(cli: &Cli, target: ExponentTriple, extended: bool, nmax: usize) -> Result<ExitCode, Failure> {
    let out: RealizeOutcome = if extended && necessity_class(target) {
        let ext = solve_extended(target, nmax);
        if ext.witness().is_some() {
            ext
        } else {
            solve_basic_with(target, nmax)
        }
    } else {
        solve_basic_with(target, nmax)
    };
    if cli.json {
        println!("{}", serde_json::to_string(&out)?);
    } else {
        match &out.status {
            RealizeStatus::Witness { witness } => {
                let p = &witness.basic;
                let ext = match witness.extension {
                    Extension::None => String::new(),
                    Extension::FourK1 => " with 4*K1".into(),
                    Extension::LineTriple { n } => format!(" with 3*L(K{n})"),
                    Extension::LineTripleComplement { n } => format!(" with ~(3*L(K{n}))"),
                };
                println!("witness: {witness}");
                println!("params: a={} b={} c={} d={} e={} f={}{ext}", p.a, p.b, p.c, p.d, p.e, p.f);
                println!("vertices: {}", witness.vertex_count());
                println!("verified: {}", out.verified);
            }
            RealizeStatus::Unrealizable { reason } => println!("unrealizable: {reason}"),
            RealizeStatus::Unknown => println!(
                "unknown: no basic or 3L(Kn) construction with n <= {nmax} gives {target}; \
                 no impossibility claim is made"
            ),
        }
    }
    Ok(match out.status {
        RealizeStatus::Unknown => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    })
}

fn census(cli: &Cli, args: &CensusArgs) -> Result<ExitCode, Failure> {
    let jobs = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|c| c.get()).unwrap_or(1));
    let cfg = CensusConfig { n_lo: args.min_n, n_hi: args.max_n, workers: jobs.max(1), allow_large: args.allow_large };
    if args.max_n == LARGE_MAX_ORDER && args.allow_large {
        eprintln!("note: order {LARGE_MAX_ORDER} enumerates 2^28 graphs; expect a long run");
    }
    let summary = match &args.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            census_run(&cfg, &mut file)?
        }
        None => census_run(&cfg, &mut io::stdout().lock())?,
    };
    let audit = (args.audit > 0).then(|| census_audit(&summary, args.audit, cli.seed));

    let line = format!(
        "{} graphs, {} records, {} violations{}",
        summary.total,
        summary.records.len(),
        summary.violations.len(),
        match audit {
            Some(true) => ", audit pass",
            Some(false) => ", audit FAIL",
            None => "",
        }
    );
    if args.out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(if summary.violations.is_empty() && audit != Some(false) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn convert(cli: &Cli, to_g6: Option<&str>, from_g6: Option<&str>) -> Result<ExitCode, Failure> {
    let text = match (to_g6, from_g6) {
        (Some(input), _) => emit_graph6(&read_graph(input)?),
        (None, Some(code)) => {
            let g = parse_graph6(code.strip_prefix("g6:").unwrap_or(code))?;
            GraphExpr::from_graph(&g)
                .ok_or_else(|| Failure("graph is not a cograph, so it has no expression form".into()))?
                .to_string()
        }
        (None, None) => unreachable!("clap requires one direction"),
    };
    if cli.json {
        println!("{}", json!({ "output": text }));
    } else {
        println!("{text}");
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Charpoly { graph, adjacency } => charpoly(&cli, graph, *adjacency),
        Command::Verify(args) => verify(&cli, args),
        Command::Realize { r, s, t, extended, nmax } => {
            realize(&cli, ExponentTriple::new(*r, *s, *t), *extended, *nmax)
        }
        Command::Census(args) => census(&cli, args),
        Command::Convert { to_g6, from_g6 } => convert(&cli, to_g6.as_deref(), from_g6.as_deref()),
    };
    match result {
        Ok(code) => {
            let _ = io::stdout().flush();
            code
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
