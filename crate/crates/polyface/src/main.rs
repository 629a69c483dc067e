//! Command-line front end.
//!
//! Exit codes form the contract CI gates on: 0 means success and every
//! checked property held, 1 means a property violation or census/oracle
//! mismatch, 2 means bad usage or malformed input.

use clap::{Parser, Subcommand, ValueEnum};
use polyface::census::Polytope;
use polyface::poset::Poset;
use polyface::set::MAX_ELEMENTS;
use polyface::verify::SweepOptions;
use polyface::{gen, report, verify};
use serde::Serialize;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "polyface",
    version,
    about = "Census of the low-dimensional faces of order and chain polytopes",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit posets as JSON
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Count vertices, edges, triangles, and squares combinatorially
    Census {
        /// Which polytope to report on
        #[arg(long, value_enum, default_value_t = PolytopeArg::Both)]
        polytope: PolytopeArg,
        /// Also run the geometric recount and compare
        #[arg(long)]
        oracle: bool,
        /// Poset JSON file; standard input when omitted
        input: Option<PathBuf>,
    },
    /// Recount the faces from exact coordinate geometry only
    Oracle {
        #[arg(long, value_enum, default_value_t = PolytopeArg::Both)]
        polytope: PolytopeArg,
        input: Option<PathBuf>,
    },
    /// Check every property on every poset up to a size bound
    Verify {
        /// Largest poset size to sweep
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest size for the geometric face enumeration
        #[arg(long, default_value_t = 5)]
        oracle_max_n: usize,
        /// Worker threads; defaults to the available parallelism
        #[arg(long)]
        jobs: Option<usize>,
        /// Corrupt one census count to prove the sweep catches it
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Match the square faces of the two polytopes pairwise
    Bijection {
        input: Option<PathBuf>,
    },
    /// Print the Hasse diagram in DOT format
    Dot {
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// A named example: chain, antichain, v, lambda, x5, or diamond
    Named {
        name: String,
        /// Element count, for the families that need one
        #[arg(long)]
        k: Option<usize>,
    },
    /// A pseudorandom poset, reproducible from the seed
    Random {
        #[arg(long)]
        n: usize,
        /// Probability of keeping each candidate relation
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every poset of size n up to isomorphism, one JSON object per line
    All {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolytopeArg {
    O,
    C,
    Both,
}

impl PolytopeArg {
    fn kinds(self) -> Vec<Polytope> {
        match self {
            PolytopeArg::O => vec![Polytope::Order],
            PolytopeArg::C => vec![Polytope::Chain],
            PolytopeArg::Both => vec![Polytope::Order, Polytope::Chain],
        }
    }
}

/// Anything that should end the process with exit code 2.
#[derive(Debug, thiserror::Error)]
enum UsageError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid poset: {0}")]
    BadPoset(#[from] serde_json::Error),
    #[error(transparent)]
    Gen(#[from] gen::GenError),
    #[error("{0}")]
    Other(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("polyface: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)` = clean exit, `Ok(false)` = a property violation was found
/// and reported on standard output.
fn run(command: Command) -> Result<bool, UsageError> {
    match command {
        Command::Gen { what } => run_gen(what),
        Command::Census { polytope, oracle, input } => {
            let p = read_poset(input.as_deref())?;
            run_census(&p, polytope, oracle)
        }
        Command::Oracle { polytope, input } => {
            let p = read_poset(input.as_deref())?;
            run_oracle(&p, polytope)
        }
        Command::Verify { max_n, oracle_max_n, jobs, inject_fault } => {
            run_verify(max_n, oracle_max_n, jobs, inject_fault)
        }
        Command::Bijection { input } => {
            let p = read_poset(input.as_deref())?;
            let report = report::bijection_report(&p);
            print_json_pretty(&report);
            Ok(report.is_clean())
        }
        Command::Dot { input } => {
            let p = read_poset(input.as_deref())?;
            emit(to_dot(&p).trim_end());
            Ok(true)
        }
    }
}

fn run_gen(what: GenCommand) -> Result<bool, UsageError> {
    match what {
        GenCommand::Named { name, k } => {
            print_json(&gen::named(&name, k)?);
        }
        GenCommand::Random { n, density, seed } => {
            if n > MAX_ELEMENTS {
                return Err(UsageError::Other(format!(
                    "n = {n} exceeds the supported maximum of {MAX_ELEMENTS}"
                )));
            }
            if !(0.0..=1.0).contains(&density) {
                return Err(UsageError::Other(format!(
                    "density must lie in [0, 1], got {density}"
                )));
            }
            print_json(&gen::random(n, density, seed));
        }
        GenCommand::All { n } => {
            for p in gen::all_posets_bounded(n, size_cap()?)? {
                print_json(&p);
            }
        }
    }
    Ok(true)
}

fn run_census(p: &Poset, polytope: PolytopeArg, with_oracle: bool) -> Result<bool, UsageError> {
    let mut clean = true;
    let mut sections = serde_json::Map::new();
    for kind in polytope.kinds() {
        let key = match kind {
            Polytope::Order => "o",
            Polytope::Chain => "c",
        };
        let value = if with_oracle {
            match report::census_with_oracle(p, kind) {
                Ok(combined) => {
                    clean &= combined.matches;
                    serde_json::to_value(&combined).expect("reports serialize")
                }
                Err(e) => {
                    // A geometry failure on a valid poset is a finding, not
                    // a usage problem.
                    clean = false;
                    serde_json::json!({ "error": e.to_string() })
                }
            }
        } else {
            serde_json::to_value(report::census_report(p, kind)).expect("reports serialize")
        };
        sections.insert(key.to_owned(), value);
    }
    let json = if sections.len() == 1 {
        sections.into_iter().next().expect("one section").1
    } else {
        serde_json::Value::Object(sections)
    };
    println!("{}", serde_json::to_string_pretty(&json).expect("valid JSON"));
    Ok(clean)
}

fn run_oracle(p: &Poset, polytope: PolytopeArg) -> Result<bool, UsageError> {
    let mut clean = true;
    let mut sections = serde_json::Map::new();
    for kind in polytope.kinds() {
        let key = match kind {
            Polytope::Order => "o",
            Polytope::Chain => "c",
        };
        let value = match report::oracle_report(p, kind) {
            Ok(report) => serde_json::to_value(&report).expect("reports serialize"),
            Err(e) => {
                clean = false;
                serde_json::json!({ "error": e.to_string() })
            }
        };
        sections.insert(key.to_owned(), value);
    }
    let json = if sections.len() == 1 {
        sections.into_iter().next().expect("one section").1
    } else {
        serde_json::Value::Object(sections)
    };
    println!("{}", serde_json::to_string_pretty(&json).expect("valid JSON"));
    Ok(clean)
}

fn run_verify(
    max_n: usize,
    oracle_max_n: usize,
    jobs: Option<usize>,
    inject_fault: bool,
) -> Result<bool, UsageError> {
    let cap = size_cap()?;
    if max_n > cap {
        return Err(UsageError::Other(format!(
            "--max-n {max_n} exceeds the size cap {cap}; raise POLYFACE_MAX_N if you mean it"
        )));
    }
    // The geometric enumeration is cubic in the vertex count, which is
    // itself exponential in n; past 5 a sweep stops being interactive.
    const ORACLE_LIMIT: usize = 5;
    if oracle_max_n > ORACLE_LIMIT {
        return Err(UsageError::Other(format!(
            "--oracle-max-n {oracle_max_n} exceeds the supported maximum of {ORACLE_LIMIT}"
        )));
    }
    let jobs = match jobs {
        Some(0) => {
            return Err(UsageError::Other("--jobs must be at least 1".to_owned()));
        }
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |j| j.get()),
    };
    let opts = SweepOptions { max_n, oracle_max_n, jobs, inject_fault };
    let report = verify::run_sweep(&opts);
    print_json_pretty(&report);
    Ok(report.is_clean())
}

/// Upper limit for exhaustive enumeration, overridable via the
/// `POLYFACE_MAX_N` environment variable.
fn size_cap() -> Result<usize, UsageError> {
    match std::env::var("POLYFACE_MAX_N") {
        Ok(raw) => raw.parse().map_err(|_| {
            UsageError::Other(format!("POLYFACE_MAX_N must be an integer, got {raw:?}"))
        }),
        Err(_) => Ok(gen::DEFAULT_MAX_N),
    }
}

fn read_poset(input: Option<&Path>) -> Result<Poset, UsageError> {
    let text = match input {
        Some(path) if path != Path::new("-") => std::fs::read_to_string(path)?,
        _ => {
            let mut buffer = String::new();
            std::io::stdin().read_to_string(&mut buffer)?;
            buffer
        }
    };
    Ok(serde_json::from_str(&text)?)
}

fn print_json<T: Serialize>(value: &T) {
    emit(&serde_json::to_string(value).expect("reports serialize"));
}

fn print_json_pretty<T: Serialize>(value: &T) {
    emit(&serde_json::to_string_pretty(value).expect("reports serialize"));
}

/// Write one line to stdout. A closed pipe ends the program quietly, so
/// `polyface gen all --n 6 | head` behaves like any other filter.
fn emit(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("polyface: cannot write output: {e}");
        std::process::exit(2);
    }
}

fn to_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for i in 0..p.n() {
        out.push_str(&format!("  {i};\n"));
    }
    for (lo, hi) in p.covers() {
        out.push_str(&format!("  {lo} -> {hi};\n"));
    }
    out.push_str("}\n");
    out
}
