use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use diam2col::c3c7::solve_c3c7;
use diam2col::c4cs::solve_c4cs;
use diam2col::generate::{
    generate, Constraint, Family, GenError, GeneratorSpec, DEFAULT_REJECTION_BUDGET,
};
use diam2col::instance::{parse_instance, write_instance, Instance};
use diam2col::oracle::Oracle;
use diam2col::properties::{check_property, one_indexed, Property};
use diam2col::solve::{solve_oracle, SolveError, SolveResult, SolverConfig};

/// Largest cycle length auto mode scans for when picking `s`.
const AUTO_SCAN_BOUND: usize = 12;

#[derive(Parser)]
#[command(
    name = "diam2col",
    version,
    about = "List 3-coloring for diameter-two graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a coloring when one exists.
    Solve {
        #[arg(long, value_enum, default_value_t = SolverKind::Auto)]
        solver: SolverKind,
        /// Forbidden cycle length for the c4cs solver.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        telemetry: bool,
    },
    /// Report whether the graph has each listed property.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated: diam2, c3, c4, c5, c7, cs=<k>.
        #[arg(long, value_delimiter = ',', required = true)]
        properties: Vec<Property>,
    },
    /// Write a named or random instance.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated: c3free, c4free, c7free, csfree(<k>).
        #[arg(long, value_delimiter = ',')]
        constraints: Vec<Constraint>,
        #[arg(long, default_value_t = DEFAULT_REJECTION_BUDGET)]
        budget: usize,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverKind {
    C4cs,
    C3c7,
    Oracle,
    Auto,
}

enum Failure {
    /// Unusable input or arguments.
    Input(String),
    /// The instance is outside the solver's class, or generation gave up.
    Precondition(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve {
            solver,
            s,
            input,
            telemetry,
        } => cmd_solve(solver, s, &input, telemetry),
        Command::Check { input, properties } => cmd_check(&input, &properties),
        Command::Gen {
            family,
            n,
            p,
            seed,
            constraints,
            budget,
            out,
        } => cmd_gen(family, n, p, seed, constraints, budget, out.as_deref()),
    };
    match result {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_solve(
    solver: SolverKind,
    s: Option<usize>,
    input: &Path,
    telemetry: bool,
) -> Result<String, Failure> {
    match (solver, s) {
        (SolverKind::C4cs, None) => {
            return Err(Failure::Input("--s is required with --solver c4cs".into()))
        }
        (SolverKind::C4cs, Some(_)) | (_, None) => {}
        (_, Some(_)) => return Err(Failure::Input("--s only applies to --solver c4cs".into())),
    }
    let inst = read_instance(input)?;
    let (g, lists) = (&inst.graph, &inst.lists);
    let config = SolverConfig::default();
    let result = match (solver, s) {
        (SolverKind::C4cs, Some(s)) => solve_c4cs(g, lists, s, &config),
        (SolverKind::C3c7, _) => solve_c3c7(g, lists, &config),
        (SolverKind::Oracle, _) => solve_oracle(g, lists, Oracle::default()),
        _ => {
            let triangle_free = g.find_induced_cycle(3).is_none();
            if triangle_free && g.find_induced_cycle(7).is_none() {
                solve_c3c7(g, lists, &config)
            } else if let Some(s) = least_absent_cycle(g) {
                solve_c4cs(g, lists, s, &config)
            } else {
                eprintln!("warning: graph is in neither solver class up to C{AUTO_SCAN_BOUND}; using the oracle");
                solve_oracle(g, lists, Oracle::default())
            }
        }
    };
    let result = result.map_err(|e| Failure::Precondition(describe(&e)))?;
    Ok(render(&result, telemetry))
}

/// Least `s` in `5..=AUTO_SCAN_BOUND` with the graph (C4, Cs)-free.
fn least_absent_cycle(g: &diam2col::graph::Graph) -> Option<usize> {
    if g.find_induced_cycle(4).is_some() {
        return None;
    }
    (5..=AUTO_SCAN_BOUND).find(|&s| g.find_induced_cycle(s).is_none())
}

fn render(result: &SolveResult, telemetry: bool) -> String {
    let mut out = String::new();
    match result.decision.coloring() {
        Some(c) => {
            out.push_str("YES\n");
            for (v, color) in c.as_slice().iter().enumerate() {
                out.push_str(&format!("v {} {color}\n", v + 1));
            }
        }
        None => out.push_str("NO\n"),
    }
    if telemetry {
        let t = &result.telemetry;
        out.push_str(&format!(
            "instances={} fallback={}\n",
            t.instances, t.fallback
        ));
    }
    out
}

fn describe(e: &SolveError) -> String {
    let detail = match e {
        SolveError::NotDiameterTwo(p) => format!("d({},{})={}", p.u + 1, p.v + 1, p.distance),
        SolveError::HasInducedC3(c) | SolveError::HasInducedC4(c) | SolveError::HasInducedC7(c) => {
            one_indexed(&c.vertices)
        }
        SolveError::HasInducedCs { s, certificate } => {
            format!("s={s} {}", one_indexed(&certificate.vertices))
        }
        SolveError::CertificateInvalid(c) => one_indexed(&c.vertices),
        SolveError::PartitionLeftover(v) => format!("vertex {}", v + 1),
        SolveError::LemmaViolation(v) => format!("{} {}", v.rule, one_indexed(&v.witnesses)),
        other => other.to_string(),
    };
    format!("{}: {detail}", e.name())
}

fn cmd_check(input: &Path, properties: &[Property]) -> Result<String, Failure> {
    let inst = read_instance(input)?;
    Ok(properties
        .iter()
        .map(|&p| format!("{p}: {}\n", check_property(&inst.graph, p)))
        .collect())
}

fn cmd_gen(
    family: Family,
    n: Option<usize>,
    p: Option<f64>,
    seed: u64,
    constraints: Vec<Constraint>,
    budget: usize,
    out: Option<&Path>,
) -> Result<String, Failure> {
    let spec = match family {
        Family::RandomDiam2 => {
            let (Some(n), Some(p)) = (n, p) else {
                return Err(Failure::Input("random_diam2 needs --n and --p".into()));
            };
            GeneratorSpec {
                budget,
                ..GeneratorSpec::random(n, p, seed, &constraints)
            }
        }
        named => GeneratorSpec::named(named),
    };
    let g = generate(&spec).map_err(|e| match e {
        GenError::RejectionBudgetExhausted { .. } => {
            Failure::Precondition(format!("RejectionBudgetExhausted: {e}"))
        }
        other => Failure::Input(other.to_string()),
    })?;
    let text = write_instance(&Instance::with_full_lists(g)).expect("full lists are writable");
    match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
