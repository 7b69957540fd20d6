//! `monideal` command-line front end.
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 usage or parse
//! error, 3 resource cap exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monideal::closure::integral_closure;
use monideal::graphs::{cover_ideal, fhv_components, fhv_square_decomposition, induced_odd_cycles, verify_p1};
use monideal::io::{parse_graph, parse_ideal, write_ideal};
use monideal::persistence::{check_degree2_sweep, counterexample_report, persistence_report, ScanOptions};
use monideal::primes::{alexander_dual, associated_primes, irreducible_decomposition, maximal_ideal_associated};
use monideal::resolution::{betti_numbers_with_cap, DEFAULT_LATTICE_CAP};
use monideal::{AssMethod, Error, MonomialIdeal, SimpleGraph};
use serde::Serialize;
use serde_json::{json, Value};

const SCHEMA: &str = "monideal.v1";

#[derive(Parser)]
#[command(name = "monideal", version, about = "Exact computations with monomial ideals")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Witness,
    Decomp,
}

impl From<MethodArg> for AssMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Witness => AssMethod::WitnessSearch,
            MethodArg::Decomp => AssMethod::Decomposition,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// K-th power of an ideal.
    Power {
        file: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Colon ideal (A : B).
    Colon { a: PathBuf, b: PathBuf },
    /// Intersection of two ideals.
    Intersect { a: PathBuf, b: PathBuf },
    /// Radical of an ideal.
    Radical { file: PathBuf },
    /// Integral closure of an ideal.
    Closure { file: PathBuf },
    /// Alexander dual of a square-free ideal.
    Dual { file: PathBuf },
    /// Associated primes of I, or of I^K with -k.
    Ass {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "witness")]
        method: MethodArg,
        #[arg(short, default_value_t = 1)]
        k: u32,
    },
    /// Irredundant irreducible decomposition.
    Irrdec { file: PathBuf },
    /// Depth of R/I^K.
    Depth {
        file: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: u32,
        /// Compute the exact depth from Betti numbers.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
    },
    /// Persistence scan over I, I^2, ..., I^KMAX.
    Persist {
        file: PathBuf,
        #[arg(long, default_value_t = monideal::persistence::DEFAULT_KMAX)]
        kmax: u32,
        #[arg(long, value_enum, default_value = "witness")]
        method: MethodArg,
        /// Recompute every Ass set with the other algorithm.
        #[arg(long)]
        audit: bool,
        /// Exact depths from Betti numbers.
        #[arg(long)]
        exact_depth: bool,
        /// Treat any strong persistence violation as a failed claim.
        #[arg(long)]
        expect_strong: bool,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
    },
    /// Checks on graph cover ideals.
    Graph {
        #[command(subcommand)]
        check: GraphCommand,
    },
    /// Reproduce the seven-variable counterexample.
    PaperExample {
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, value_enum, default_value = "witness")]
        method: MethodArg,
        #[arg(long)]
        audit: bool,
        #[arg(long)]
        exact_depth: bool,
    },
    /// Strong persistence sweep over random ideals generated in degree ≤ 2.
    CheckDegree2 {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Cover ideal of the graph.
    Cover { file: PathBuf },
    /// Compare the edge and odd-cycle decomposition with J^2.
    Fhv { file: PathBuf },
    /// Check that J^2 is integrally closed and (J^3 : J) = J^2.
    P1 { file: PathBuf },
}

enum Failure {
    Usage(String),
    Claim(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LatticeCap { .. } | Error::TooManyVariables { .. } | Error::ExponentOverflow => Failure::Cap(e.to_string()),
            Error::ClaimFailed { .. } => Failure::Claim(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Text and JSON renderings of a command result, plus whether every
/// checked claim held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize to JSON")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    let parsed = parse_ideal(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.ideal)
}

fn load_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn ideal_output(ideal: &MonomialIdeal) -> Output {
    Output::ok(write_ideal(ideal), to_json(ideal))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn fmt_list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Power { file, k } => Ok(ideal_output(&load_ideal(file)?.power(*k)?)),
        Command::Colon { a, b } => Ok(ideal_output(&load_ideal(a)?.colon_ideal(&load_ideal(b)?)?)),
        Command::Intersect { a, b } => Ok(ideal_output(&load_ideal(a)?.intersect(&load_ideal(b)?)?)),
        Command::Radical { file } => Ok(ideal_output(&load_ideal(file)?.radical())),
        Command::Closure { file } => Ok(ideal_output(&integral_closure(&load_ideal(file)?)?)),
        Command::Dual { file } => Ok(ideal_output(&alexander_dual(&load_ideal(file)?)?)),
        Command::Ass { file, method, k } => {
            let ideal = load_ideal(file)?.power(*k)?;
            let report = associated_primes(&ideal, (*method).into())?;
            let mut text = String::new();
            for p in &report.primes {
                text.push_str(&format!("{p}\n"));
            }
            Ok(Output::ok(
                text,
                json!({
                    "k": k,
                    "method": to_json(&report.method),
                    "primes": to_json(&report.primes),
                    "contains_maximal": report.contains_maximal(),
                }),
            ))
        }
        Command::Irrdec { file } => {
            let comps = irreducible_decomposition(&load_ideal(file)?)?;
            let text = comps.iter().map(|c| format!("{}\n", c.to_ideal())).collect();
            Ok(Output::ok(text, json!({ "components": to_json(&comps) })))
        }
        Command::Depth {
            file,
            k,
            exact,
            lattice_cap,
        } => {
            let ideal = load_ideal(file)?.power(*k)?;
            let associated = maximal_ideal_associated(&ideal)?;
            if *exact {
                let betti = betti_numbers_with_cap(&ideal, *lattice_cap)?;
                let pd = betti.projective_dimension();
                let depth = ideal.nvars() - pd;
                Ok(Output::ok(
                    format!(
                        "depth R/I^{k} = {depth}\nprojective dimension = {pd}\ntotal Betti numbers = {:?}\nm associated: {associated}\n",
                        betti.totals()
                    ),
                    json!({
                        "k": k,
                        "depth": depth,
                        "projective_dimension": pd,
                        "betti_totals": betti.totals(),
                        "maximal_ideal_associated": associated,
                    }),
                ))
            } else {
                let text = if associated {
                    format!("depth R/I^{k} = 0 (m is associated)\n")
                } else {
                    format!("depth R/I^{k} ≥ 1 (m is not associated)\n")
                };
                Ok(Output::ok(
                    text,
                    json!({ "k": k, "depth_zero": associated, "maximal_ideal_associated": associated }),
                ))
            }
        }
        Command::Persist {
            file,
            kmax,
            method,
            audit,
            exact_depth,
            expect_strong,
            lattice_cap,
        } => {
            let ideal = load_ideal(file)?;
            let opts = ScanOptions {
                kmax: *kmax,
                method: (*method).into(),
                audit: *audit,
                exact_depth: *exact_depth,
                lattice_cap: *lattice_cap,
            };
            let report = persistence_report(&ideal, &opts)?;
            let mut text = format!("ideal: {}\n", report.ideal);
            for r in &report.records {
                text.push_str(&format!(
                    "k = {}: {} generators, Ass = {{{}}}, strong {}, Ass(I^k) ⊆ Ass(I^{{k+1}}) {}, depth {:?}\n",
                    r.k,
                    r.generator_count,
                    fmt_list(&r.ass),
                    r.strong_persistence,
                    r.ass_contained_in_next,
                    r.depth,
                ));
            }
            text.push_str(&format!("strong persistence violations at k = {:?}\n", report.strong_violations));
            text.push_str(&format!("persistence violations at k = {:?}\n", report.ass_violations));
            text.push_str(&format!("Ass(I^2) ⊄ Ass(I^k) at k = {:?}\n", report.square_ass_failures));
            if let Some(a) = &report.audit {
                text.push_str(&format!("audit with {}: mismatches at k = {:?}\n", a.method, a.mismatches));
            }
            let ok = report.is_consistent() && !(*expect_strong && !report.strong_violations.is_empty());
            Ok(Output {
                text,
                json: to_json(&report),
                ok,
            })
        }
        Command::Graph { check } => graph_command(check),
        Command::PaperExample {
            kmax,
            method,
            audit,
            exact_depth,
        } => {
            let opts = ScanOptions {
                kmax: *kmax,
                method: (*method).into(),
                audit: *audit,
                exact_depth: *exact_depth,
                ..Default::default()
            };
            let report = counterexample_report(&opts)?;
            let mut text = format!("fixture sha256: {}\nideal: {}\n", report.fixture_sha256, report.ideal);
            for c in &report.clauses {
                text.push_str(&format!("({}) {}: {} ({})\n", c.id, c.statement, verdict(c.holds), c.detail));
            }
            for (k, primes) in &report.ass_by_power {
                text.push_str(&format!("Ass(I^{k}) has {} primes\n", primes.len()));
            }
            if let Some(a) = &report.audit {
                text.push_str(&format!("audit with {}: mismatches at k = {:?}\n", a.method, a.mismatches));
            }
            text.push_str(&format!("note: {}\n", report.note));
            Ok(Output {
                text,
                json: to_json(&report),
                ok: report.passed(),
            })
        }
        Command::CheckDegree2 { trials, nmax, kmax } => {
            let summary = check_degree2_sweep(cli.seed, *trials, *nmax, *kmax)?;
            let mut text = format!(
                "seed {}: {}/{} trials without strong persistence violations (n ≤ {}, k ≤ {})\n",
                summary.seed, summary.passed, summary.trials, summary.n_max, summary.kmax
            );
            for c in &summary.counterexamples {
                text.push_str(&format!("trial {} violates at k = {:?}:\n{}", c.trial, c.violations, c.ideal));
            }
            Ok(Output {
                text,
                json: to_json(&summary),
                ok: summary.all_passed(),
            })
        }
    }
}

fn graph_command(check: &GraphCommand) -> Result<Output, Failure> {
    match check {
        GraphCommand::Cover { file } => Ok(ideal_output(&cover_ideal(&load_graph(file)?)?)),
        GraphCommand::Fhv { file } => {
            let graph = load_graph(file)?;
            let cycles = induced_odd_cycles(&graph)?;
            let components = fhv_components(&graph)?;
            let square = cover_ideal(&graph)?.power(2)?;
            let ok = fhv_square_decomposition(&graph)?.equals(&square)?;
            let text = format!(
                "{} edge components, {} odd cycle components\ndecomposition = J²: {}\n",
                graph.edge_count(),
                cycles.len(),
                verdict(ok)
            );
            let cycles_1: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|v| v + 1).collect()).collect();
            Ok(Output {
                text,
                json: json!({
                    "odd_cycles": cycles_1,
                    "component_count": components.len(),
                    "square_generator_count": square.len(),
                    "equal": ok,
                }),
                ok,
            })
        }
        GraphCommand::P1 { file } => {
            let check = verify_p1(&load_graph(file)?)?;
            let ok = check.closed && check.colon_ok;
            let text = format!(
                "J² integrally closed: {}\n(J³ : J) = J²: {}\n",
                verdict(check.closed),
                verdict(check.colon_ok)
            );
            Ok(Output {
                text,
                json: to_json(&check),
                ok,
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Power { .. } => "power",
        Command::Colon { .. } => "colon",
        Command::Intersect { .. } => "intersect",
        Command::Radical { .. } => "radical",
        Command::Closure { .. } => "closure",
        Command::Dual { .. } => "dual",
        Command::Ass { .. } => "ass",
        Command::Irrdec { .. } => "irrdec",
        Command::Depth { .. } => "depth",
        Command::Persist { .. } => "persist",
        Command::Graph { check } => match check {
            GraphCommand::Cover { .. } => "graph cover",
            GraphCommand::Fhv { .. } => "graph fhv",
            GraphCommand::P1 { .. } => "graph p1",
        },
        Command::PaperExample { .. } => "paper-example",
        Command::CheckDegree2 { .. } => "check-degree2",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(&cli) {
        Ok(out) => {
            if cli.json {
                // serde_json's default map is ordered, so keys come out sorted.
                let doc = json!({
                    "schema": SCHEMA,
                    "command": command_name(&cli.command),
                    "ok": out.ok,
                    "result": out.json,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON value"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Claim(m)) => {
            eprintln!("claim failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("resource limit: {m}");
            ExitCode::from(3)
        }
    }
}
