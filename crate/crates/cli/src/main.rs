//! `coxkit`: enumerate nested sets, test Cartan diagrammaticity and run verification suites.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxkit::diagram::{enumerate_chains, enumerate_nested_sets, Diagram, VSet};
use coxkit::fixtures::{self, Fixture};
use coxkit::realization::{cartan_diagrammatic_test, diagram_of, Verdict};
use coxkit::suites::{configure_threads_from_env, run_suite, Suite, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "coxkit", version, about = "Exact checks for braided Coxeter structures")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List nested sets or chains on (B, B') of a diagram or matrix fixture.
    Enumerate {
        /// Fixture file or bundled fixture name.
        fixture: String,
        /// Upper subdiagram as 1-based vertices, e.g. `1,2,3`; defaults to every vertex.
        #[arg(long = "b", value_name = "VERTICES")]
        b: Option<String>,
        /// Lower subdiagram as 1-based vertices; defaults to the empty set.
        #[arg(long = "b-prime", value_name = "VERTICES")]
        b_prime: Option<String>,
        /// Only maximal nested sets or maximal chains.
        #[arg(long)]
        maximal: bool,
        /// Enumerate chains instead of nested sets.
        #[arg(long)]
        chains: bool,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Run the Cartan-diagrammatic test on a matrix fixture.
    Diagrammatic {
        /// Fixture file or bundled fixture name.
        fixture: String,
    },
    /// Run a named verification suite; exits 1 when a check fails.
    Verify {
        /// One of classical, quantum-sl2, quantum-a2, quantum-b2, hopf, associator, all.
        suite: String,
        /// Use the coefficient 1/12 in the associator suite.
        #[arg(long)]
        break_coefficient: bool,
        /// Seed for randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Print a bundled fixture as JSON, or list the bundled names.
    Fixture {
        /// Bundled fixture name; omit to list all names.
        name: Option<String>,
    },
}

fn load_fixture(arg: &str) -> Result<Fixture> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        Ok(Fixture::from_json(&text).with_context(|| format!("loading fixture {arg}"))?)
    } else {
        Ok(fixtures::named(arg).with_context(|| format!("`{arg}` is neither a file nor a bundled fixture"))?)
    }
}

fn parse_vertices(s: &str, n: usize) -> Result<VSet> {
    let mut set = VSet::EMPTY;
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().with_context(|| format!("bad vertex `{part}`"))?;
        if v == 0 || v > n {
            bail!("vertex {v} is outside 1..={n}");
        }
        set = set.union(VSet::singleton(v - 1));
    }
    Ok(set)
}

fn one_based(s: VSet) -> Vec<usize> {
    s.vertices().map(|v| v + 1).collect()
}

fn diagram_of_fixture(f: &Fixture) -> Result<Diagram> {
    match f.kind() {
        "diagram" => Ok(f.diagram()?),
        "matrix" => Ok(diagram_of(&f.matrix()?)?),
        "witness" => Ok(f.witness()?.labels.diagram),
        k => bail!("expected a diagram, matrix or witness fixture, got {k}"),
    }
}

struct EnumerateArgs {
    fixture: String,
    b: Option<String>,
    b_prime: Option<String>,
    maximal: bool,
    chains: bool,
    count_only: bool,
}

fn enumerate(out: &mut String, args: EnumerateArgs, format: Format) -> Result<()> {
    let EnumerateArgs { fixture, b, b_prime, maximal, chains, count_only } = args;
    let d = diagram_of_fixture(&load_fixture(&fixture)?)?;
    let n = d.vertex_count();
    let b = b.map(|s| parse_vertices(&s, n)).transpose()?.unwrap_or_else(|| d.all());
    let lower = b_prime.map(|s| parse_vertices(&s, n)).transpose()?.unwrap_or(VSet::EMPTY);
    if !lower.is_subset(b) {
        bail!("B' = {lower} is not contained in B = {b}");
    }
    let items: Vec<(String, Vec<Vec<usize>>)> = if chains {
        enumerate_chains(b, lower, maximal)?.iter().map(|c| (c.to_string(), c.sets.iter().map(|s| one_based(*s)).collect())).collect()
    } else {
        enumerate_nested_sets(&d, b, lower, maximal)?.iter().map(|h| (h.to_string(), h.members.iter().map(|s| one_based(*s)).collect())).collect()
    };
    match format {
        Format::Text if count_only => writeln!(out, "{}", items.len())?,
        Format::Text => {
            for (s, _) in &items {
                writeln!(out, "{s}")?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "kind": if chains { "chains" } else { "nested_sets" },
                "b": one_based(b),
                "b_prime": one_based(lower),
                "maximal": maximal,
                "count": items.len(),
            });
            if !count_only {
                v["items"] = Value::from(items.into_iter().map(|(_, x)| x).collect::<Vec<_>>());
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
    }
    Ok(())
}

fn diagrammatic(out: &mut String, fixture: &str, format: Format) -> Result<()> {
    let f = load_fixture(fixture)?;
    if f.kind() != "matrix" {
        bail!("expected a matrix fixture, got {}", f.kind());
    }
    let m = f.matrix()?;
    if !m.is_square() {
        bail!("matrix is {}×{}, not square", m.rows(), m.cols());
    }
    let r = cartan_diagrammatic_test(&m)?;
    match format {
        Format::Text => {
            writeln!(out, "verdict: {}", r.verdict.name())?;
            if let Verdict::Obstructed { witness } = &r.verdict {
                writeln!(out, "witness: {witness}")?;
            }
            for (c, v) in &r.components {
                writeln!(out, "component {c}: {}", v.name())?;
            }
        }
        Format::Json => {
            let witness = match &r.verdict {
                Verdict::Obstructed { witness } => Some(json!({
                    "subset": one_based(witness.subset),
                    "required_dim": witness.required_dim,
                    "bound_dim": witness.bound_dim,
                    "text": witness.to_string(),
                })),
                _ => None,
            };
            let comps: Vec<Value> =
                r.components.iter().map(|(c, v)| json!({ "vertices": one_based(*c), "verdict": v.name() })).collect();
            let v = json!({ "verdict": r.verdict.name(), "witness": witness, "components": comps });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
    }
    Ok(())
}

fn verify(out: &mut String, suite: &str, opts: SuiteOptions, timing: bool, format: Format) -> Result<bool> {
    let suite: Suite = suite.parse()?;
    configure_threads_from_env();
    let start = Instant::now();
    let mut report = run_suite(suite, &opts)?;
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    match format {
        Format::Text => writeln!(out, "{report}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(report.all_passed())
}

fn fixture(out: &mut String, name: Option<&str>) -> Result<()> {
    match name {
        Some(n) => writeln!(out, "{}", fixtures::named(n)?.to_json())?,
        None => {
            for n in fixtures::NAMED {
                writeln!(out, "{n}")?;
            }
        }
    }
    Ok(())
}

fn run(out: &mut String, cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { fixture, b, b_prime, maximal, chains, count_only } => {
            enumerate(out, EnumerateArgs { fixture, b, b_prime, maximal, chains, count_only }, cli.format)?;
            Ok(true)
        }
        Command::Diagrammatic { fixture } => diagrammatic(out, &fixture, cli.format).map(|_| true),
        Command::Verify { suite, break_coefficient, seed, timing } => {
            verify(out, &suite, SuiteOptions { break_coefficient, seed }, timing, cli.format)
        }
        Command::Fixture { name } => fixture(out, name.as_deref()).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&mut out, cli);
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
