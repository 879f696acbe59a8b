mod bench;
mod graph_file;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pebblemotion::format::{parse_instance, parse_solution, write_instance, write_solution};
use pebblemotion::gadgets::{
    gen_clique_max_from_domclique, gen_clique_num_from_vc, gen_clique_sum_from_vc, gen_ind_gadget,
    gen_stcut_gadget, gen_stcut_gadget_default, Cnf3, GadgetInstance,
};
use pebblemotion::oracle::LIMIT_ENV;
use pebblemotion::{solve, Graph, Measure, Method, SolveError, SolveReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "pebblemotion", version, about = "Minimum-cost pebble movement on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        #[arg(long)]
        measure: Measure,
        #[arg(long, default_value = "auto")]
        method: Method,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Print a JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Check a solution file against an instance and report its costs.
    Verify {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a reduction instance to stdout.
    Gen {
        #[command(subcommand)]
        gadget: Gadget,
    },
    /// Run a deterministic suite of instances and check every answer.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
#[allow(clippy::enum_variant_names)]
enum Gadget {
    /// Independent-set instance from a DIMACS CNF formula.
    IndGadget {
        #[arg(long, value_name = "FILE")]
        cnf: PathBuf,
    },
    /// s-t cut instance from a DIMACS CNF formula.
    StcutGadget {
        #[arg(long, value_name = "FILE")]
        cnf: PathBuf,
        /// Length of the long paths; must exceed the pebble count. Defaults to the smallest legal value.
        #[arg(long)]
        h: Option<usize>,
    },
    /// Clique-Num instance from a DIMACS edge-format graph.
    CliqueNumVc {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
    /// Clique-Sum instance from a DIMACS edge-format graph.
    CliqueSumVc {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
    /// Clique-Max instance from a connected DIMACS edge-format graph.
    CliqueMaxDc {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Small,
    Trees,
    Gadgets,
}

/// Failure that maps to exit status 2.
#[derive(Debug)]
struct Infeasible(String);

impl std::fmt::Display for Infeasible {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for Infeasible {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn solve_error(e: SolveError) -> anyhow::Error {
    match e {
        e if e.is_infeasible() => Infeasible(e.to_string()).into(),
        SolveError::GuardExceeded { .. } => {
            anyhow::anyhow!("{e}; pick another method or raise the placement limit with {LIMIT_ENV}")
        }
        e => e.into(),
    }
}

fn print_report(report: &SolveReport, as_json: bool) {
    if as_json {
        let out = json!({
            "cost": report.cost,
            "measure": report.measure.name(),
            "method": report.method,
            "guarantee": report.guarantee.to_string(),
            "mu": report.solution.mu,
        });
        println!("{out}");
    } else {
        println!("cost {}", report.cost);
        println!("measure {}", report.measure);
        println!("method {}", report.method);
        println!("guarantee {}", report.guarantee);
        print!("{}", write_solution(&report.solution));
    }
}

fn run_solve(measure: Measure, method: Method, input: &Path, as_json: bool) -> Result<()> {
    let inst = parse_instance(&read(input)?).with_context(|| format!("parsing {}", input.display()))?;
    let report = solve(&inst, measure, method).map_err(solve_error)?;
    print_report(&report, as_json);
    Ok(())
}

fn run_verify(input: &Path, solution: &Path, as_json: bool) -> Result<()> {
    let inst = parse_instance(&read(input)?).with_context(|| format!("parsing {}", input.display()))?;
    let sol = parse_solution(&read(solution)?, &inst).with_context(|| format!("parsing {}", solution.display()))?;
    let valid = inst.validate(&sol);
    let costs: Vec<(Measure, u64)> = Measure::ALL.iter().map(|&m| (m, inst.solution_cost(&sol, m))).collect();
    if as_json {
        let mut out = json!({ "valid": valid, "goal": inst.goal().name() });
        for (m, c) in &costs {
            out[m.name()] = json!(c);
        }
        println!("{out}");
    } else {
        println!("{}", if valid { "valid" } else { "invalid" });
        for (m, c) in &costs {
            println!("{m} {c}");
        }
    }
    if valid {
        Ok(())
    } else {
        anyhow::bail!("end positions do not satisfy the {} goal", inst.goal().name())
    }
}

fn read_cnf(path: &Path) -> Result<Cnf3> {
    Cnf3::parse_dimacs(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn print_gadget(g: &GadgetInstance) {
    for (m, c) in &g.thresholds {
        println!("# threshold {m} {c}");
    }
    let labels: Vec<String> = g.labels.iter().map(ToString::to_string).collect();
    println!("# labels {}", labels.join(" "));
    print!("{}", write_instance(&g.instance));
}

fn run_gen(gadget: &Gadget) -> Result<()> {
    let g = match gadget {
        Gadget::IndGadget { cnf } => gen_ind_gadget(&read_cnf(cnf)?)?,
        Gadget::StcutGadget { cnf, h: None } => gen_stcut_gadget_default(&read_cnf(cnf)?)?,
        Gadget::StcutGadget { cnf, h: Some(h) } => gen_stcut_gadget(&read_cnf(cnf)?, *h)?,
        Gadget::CliqueNumVc { graph } => gen_clique_num_from_vc(&graph_file::read(graph)?)?,
        Gadget::CliqueSumVc { graph } => gen_clique_sum_from_vc(&graph_file::read(graph)?)?,
        Gadget::CliqueMaxDc { graph } => {
            let h = Graph::from_simple(graph_file::read(graph)?).context("dominating-clique input")?;
            gen_clique_max_from_domclique(&h)?
        }
    };
    print_gadget(&g);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { measure, method, input, json } => run_solve(*measure, *method, input, *json),
        Command::Verify { input, solution, json } => run_verify(input, solution, *json),
        Command::Gen { gadget } => run_gen(gadget),
        Command::Bench { suite, seed } => bench::run(*suite, *seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Infeasible>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
