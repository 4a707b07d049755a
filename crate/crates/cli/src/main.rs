use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expind::characterize::{classify_extremal, find_forbidden_induced, CharacterizeError};
use expind::families::{enumerate_full_binary, generate, t_membership, FamilyError, FamilySpec};
use expind::graph::{
    ahu_canonical, encode_graph6, enumerate_free_trees, from_edge_list, parse_graph6, Graph, GraphError,
    VertexSet,
};
use expind::solver::{rule_by_name, SolveError, Solver, DEFAULT_NODE_BUDGET};
use expind::verify::{checks, verify, RunConfig, VerifyError};
use expind::weights::{find_domination_violation, find_independence_violation, weight};
use serde_json::json;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "expind", version, about = "Exponential independence number of small graphs")]
struct Cli {
    /// Read inputs as graph6 instead of edge lists.
    #[arg(long, global = true)]
    graph6: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Alpha,
    AlphaE,
    AllMax,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    /// exponential independent set
    Eis,
    /// exponential dominating set
    Eds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Enumerable {
    Trees,
    Fbt,
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Compute alpha, alpha_e, or every maximum exponential independent set.
    Compute {
        invariant: Invariant,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Check whether a set is exponential independent or dominating.
    Check {
        property: Property,
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex ids, e.g. 1,4,7.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Exact weight of one vertex with respect to a set.
    Weight {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        set: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Print a family member as an edge list (or graph6).
    Gen {
        /// path, cycle, star, fbt, bull, t1..t5, p1, p8
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Rooted shape code for fbt, e.g. "(()(()()))".
        #[arg(long)]
        shape: Option<String>,
        /// Print the role labeling as JSON instead of the graph.
        #[arg(long)]
        descriptor: bool,
    },
    /// Report whether a tree belongs to the family with alpha_e = alpha.
    FamilyCheck(Input),
    /// Look for an induced K1,3, P5 or bull.
    FreeCheck(Input),
    /// Compare alpha_e against the diameter and order bounds.
    Classify(Input),
    /// Run a verification suite; `all` runs every registered suite.
    Verify {
        theorem_id: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Report file; standard output by default.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate free trees or full binary trees of one order as JSON lines.
    Enumerate {
        what: Enumerable,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Budget(SolveError),
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => CliError::Budget(e),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CharacterizeError> for CliError {
    fn from(e: CharacterizeError) -> Self {
        match e {
            CharacterizeError::Solve(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn read_graph(input: &Input, graph6: bool) -> Result<Graph, CliError> {
    let mut text = String::new();
    if input.input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&input.input)
            .map_err(|e| CliError::Input(format!("{}: {e}", input.input)))?;
    }
    if graph6 {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| CliError::Input("no graph6 line in input".into()))?;
        Ok(parse_graph6(line)?)
    } else {
        Ok(from_edge_list(&text)?)
    }
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet, CliError> {
    let members = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Input(format!("bad vertex id `{s}`"))))
        .collect::<Result<Vec<usize>, _>>()?;
    let set = VertexSet::from_unsorted(members);
    set.check_range(n)?;
    Ok(set)
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let g6 = cli.graph6;
    match cli.command {
        Command::Compute {
            invariant,
            input,
            budget,
        } => {
            let g = read_graph(&input, g6)?;
            let solver = Solver::with_budget(budget);
            match invariant {
                Invariant::Alpha => print_json(&solver.solve(rule_by_name("alpha").unwrap(), &g)?),
                Invariant::AlphaE => print_json(&solver.solve(rule_by_name("alpha_e").unwrap(), &g)?),
                Invariant::AllMax => print_json(&solver.all_max(rule_by_name("alpha_e").unwrap(), &g)?),
            }
            Ok(true)
        }
        Command::Check { property, input, set } => {
            let g = read_graph(&input, g6)?;
            let s = parse_set(&set, g.n())?;
            let (name, violation) = match property {
                Property::Eis => ("eis", find_independence_violation(&g, &s)),
                Property::Eds => ("eds", find_domination_violation(&g, &s)),
            };
            let holds = violation.is_none();
            print_json(&json!({ "property": name, "set": s, "holds": holds, "violation": violation }));
            Ok(holds)
        }
        Command::Weight { input, set, vertex } => {
            let g = read_graph(&input, g6)?;
            let s = parse_set(&set, g.n())?;
            if vertex >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex, n: g.n() }.into());
            }
            print_json(&weight(&g, &s, vertex));
            Ok(true)
        }
        Command::Gen {
            family,
            k,
            n,
            shape,
            descriptor,
        } => {
            let spec = FamilySpec::from_name(&family, k, n, shape.as_deref())?;
            let (g, d) = generate(&spec)?;
            if descriptor {
                print_json(&d);
            } else if g6 {
                println!("{}", encode_graph6(&g));
            } else {
                print!("# {d}\n{}", g.to_edge_list());
            }
            Ok(true)
        }
        Command::FamilyCheck(input) => {
            let g = read_graph(&input, g6)?;
            let membership = t_membership(&g)?;
            let member = membership.is_some();
            print_json(&json!({
                "member": member,
                "name": membership.as_ref().map(|d| d.to_string()),
                "descriptor": membership,
            }));
            Ok(member)
        }
        Command::FreeCheck(input) => {
            let g = read_graph(&input, g6)?;
            let found = find_forbidden_induced(&g);
            let free = found.is_none();
            print_json(&json!({ "free": free, "induced": found }));
            Ok(free)
        }
        Command::Classify(input) => {
            let g = read_graph(&input, g6)?;
            print_json(&classify_extremal(&g)?);
            Ok(true)
        }
        Command::Verify {
            theorem_id,
            max_n,
            seed,
            threads,
            budget,
            output,
        } => {
            let mut config = RunConfig {
                max_n,
                node_budget: budget,
                seed,
                output,
                ..RunConfig::default()
            };
            if let Some(t) = threads {
                config.threads = t;
            }
            let ids: Vec<&str> = if theorem_id == "all" {
                checks().iter().map(|c| c.id()).collect()
            } else {
                vec![theorem_id.as_str()]
            };
            let mut out: Box<dyn Write> = match &config.output {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(io::stdout().lock()),
            };
            let mut passed = true;
            for id in ids {
                let report = verify(id, &config)?;
                report.write_json_lines(&mut out)?;
                passed &= report.passed;
            }
            out.flush()?;
            Ok(passed)
        }
        Command::Enumerate { what, n } => {
            let graphs: Vec<Graph> = match what {
                Enumerable::Trees => enumerate_free_trees(n)?.collect(),
                Enumerable::Fbt => enumerate_full_binary(n)?.collect(),
            };
            let mut out = io::stdout().lock();
            for g in &graphs {
                let line = json!({
                    "n": g.n(),
                    "graph6": encode_graph6(g),
                    "code": ahu_canonical(g)?,
                    "edges": g.edges().collect::<Vec<_>>(),
                });
                writeln!(out, "{line}")?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
