//! Reproducible verification runs, one registered check per statement.
//!
//! A run enumerates or samples instances, evaluates each independently (in
//! parallel), and collects failures in instance order. Reports are written
//! as JSON lines: a header, one object per failure, and a summary.

mod checks;
pub mod random;

use std::io::{self, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::graph::{encode_graph6, Graph};
use crate::solver::{AllMaxResult, ExponentialIndependent, Independent, SolveResult, Solver, DEFAULT_NODE_BUDGET};

pub use checks::{check_by_id, checks};

pub const THREADS_ENV: &str = "EXPIND_THREADS";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check id `{0}`")]
    UnknownTheorem(String),
    #[error("{id} supports max_n in {min}..={max}, got {max_n}")]
    MaxNOutOfRange {
        id: &'static str,
        max_n: usize,
        min: usize,
        max: usize,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Upper end of the instance range; `None` uses the check's default.
    pub max_n: Option<usize>,
    pub node_budget: u64,
    pub threads: usize,
    pub seed: u64,
    /// Report destination; `None` is standard output.
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: None,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: 0,
            output: None,
        }
    }
}

impl RunConfig {
    /// Thread count after applying the `EXPIND_THREADS` override.
    pub fn effective_threads(&self) -> Result<usize, VerifyError> {
        let threads = match std::env::var(THREADS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| VerifyError::Config(format!("{THREADS_ENV}={v} is not a count")))?,
            Err(_) => self.threads,
        };
        if threads == 0 {
            return Err(VerifyError::Config("threads must be at least 1".into()));
        }
        Ok(threads)
    }
}

/// One failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// graph6 encoding of the instance.
    pub graph: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    pub fn new(g: &Graph, expected: impl Into<String>, got: impl Into<String>) -> Failure {
        Failure {
            graph: encode_graph6(g),
            expected: expected.into(),
            got: got.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem_id: &'static str,
    pub parameter_range: String,
    pub max_n: usize,
    pub seed: u64,
    pub node_budget: u64,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
    pub passed: bool,
}

impl VerificationReport {
    pub fn write_json_lines(&self, mut w: impl Write) -> io::Result<()> {
        let header = json!({
            "type": "header",
            "theorem_id": self.theorem_id,
            "parameter_range": self.parameter_range,
            "max_n": self.max_n,
            "seed": self.seed,
            "node_budget": self.node_budget,
        });
        writeln!(w, "{header}")?;
        for f in &self.failures {
            let line = json!({
                "type": "failure",
                "graph": f.graph,
                "expected": f.expected,
                "got": f.got,
            });
            writeln!(w, "{line}")?;
        }
        let summary = json!({
            "type": "summary",
            "theorem_id": self.theorem_id,
            "instances_checked": self.instances_checked,
            "failures": self.failures.len(),
            "passed": self.passed,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        });
        writeln!(w, "{summary}")
    }

    pub fn to_json_lines(&self) -> String {
        let mut buf = Vec::new();
        self.write_json_lines(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }
}

/// Counts produced by a check.
#[derive(Debug, Default)]
pub struct Outcome {
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl Outcome {
    fn absorb(&mut self, other: Outcome) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

/// Per-run state handed to checks.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub seed: u64,
    pub solver: Solver,
}

impl Ctx {
    fn budget_failure(g: &Graph, e: impl ToString) -> Failure {
        Failure::new(g, "solve within the node budget", e.to_string())
    }

    pub fn alpha_e(&self, g: &Graph) -> Result<SolveResult, Failure> {
        self.solver
            .solve(&ExponentialIndependent, g)
            .map_err(|e| Ctx::budget_failure(g, e))
    }

    pub fn alpha(&self, g: &Graph) -> Result<usize, Failure> {
        self.solver
            .solve(&Independent, g)
            .map(|r| r.value)
            .map_err(|e| Ctx::budget_failure(g, e))
    }

    pub fn all_max(&self, g: &Graph) -> Result<AllMaxResult, Failure> {
        self.solver
            .all_max(&ExponentialIndependent, g)
            .map_err(|e| Ctx::budget_failure(g, e))
    }
}

/// Runs `f` on every item in parallel; failures keep item order.
pub(crate) fn run_all<T, F>(items: &[T], f: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Result<(), Failure> + Sync,
{
    let failures = items
        .par_iter()
        .map(|item| f(item).err())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Outcome {
        instances: items.len(),
        failures,
    }
}

/// A verifiable statement with its instance generator and predicate.
pub trait TheoremCheck: Send + Sync {
    fn id(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn default_max_n(&self) -> usize;
    /// Smallest and largest accepted `max_n`.
    fn max_n_range(&self) -> (usize, usize);
    fn parameter_range(&self, max_n: usize, seed: u64) -> String;
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome;
}

/// Runs the check registered as `theorem_id`.
pub fn verify(theorem_id: &str, config: &RunConfig) -> Result<VerificationReport, VerifyError> {
    let check = check_by_id(theorem_id).ok_or_else(|| VerifyError::UnknownTheorem(theorem_id.to_string()))?;
    let max_n = config.max_n.unwrap_or(check.default_max_n());
    let (min, max) = check.max_n_range();
    if !(min..=max).contains(&max_n) {
        return Err(VerifyError::MaxNOutOfRange {
            id: check.id(),
            max_n,
            min,
            max,
        });
    }
    if config.node_budget == 0 {
        return Err(VerifyError::Config("node budget must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.effective_threads()?)
        .build()?;
    let ctx = Ctx {
        seed: config.seed,
        solver: Solver::with_budget(config.node_budget),
    };
    let start = Instant::now();
    let outcome = pool.install(|| check.run(&ctx, max_n));
    let elapsed = start.elapsed();
    assert!(outcome.instances > 0, "{} produced no instances", check.id());
    log::info!(
        "{}: {} instances, {} failures in {:?}",
        check.id(),
        outcome.instances,
        outcome.failures.len(),
        elapsed
    );
    Ok(VerificationReport {
        theorem_id: check.id(),
        parameter_range: check.parameter_range(max_n, config.seed),
        max_n,
        seed: config.seed,
        node_budget: config.node_budget,
        instances_checked: outcome.instances,
        passed: outcome.failures.is_empty(),
        failures: outcome.failures,
        elapsed,
    })
}
