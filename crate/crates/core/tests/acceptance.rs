//! Acceptance gate: every criterion at its stated range and time limit.
//! Prints one line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use expind::characterize::classify_extremal;
use expind::families::{generate, FamilySpec};
use expind::graph::{free_trees_up_to, path, star, Graph, VertexSet};
use expind::solver::{alpha, alpha_e};
use expind::verify::{verify, RunConfig, VerificationReport};
use expind::weights::{weight, Dyadic};

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn suite(id: &str, max_n: usize, expect_instances: Option<usize>) -> Result<VerificationReport, String> {
    let config = RunConfig {
        max_n: Some(max_n),
        ..RunConfig::default()
    };
    let report = verify(id, &config).map_err(|e| e.to_string())?;
    if !report.passed {
        let first = &report.failures[0];
        return Err(format!(
            "{id}: {} failures; first on {}: expected {}, got {}",
            report.failures.len(),
            first.graph,
            first.expected,
            first.got
        ));
    }
    if let Some(want) = expect_instances {
        if report.instances_checked != want {
            return Err(format!("{id}: {} instances, expected {want}", report.instances_checked));
        }
    }
    Ok(report)
}

fn summary(r: &VerificationReport) -> String {
    format!("{} instances ({})", r.instances_checked, r.parameter_range)
}

fn paths() -> Result<String, String> {
    suite("thm3i", 25, Some(25)).map(|r| summary(&r))
}

fn cycles() -> Result<String, String> {
    suite("thm3ii", 20, Some(16)).map(|r| summary(&r))
}

fn full_binary() -> Result<String, String> {
    // 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 shapes for n = 1, 3, ..., 15
    suite("thm3iii", 15, Some(48)).map(|r| summary(&r))
}

fn diameter_bound() -> Result<String, String> {
    let r = suite("thm2", 12, None)?;
    let mut tight = Vec::new();
    for t in free_trees_up_to(12).unwrap().iter().flatten() {
        if classify_extremal(t).map_err(|e| e.to_string())?.meets_lower {
            tight.push((t.n(), t.max_degree()));
        }
    }
    if tight != [(5, 2), (10, 2)] {
        return Err(format!("tight trees (order, max degree): {tight:?}"));
    }
    Ok(format!("{}; tight only on P5, P10", summary(&r)))
}

fn order_bound() -> Result<String, String> {
    suite("thm2b", 12, None).map(|r| summary(&r))
}

fn subcubic() -> Result<String, String> {
    suite("thm4", 14, None).map(|r| summary(&r))
}

fn hereditary() -> Result<String, String> {
    // 1024 graphs on five vertices, 64 + 8 + 2 + 1 smaller, three witnesses
    suite("thm5", 5, Some(1024 + 64 + 8 + 2 + 1 + 3)).map(|r| summary(&r))
}

fn tree_family() -> Result<String, String> {
    let a = suite("thm6", 14, Some(5447))?;
    let b = suite("lem2", 6, None)?;
    Ok(format!("{}; {}", summary(&a), summary(&b)))
}

fn heredity() -> Result<String, String> {
    suite("thm1iii", 12, Some(200)).map(|r| summary(&r))
}

fn local_weight() -> Result<String, String> {
    suite("lem1", 7, None).map(|r| summary(&r))
}

fn oracles() -> Result<String, String> {
    suite("oracle", 10, None).map(|r| summary(&r))
}

fn micro_values() -> Result<String, String> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    let g = path(5);
    let s = VertexSet::from_sorted(vec![0, 2, 4]).unwrap();
    for u in s.iter() {
        check(weight(&g, &s, u).weight == Dyadic::from_integer(2), "w = 2 for members")?;
    }
    for leaves in 2..=8 {
        let k: Graph = star(leaves);
        let n = leaves + 1;
        let all = VertexSet::full(n);
        check(weight(&k, &all.without(1), 1).weight == Dyadic::one(), "star, S = V: leaf weight 1")?;
        let rim = all.without(0);
        check(
            weight(&k, &rim.without(1), 1).weight == Dyadic::new((n - 2) as u64, 1),
            "star, S = leaves: leaf weight (n-2)/2",
        )?;
    }
    let bull = generate(&FamilySpec::Bull).unwrap().0;
    check(alpha_e(&path(5)).unwrap().value == 2, "alpha_e(P5) = 2")?;
    check(alpha_e(&bull).unwrap().value == 2, "alpha_e(bull) = 2")?;
    check(alpha(&bull).unwrap().value == 3, "alpha(bull) = 3")?;
    Ok("member weight, star weights, alpha_e(P5), alpha_e(bull)".into())
}

const CRITERIA: &[Criterion] = &[
    Criterion { name: "1 paths", limit: Duration::from_secs(10), run: paths },
    Criterion { name: "2 cycles", limit: Duration::from_secs(30), run: cycles },
    Criterion { name: "3 full binary trees", limit: Duration::from_secs(60), run: full_binary },
    Criterion { name: "4 diameter lower bound", limit: Duration::from_secs(300), run: diameter_bound },
    Criterion { name: "5 order upper bound", limit: Duration::from_secs(600), run: order_bound },
    Criterion { name: "6 subcubic trees", limit: Duration::from_secs(300), run: subcubic },
    Criterion { name: "7 hereditary equality", limit: Duration::from_secs(120), run: hereditary },
    Criterion { name: "8 tree equality and family witnesses", limit: Duration::from_secs(600), run: tree_family },
    Criterion { name: "9 heredity", limit: Duration::from_secs(120), run: heredity },
    Criterion { name: "10 local weight bound", limit: Duration::from_secs(300), run: local_weight },
    Criterion { name: "11 oracle equivalence", limit: Duration::from_secs(300), run: oracles },
    Criterion { name: "12 micro-values", limit: Duration::from_secs(1), run: micro_values },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed <= c.limit => "PASS",
            _ => "FAIL",
        };
        let detail = match result {
            Ok(d) if elapsed <= c.limit => d,
            Ok(d) => format!("over time limit; {d}"),
            Err(e) => e,
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "acceptance {verdict} [{}] {:.2}s (limit {}s): {detail}",
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
