//! Exact maximum-set search for the independence number and the exponential
//! independence number.
//!
//! Both invariants share one backtracking skeleton over vertices in
//! ascending id order ("include" before "exclude"). A branch is cut when
//!
//! * the new vertex is adjacent to the current set,
//! * the [`SetRule`] rejects the extended set (sound because both families
//!   are closed under taking subsets), or
//! * the current size plus a greedy clique-partition bound on the remaining
//!   candidates cannot beat the incumbent.
//!
//! Because include-first DFS visits sets in lexicographic order, the first
//! maximum set found is the lexicographically least one.

mod rules;

use std::time::{Duration, Instant};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::weights::WeightScratch;

pub use rules::{is_independent, rule_by_name, rules, ExponentialIndependent, Independent, SetRule};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("node budget of {budget} exceeded; best set found so far has size {lower_bound}")]
    BudgetExceeded { budget: u64, lower_bound: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub invariant: &'static str,
    pub value: usize,
    /// Lexicographically least maximum set.
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl Serialize for SolveResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SolveResult", 5)?;
        st.serialize_field("invariant", self.invariant)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("nodes", &self.nodes_explored)?;
        st.serialize_field("ms", &(self.elapsed.as_millis() as u64))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllMaxResult {
    pub invariant: &'static str,
    pub value: usize,
    /// Every maximum set, lexicographically sorted.
    pub witnesses: Vec<VertexSet>,
    pub nodes: u64,
}

/// Search configuration. `pruning: false` disables every cut and checks each
/// full assignment with [`SetRule::certify`]; it exists to test the cuts.
#[derive(Clone, Copy, Debug)]
pub struct Solver {
    pub node_budget: u64,
    pub pruning: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            node_budget: DEFAULT_NODE_BUDGET,
            pruning: true,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Best,
    AllMax,
}

struct Search<'a> {
    g: &'a Graph,
    rule: &'a dyn SetRule,
    mode: Mode,
    pruning: bool,
    budget: u64,
    nodes: u64,
    scratch: WeightScratch,
    in_set: Vec<bool>,
    /// number of current members adjacent to each vertex
    blocked: Vec<u32>,
    current: Vec<Vertex>,
    best: usize,
    best_sets: Vec<VertexSet>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, rule: &'a dyn SetRule, mode: Mode, solver: &Solver) -> Self {
        Search {
            g,
            rule,
            mode,
            pruning: solver.pruning,
            budget: solver.node_budget,
            nodes: 0,
            scratch: WeightScratch::new(g.n()),
            in_set: vec![false; g.n()],
            blocked: vec![0; g.n()],
            current: Vec::with_capacity(g.n()),
            best: 0,
            best_sets: vec![VertexSet::new()],
        }
    }

    /// Greedy partition of the remaining candidates into cliques; any
    /// independent set meets each clique at most once.
    fn clique_bound(&self, from: Vertex) -> usize {
        let mut cliques: Vec<Vec<Vertex>> = Vec::new();
        for v in from..self.g.n() {
            if self.blocked[v] > 0 {
                continue;
            }
            match cliques
                .iter_mut()
                .find(|c| c.iter().all(|&w| self.g.has_edge(v, w)))
            {
                Some(c) => c.push(v),
                None => cliques.push(vec![v]),
            }
        }
        cliques.len()
    }

    fn record(&mut self) {
        let size = self.current.len();
        if size < self.best {
            return;
        }
        if !self.pruning {
            let set = VertexSet::from_sorted(self.current.clone()).unwrap();
            if !self.rule.certify(self.g, &set) {
                return;
            }
        }
        let set = VertexSet::from_sorted(self.current.clone()).unwrap();
        if size > self.best {
            self.best = size;
            self.best_sets.clear();
            self.best_sets.push(set);
        } else if self.mode == Mode::AllMax {
            self.best_sets.push(set);
        } else if set < self.best_sets[0] {
            self.best_sets[0] = set;
        }
    }

    fn push(&mut self, v: Vertex) {
        self.current.push(v);
        self.in_set[v] = true;
        for &w in self.g.neighbors(v) {
            self.blocked[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.current.pop().unwrap();
        self.in_set[v] = false;
        for &w in self.g.neighbors(v) {
            self.blocked[w] -= 1;
        }
    }

    fn run(&mut self, i: Vertex) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded {
                budget: self.budget,
                lower_bound: self.best,
            });
        }
        if i == self.g.n() {
            self.record();
            return Ok(());
        }
        if self.pruning {
            let bound = self.current.len() + self.clique_bound(i);
            let hopeless = match self.mode {
                Mode::Best => bound <= self.best,
                Mode::AllMax => bound < self.best,
            };
            if hopeless {
                return Ok(());
            }
        }

        if !self.pruning || self.blocked[i] == 0 {
            self.push(i);
            let ok = !self.pruning
                || self
                    .rule
                    .admits(self.g, &self.current, &self.in_set, &mut self.scratch);
            let result = if ok { self.run(i + 1) } else { Ok(()) };
            self.pop();
            result?;
        }
        self.run(i + 1)
    }
}

impl Solver {
    pub fn with_budget(node_budget: u64) -> Self {
        Solver {
            node_budget,
            ..Solver::default()
        }
    }

    /// Maximum size and lexicographically least maximum set of `rule`.
    pub fn solve(&self, rule: &dyn SetRule, g: &Graph) -> Result<SolveResult, SolveError> {
        if g.n() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        let start = Instant::now();
        let mut search = Search::new(g, rule, Mode::Best, self);
        search.run(0)?;
        let witness = search.best_sets.swap_remove(0);
        debug_assert!(rule.certify(g, &witness), "solver witness {witness} fails certification");
        Ok(SolveResult {
            invariant: rule.name(),
            value: search.best,
            witness,
            nodes_explored: search.nodes,
            elapsed: start.elapsed(),
        })
    }

    /// Every maximum set of `rule`.
    pub fn all_max(&self, rule: &dyn SetRule, g: &Graph) -> Result<AllMaxResult, SolveError> {
        if g.n() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        let mut search = Search::new(g, rule, Mode::AllMax, self);
        search.run(0)?;
        let mut witnesses = search.best_sets;
        witnesses.sort();
        witnesses.dedup();
        debug_assert!(witnesses.iter().all(|w| rule.certify(g, w)));
        Ok(AllMaxResult {
            invariant: rule.name(),
            value: search.best,
            witnesses,
            nodes: search.nodes,
        })
    }
}

/// Exponential independence number with the default budget.
pub fn alpha_e(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().solve(&ExponentialIndependent, g)
}

/// Every maximum exponential independent set with the default budget.
pub fn alpha_e_all_max(g: &Graph) -> Result<AllMaxResult, SolveError> {
    Solver::default().all_max(&ExponentialIndependent, g)
}

/// Independence number with the default budget.
pub fn alpha(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().solve(&Independent, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star, Graph};

    fn bull() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap()
    }

    fn complete_binary_7() -> Graph {
        Graph::new(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_unsorted(v.to_vec())
    }

    #[test]
    fn alpha_e_examples() {
        assert_eq!(alpha_e(&path(5)).unwrap().value, 2);
        assert_eq!(alpha_e(&bull()).unwrap().value, 2);
        let t = alpha_e(&complete_binary_7()).unwrap();
        assert_eq!(t.value, 4);
        assert_eq!(t.witness, set(&[3, 4, 5, 6]));
        assert_eq!(alpha_e(&star(5)).unwrap().value, 2);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&path(5)).unwrap().value, 3);
        assert_eq!(alpha(&path(5)).unwrap().witness, set(&[0, 2, 4]));
        assert_eq!(alpha(&bull()).unwrap().value, 3);
        assert_eq!(alpha(&star(5)).unwrap().value, 5);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // P5 maximum EIS: {0,2}, {0,3}, {0,4}, {1,3}, {1,4}, {2,4}, ...
        assert_eq!(alpha_e(&path(5)).unwrap().witness, set(&[0, 2]));
        let all = alpha_e_all_max(&path(5)).unwrap();
        assert_eq!(all.witnesses[0], set(&[0, 2]));
        assert!(all.witnesses.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn all_max_on_small_paths() {
        // P6 as y1 x1 a b c d
        let all = alpha_e_all_max(&path(6)).unwrap();
        assert_eq!(all.value, 3);
        assert_eq!(all.witnesses, vec![set(&[0, 2, 5]), set(&[0, 3, 5])]);
        // P8 as d c b a a' b' c' d'
        let all = alpha_e_all_max(&path(8)).unwrap();
        assert_eq!(all.witnesses, vec![set(&[0, 2, 5, 7])]);
        let all = alpha_e_all_max(&complete_binary_7()).unwrap();
        assert_eq!(all.witnesses, vec![set(&[3, 4, 5, 6])]);
    }

    #[test]
    fn budget_exceeded_reports_lower_bound() {
        let err = Solver::with_budget(5).solve(&ExponentialIndependent, &path(12)).unwrap_err();
        match err {
            SolveError::BudgetExceeded { budget, .. } => assert_eq!(budget, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(alpha_e(&Graph::empty(0)), Err(SolveError::EmptyGraph));
    }

    #[test]
    fn registry_lookup() {
        assert_eq!(rule_by_name("alpha-e").unwrap().name(), "alpha_e");
        assert_eq!(rule_by_name("alpha").unwrap().name(), "alpha");
        assert!(rule_by_name("gamma_e").is_none());
        assert_eq!(rules().len(), 2);
    }

    #[test]
    fn json_layout() {
        let mut r = alpha_e(&path(5)).unwrap();
        r.elapsed = Duration::from_millis(3);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            format!(
                r#"{{"invariant":"alpha_e","value":2,"witness":[0,2],"nodes":{},"ms":3}}"#,
                r.nodes_explored
            )
        );
    }
}
