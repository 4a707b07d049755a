//! Equality characterizations between `alpha_e` and `alpha`, and extremal
//! classification against the diameter lower bound and the `(n+1)/2` upper bound.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::families::{is_full_binary, t_membership, FamilyDescriptor, FamilyError, FamilyKind};
use crate::graph::{diameter, is_connected, is_tree, Graph, GraphError, Vertex, VertexSet};
use crate::solver::{ExponentialIndependent, Independent, SolveError, Solver};

pub const HEREDITARY_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterizeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("order {n} exceeds the hereditary check cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenPattern {
    Claw,
    P5,
    Bull,
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenPattern::Claw => "K1,3",
            ForbiddenPattern::P5 => "P5",
            ForbiddenPattern::Bull => "bull",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedPattern {
    pub pattern: ForbiddenPattern,
    pub vertices: VertexSet,
}

fn induced_degrees(g: &Graph, vs: &[Vertex]) -> Vec<usize> {
    let mut d: Vec<usize> = vs
        .iter()
        .map(|&u| vs.iter().filter(|&&v| g.has_edge(u, v)).count())
        .collect();
    d.sort_unstable();
    d
}

fn induced_connected(g: &Graph, vs: &[Vertex]) -> bool {
    let mut seen = vec![false; vs.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..vs.len() {
            if !seen[j] && g.has_edge(vs[i], vs[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The first induced `K1,3`, `P5` or bull found, scanning 4-sets then 5-sets
/// in lexicographic order.
pub fn find_forbidden_induced(g: &Graph) -> Option<InducedPattern> {
    // claw: a center with three pairwise non-adjacent neighbors
    let mut claws = Vec::new();
    for c in g.vertices().filter(|&v| g.degree(v) >= 3) {
        for leaves in g.neighbors(c).iter().copied().combinations(3) {
            if leaves.iter().tuple_combinations().all(|(&a, &b)| !g.has_edge(a, b)) {
                let mut vs = leaves;
                vs.push(c);
                claws.push(VertexSet::from_unsorted(vs));
            }
        }
    }
    if let Some(vertices) = claws.into_iter().min() {
        return Some(InducedPattern {
            pattern: ForbiddenPattern::Claw,
            vertices,
        });
    }
    let heavy = g.vertices().filter(|&v| g.degree(v) >= 3).count();
    for vs in g.vertices().combinations(5) {
        let d = induced_degrees(g, &vs);
        let pattern = match d.as_slice() {
            [1, 1, 2, 2, 2] if induced_connected(g, &vs) => ForbiddenPattern::P5,
            // the only graph with this degree sequence
            [1, 1, 2, 3, 3] if heavy >= 2 => ForbiddenPattern::Bull,
            _ => continue,
        };
        return Some(InducedPattern {
            pattern,
            vertices: VertexSet::from_sorted(vs).unwrap(),
        });
    }
    None
}

pub fn is_cpb_free(g: &Graph) -> bool {
    find_forbidden_induced(g).is_none()
}

/// Both answers to "is `alpha_e(T) = alpha(T)`" for a tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEquality {
    pub alpha: usize,
    pub alpha_e: usize,
    pub membership: Option<FamilyDescriptor>,
}

impl TreeEquality {
    pub fn by_solver(&self) -> bool {
        self.alpha == self.alpha_e
    }

    pub fn by_membership(&self) -> bool {
        self.membership.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.by_solver() == self.by_membership()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Fraction {
        assert!(den > 0);
        let g = num.gcd(&den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn ceil(self) -> u64 {
        self.num.div_ceil(self.den)
    }

    /// Exact comparison with an integer.
    pub fn equals(self, k: u64) -> bool {
        self.num == k * self.den
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub diam: usize,
    pub alpha: usize,
    pub alpha_e: usize,
    /// `(2 diam + 2) / 5`
    pub lower_bound: Fraction,
    /// `(n + 1) / 2`
    pub upper_bound: Fraction,
    pub meets_lower: bool,
    pub meets_upper: bool,
    pub is_path_5k: bool,
    pub is_full_binary: bool,
}

/// The characterization routines with an explicit solver configuration.
#[derive(Clone, Copy, Debug)]
pub struct Characterizer {
    pub solver: Solver,
    pub hereditary_cap: usize,
}

impl Default for Characterizer {
    fn default() -> Self {
        Characterizer {
            solver: Solver::default(),
            hereditary_cap: HEREDITARY_CAP,
        }
    }
}

impl Characterizer {
    pub fn with_solver(solver: Solver) -> Self {
        Characterizer {
            solver,
            ..Characterizer::default()
        }
    }

    fn values(&self, g: &Graph) -> Result<(usize, usize), SolveError> {
        let a = self.solver.solve(&Independent, g)?.value;
        let ae = self.solver.solve(&ExponentialIndependent, g)?.value;
        Ok((a, ae))
    }

    /// The first nonempty vertex subset (by size, then lexicographically)
    /// whose induced subgraph has `alpha_e < alpha`.
    pub fn hereditary_violation(&self, g: &Graph) -> Result<Option<VertexSet>, CharacterizeError> {
        if g.n() > self.hereditary_cap {
            return Err(CharacterizeError::CapExceeded {
                n: g.n(),
                cap: self.hereditary_cap,
            });
        }
        for size in 1..=g.n() {
            for vs in g.vertices().combinations(size) {
                let set = VertexSet::from_sorted(vs).unwrap();
                let (h, _) = g.induced_subgraph(&set)?;
                let (a, ae) = self.values(&h)?;
                if a != ae {
                    return Ok(Some(set));
                }
            }
        }
        Ok(None)
    }

    pub fn hereditary_equality(&self, g: &Graph) -> Result<bool, CharacterizeError> {
        Ok(self.hereditary_violation(g)?.is_none())
    }

    /// Solver values and family membership of a tree.
    pub fn tree_equality_routes(&self, t: &Graph) -> Result<TreeEquality, CharacterizeError> {
        if !is_tree(t) {
            return Err(GraphError::NotATree.into());
        }
        let (alpha, alpha_e) = self.values(t)?;
        Ok(TreeEquality {
            alpha,
            alpha_e,
            membership: t_membership(t)?,
        })
    }

    /// Whether `alpha_e(T) = alpha(T)`, by the solver. The family test is run
    /// alongside; a disagreement panics in debug builds and is logged otherwise.
    pub fn tree_equality(&self, t: &Graph) -> Result<bool, CharacterizeError> {
        let routes = self.tree_equality_routes(t)?;
        if !routes.consistent() {
            let msg = format!(
                "tree_equality routes disagree on {}: alpha={} alpha_e={} membership={:?}",
                t.compact(),
                routes.alpha,
                routes.alpha_e,
                routes.membership.as_ref().map(|d| d.to_string())
            );
            if cfg!(debug_assertions) {
                panic!("{msg}");
            }
            log::warn!("{msg}");
        }
        Ok(routes.by_solver())
    }

    pub fn classify_extremal(&self, g: &Graph) -> Result<ExtremalReport, CharacterizeError> {
        if g.n() == 0 {
            return Err(GraphError::EmptyGraph.into());
        }
        if !is_connected(g) {
            return Err(GraphError::Disconnected.into());
        }
        let n = g.n();
        let diam = diameter(g)?.finite().expect("connected") as usize;
        let (alpha, alpha_e) = self.values(g)?;
        let lower_bound = Fraction::new(2 * diam as u64 + 2, 5);
        let upper_bound = Fraction::new(n as u64 + 1, 2);
        let is_path = crate::families::identify_basic(g).contains(&FamilyKind::Path);
        Ok(ExtremalReport {
            n,
            diam,
            alpha,
            alpha_e,
            lower_bound,
            upper_bound,
            meets_lower: lower_bound.equals(alpha_e as u64),
            meets_upper: upper_bound.equals(alpha_e as u64),
            is_path_5k: is_path && n.is_multiple_of(5),
            is_full_binary: is_full_binary(g).is_some(),
        })
    }
}

pub fn hereditary_equality(g: &Graph) -> Result<bool, CharacterizeError> {
    Characterizer::default().hereditary_equality(g)
}

pub fn tree_equality(t: &Graph) -> Result<bool, CharacterizeError> {
    Characterizer::default().tree_equality(t)
}

pub fn classify_extremal(g: &Graph) -> Result<ExtremalReport, CharacterizeError> {
    Characterizer::default().classify_extremal(g)
}
