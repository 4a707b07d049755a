//! Relative distances, exponentially decaying weights, and the exponential
//! independence and domination checkers.
//!
//! For a set `S` and a vertex `u`, the weight of `u` is the sum over `v` in
//! `S` of `(1/2)^(d - 1)`, where `d` is the length of a shortest `u`-`v`
//! path meeting `S` only in `v` (infinite distances contribute nothing).
//! All arithmetic is exact.

mod dyadic;

use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::{bfs_distances, ExtendedDist, Graph, GraphError, Vertex, VertexSet};

pub use dyadic::Dyadic;

/// Relative distance from `u` to the member `v` of `s`, computed straight
/// from the definition: a BFS from `u` in `g - (s \ {v})`.
pub fn dist_rel(g: &Graph, s: &VertexSet, u: Vertex, v: Vertex) -> Result<ExtendedDist, GraphError> {
    if !s.contains(v) {
        return Err(GraphError::NotInSet(v));
    }
    if u == v {
        return Ok(ExtendedDist::Finite(0));
    }
    if s.contains(u) {
        return Ok(ExtendedDist::Infinite);
    }
    let others = s.without(v);
    Ok(bfs_distances(g, u, &others)?[v])
}

/// Relative distances from `u` to every member of `s`, aligned with
/// `s.as_slice()`. One BFS from `u` that never expands members of `s`.
pub fn all_dists_from(g: &Graph, s: &VertexSet, u: Vertex) -> Vec<ExtendedDist> {
    if s.contains(u) {
        return s
            .iter()
            .map(|v| {
                if v == u {
                    ExtendedDist::Finite(0)
                } else {
                    ExtendedDist::Infinite
                }
            })
            .collect();
    }
    let in_set = s.mask(g.n());
    let dist = blocked_bfs(g, &in_set, u);
    s.iter()
        .map(|v| match dist[v] {
            u32::MAX => ExtendedDist::Infinite,
            d => ExtendedDist::Finite(d),
        })
        .collect()
}

/// BFS from `u` where vertices flagged in `in_set` receive a distance but are
/// not expanded. `u` itself is always expanded.
fn blocked_bfs(g: &Graph, in_set: &[bool], u: Vertex) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    dist[u] = 0;
    queue.push(u);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &y in g.neighbors(x) {
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                if !in_set[y] {
                    queue.push(y);
                }
            }
        }
    }
    dist
}

/// Histogram of finite relative distances: `counts[d]` sources sit at distance `d`.
///
/// Lets the weight `sum counts[d] * 2^(1-d)` be compared with an integer
/// exactly, without building the full [`Dyadic`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightProfile {
    counts: Vec<u64>,
}

impl WeightProfile {
    pub fn from_distances(dists: impl IntoIterator<Item = ExtendedDist>) -> Self {
        let mut p = WeightProfile::default();
        for d in dists.into_iter().filter_map(ExtendedDist::finite) {
            p.add(d);
        }
        p
    }

    pub fn add(&mut self, d: u32) {
        let d = d as usize;
        if self.counts.len() <= d {
            self.counts.resize(d + 1, 0);
        }
        self.counts[d] += 1;
    }

    pub fn clear(&mut self) {
        self.counts.clear();
    }

    /// Exact comparison of the weight with the integer `k`.
    ///
    /// Sums from the largest distance down with binary carries; the value is
    /// `integer + fraction` where the fraction is nonzero iff some carry
    /// step at a distance `>= 2` left a remainder.
    pub fn cmp_integer(&self, k: u64) -> Ordering {
        let mut carry: u64 = 0;
        let mut fraction = false;
        for d in (2..self.counts.len()).rev() {
            let total = self.counts[d] + carry;
            fraction |= total % 2 == 1;
            carry = total / 2;
        }
        let ones = self.counts.get(1).copied().unwrap_or(0);
        let twos = self.counts.first().copied().unwrap_or(0);
        let integer = carry + ones + 2 * twos;
        match integer.cmp(&k) {
            Ordering::Equal if fraction => Ordering::Greater,
            other => other,
        }
    }

    pub fn to_dyadic(&self) -> Dyadic {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| {
                let term = Dyadic::decay_term(Some(d as u32));
                Dyadic::new(term.numerator() * c, term.shift())
            })
            .sum()
    }
}

/// Reusable buffers for repeated weight queries on one graph.
#[derive(Debug)]
pub struct WeightScratch {
    dist: Vec<u32>,
    queue: Vec<Vertex>,
    profile: WeightProfile,
}

impl WeightScratch {
    pub fn new(n: usize) -> Self {
        WeightScratch {
            dist: vec![u32::MAX; n],
            queue: Vec::with_capacity(n),
            profile: WeightProfile::default(),
        }
    }

    /// Profile of `u` against `in_set \ {u}`.
    pub fn profile_excluding(&mut self, g: &Graph, in_set: &[bool], u: Vertex) -> &WeightProfile {
        self.dist.clear();
        self.dist.resize(g.n(), u32::MAX);
        self.queue.clear();
        self.profile.clear();
        self.dist[u] = 0;
        self.queue.push(u);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let next = self.dist[x] + 1;
            for &y in g.neighbors(x) {
                if self.dist[y] == u32::MAX {
                    self.dist[y] = next;
                    if in_set[y] {
                        self.profile.add(next);
                    } else {
                        self.queue.push(y);
                    }
                }
            }
        }
        &self.profile
    }

    /// Whether `u` receives weight strictly below one from `in_set \ {u}`.
    pub fn below_one(&mut self, g: &Graph, in_set: &[bool], u: Vertex) -> bool {
        self.profile_excluding(g, in_set, u).cmp_integer(1) == Ordering::Less
    }
}

/// The weight of one vertex with its per-source breakdown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub vertex: Vertex,
    pub weight: Dyadic,
    /// `(source, relative distance, term)` for every member of the set.
    pub contributions: Vec<(Vertex, ExtendedDist, Dyadic)>,
}

/// Exact weight of `u` with respect to `s`.
pub fn weight(g: &Graph, s: &VertexSet, u: Vertex) -> WeightReport {
    let contributions: Vec<_> = s
        .iter()
        .zip(all_dists_from(g, s, u))
        .map(|(v, d)| (v, d, Dyadic::decay_term(d.finite())))
        .collect();
    let weight = contributions.iter().map(|(_, _, t)| t.clone()).sum();
    WeightReport {
        vertex: u,
        weight,
        contributions,
    }
}

/// First member `u` of `s` (in increasing order) whose weight against
/// `s \ {u}` is at least one.
pub fn find_independence_violation(g: &Graph, s: &VertexSet) -> Option<WeightReport> {
    s.iter()
        .map(|u| weight(g, &s.without(u), u))
        .find(|r| r.weight >= Dyadic::one())
}

pub fn is_exponential_independent(g: &Graph, s: &VertexSet) -> bool {
    find_independence_violation(g, s).is_none()
}

/// First non-member whose weight is below one.
pub fn find_domination_violation(g: &Graph, s: &VertexSet) -> Option<WeightReport> {
    g.vertices()
        .filter(|&u| !s.contains(u))
        .map(|u| weight(g, s, u))
        .find(|r| r.weight < Dyadic::one())
}

pub fn is_exponential_dominating(g: &Graph, s: &VertexSet) -> bool {
    find_domination_violation(g, s).is_none()
}
