//! Simple undirected graphs with dense vertex ids, plus the traversal,
//! I/O, canonization and enumeration routines the rest of the crate uses.

mod canon;
mod enumerate;
mod io;
mod traversal;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use canon::{ahu_canonical, rooted_code, tree_centers, tree_from_code, tree_isomorphism};
pub use enumerate::{
    enumerate_free_trees, enumerate_labeled_graphs, free_trees_up_to, LabeledGraphs,
    FREE_TREE_CAP, LABELED_GRAPH_CAP,
};
pub use io::{encode_graph6, from_edge_list, parse_graph6};
pub use traversal::{bfs_distances, components, diameter, is_connected, is_tree};
pub(crate) use traversal::hop_distances;

/// A vertex id. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("vertex set is not strictly increasing")]
    UnsortedSet,
    #[error("source vertex {0} lies in the forbidden set")]
    SourceForbidden(usize),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),
}

/// Immutable simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Edge orientation is irrelevant.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Graph without edges on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adj[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Subgraph induced by `set`, relabeled `0..|set|` in increasing order.
    /// The second component maps new ids back to ids of `self`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let map: Vec<Vertex> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                    if i < index[w] {
                        m += 1;
                    }
                }
            }
        }
        Ok((Graph { adj, m }, map))
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges).expect("relabeling by a permutation preserves simplicity")
    }

    /// Edge-list text in the crate's input format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// One-line form used in reports: `n=4 e=0-1,1-2,2-3`.
    pub fn compact(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n={} e={}", self.n(), edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.compact())
    }
}

/// A strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Accepts an already sorted, duplicate-free list.
    pub fn from_sorted(members: Vec<Vertex>) -> Result<Self, GraphError> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::UnsortedSet);
        }
        Ok(VertexSet(members))
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unsorted(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// Checks every member against the host graph order.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Membership bitmap of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        let mut members = self.0.clone();
        if let Err(pos) = members.binary_search(&v) {
            members.insert(pos, v);
        }
        VertexSet(members)
    }

    /// Maps every member through `map` (e.g. an induced-subgraph index map).
    pub fn map_through(&self, map: &[Vertex]) -> VertexSet {
        VertexSet::from_unsorted(self.0.iter().map(|&v| map[v]).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A distance that may be infinite. `Infinite` is larger than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedDist {
    Finite(u32),
    Infinite,
}

impl ExtendedDist {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedDist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedDist::Finite(d) => Some(d),
            ExtendedDist::Infinite => None,
        }
    }
}

impl Ord for ExtendedDist {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedDist::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedDist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDist::Finite(d) => write!(f, "{d}"),
            ExtendedDist::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtendedDist {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedDist::Finite(d) => serializer.serialize_u32(*d),
            ExtendedDist::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges).unwrap()
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).unwrap()
}
