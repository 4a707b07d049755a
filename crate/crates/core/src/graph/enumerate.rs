use std::collections::BTreeSet;

use super::{ahu_canonical, tree_from_code, Graph, GraphError};

/// Largest order accepted by [`enumerate_free_trees`].
pub const FREE_TREE_CAP: usize = 18;
/// Largest order accepted by [`enumerate_labeled_graphs`] (2^21 graphs at 7).
pub const LABELED_GRAPH_CAP: usize = 7;

/// Representatives of all free trees with `1..=max_n` vertices; entry `k`
/// holds the trees of order `k` (entry 0 is empty).
///
/// Level `k + 1` is obtained by hanging a leaf on every vertex of every
/// level-`k` tree and keeping one tree per canonical code. Representatives
/// are rebuilt from their codes, so labels are deterministic and sorted by code.
pub fn free_trees_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>, GraphError> {
    if max_n == 0 || max_n > FREE_TREE_CAP {
        return Err(GraphError::OrderOutOfRange {
            n: max_n,
            min: 1,
            max: FREE_TREE_CAP,
        });
    }
    let mut levels = vec![Vec::new(), vec![Graph::empty(1)]];
    for _ in 2..=max_n {
        let prev = levels.last().unwrap();
        let mut codes = BTreeSet::new();
        for t in prev {
            let n = t.n();
            let mut edges: Vec<_> = t.edges().collect();
            edges.push((0, n));
            for v in t.vertices() {
                edges.last_mut().unwrap().0 = v;
                let grown = Graph::new(n + 1, &edges).expect("adding a leaf keeps a tree simple");
                codes.insert(ahu_canonical(&grown).expect("grown graph is a tree"));
            }
        }
        let level = codes
            .iter()
            .map(|c| tree_from_code(c).expect("canonical codes decode"))
            .collect();
        levels.push(level);
    }
    Ok(levels)
}

/// One representative per isomorphism class of free trees on `n` vertices.
pub fn enumerate_free_trees(n: usize) -> Result<std::vec::IntoIter<Graph>, GraphError> {
    let mut levels = free_trees_up_to(n)?;
    Ok(levels.swap_remove(n).into_iter())
}

/// Every labeled graph on `n` vertices, in order of the edge bitmask where
/// bit `k` is the `k`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs, GraphError> {
    if n == 0 || n > LABELED_GRAPH_CAP {
        return Err(GraphError::OrderOutOfRange {
            n,
            min: 1,
            max: LABELED_GRAPH_CAP,
        });
    }
    let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// The graph for an explicit edge bitmask.
    pub fn graph_for(&self, mask: u64) -> Graph {
        let edges: Vec<_> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(self.n, &edges).expect("distinct pairs form a simple graph")
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.graph_for(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}
