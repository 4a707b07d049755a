use std::collections::VecDeque;

use super::{ExtendedDist, Graph, GraphError, Vertex, VertexSet};

/// Breadth-first distances from `source` in `g - forbidden`.
///
/// Forbidden vertices are never entered, so their entries stay infinite.
pub fn bfs_distances(
    g: &Graph,
    source: Vertex,
    forbidden: &VertexSet,
) -> Result<Vec<ExtendedDist>, GraphError> {
    if source >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    if forbidden.contains(source) {
        return Err(GraphError::SourceForbidden(source));
    }
    let blocked = forbidden.mask(g.n());
    let mut dist = vec![ExtendedDist::Infinite; g.n()];
    dist[source] = ExtendedDist::Finite(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let ExtendedDist::Finite(d) = dist[u] else {
            unreachable!()
        };
        for &v in g.neighbors(u) {
            if !blocked[v] && dist[v] == ExtendedDist::Infinite {
                dist[v] = ExtendedDist::Finite(d + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// Plain hop distances from `source`; `u32::MAX` marks unreachable vertices.
pub(crate) fn hop_distances(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Largest pairwise distance; infinite for disconnected graphs.
pub fn diameter(g: &Graph) -> Result<ExtendedDist, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut best = 0;
    for s in g.vertices() {
        for d in hop_distances(g, s) {
            if d == u32::MAX {
                return Ok(ExtendedDist::Infinite);
            }
            best = best.max(d);
        }
    }
    Ok(ExtendedDist::Finite(best))
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && components(g).len() == 1
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.m() + 1 == g.n() && is_connected(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use ExtendedDist::{Finite as F, Infinite as Inf};

    #[test]
    fn bfs_examples() {
        let p5 = path(5);
        assert_eq!(
            bfs_distances(&p5, 0, &VertexSet::new()).unwrap(),
            vec![F(0), F(1), F(2), F(3), F(4)]
        );
        let blocked = VertexSet::from_sorted(vec![2]).unwrap();
        assert_eq!(
            bfs_distances(&p5, 0, &blocked).unwrap(),
            vec![F(0), F(1), Inf, Inf, Inf]
        );
        let c5 = cycle(5);
        let blocked = VertexSet::from_sorted(vec![1]).unwrap();
        assert_eq!(
            bfs_distances(&c5, 0, &blocked).unwrap(),
            vec![F(0), Inf, F(3), F(2), F(1)]
        );
        assert_eq!(
            bfs_distances(&c5, 1, &blocked),
            Err(GraphError::SourceForbidden(1))
        );
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&path(5)).unwrap(), F(4));
        assert_eq!(diameter(&complete(3)).unwrap(), F(1));
        assert_eq!(diameter(&Graph::empty(2)).unwrap(), Inf);
        assert_eq!(diameter(&Graph::empty(1)).unwrap(), F(0));
        assert_eq!(diameter(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn tree_detection() {
        assert!(is_tree(&path(4)));
        assert!(!is_tree(&cycle(4)));
        assert!(!is_tree(&Graph::empty(2)));
        assert!(is_tree(&Graph::empty(1)));
    }
}
