use super::FamilyError;
use crate::graph::{components, hop_distances, is_connected, is_tree, Graph, GraphError, Vertex, VertexSet};

/// Positions `j < len` with `j mod 5` in `{0, 2}`: the set `{v_5i} ∪ {v_5i+2}`
/// on a path `v_0 .. v_(len-1)`.
pub fn path_pattern(len: usize) -> Vec<usize> {
    (0..len).filter(|j| j % 5 == 0 || j % 5 == 2).collect()
}

/// A longest shortest path of a connected graph.
///
/// The start is the least vertex of maximum eccentricity, the end the least
/// vertex at that distance from it, and the path the lexicographically least
/// shortest path between them.
pub fn diametral_path(g: &Graph) -> Result<Vec<Vertex>, FamilyError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    if !is_connected(g) {
        return Err(GraphError::Disconnected.into());
    }
    let mut best: Option<(u32, Vertex, Vec<u32>)> = None;
    for u in g.vertices() {
        let d = hop_distances(g, u);
        let ecc = *d.iter().max().unwrap();
        if best.as_ref().is_none_or(|(e, _, _)| ecc > *e) {
            best = Some((ecc, u, d));
        }
    }
    let (diam, start, _) = best.unwrap();
    let from_start = hop_distances(g, start);
    let end = g.vertices().find(|&v| from_start[v] == diam).unwrap();
    let to_end = hop_distances(g, end);
    let mut path = vec![start];
    let mut cur = start;
    while cur != end {
        cur = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&y| to_end[y] + 1 == to_end[cur])
            .min()
            .unwrap();
        path.push(cur);
    }
    Ok(path)
}

/// An exponential independent set of size at least `(2 diam + 2) / 5`,
/// taken along [`diametral_path`].
pub fn theorem2_construction(g: &Graph) -> Result<VertexSet, FamilyError> {
    let p = diametral_path(g)?;
    Ok(VertexSet::from_unsorted(
        path_pattern(p.len()).into_iter().map(|j| p[j]).collect(),
    ))
}

/// An exponential independent set of size at least `(2n + 8) / 13` in a
/// tree of maximum degree at most 3 and order at least 4.
///
/// Two candidates are formed: the leaves (all of them when some vertex has
/// degree 2, otherwise all but the greatest), and the path pattern applied to
/// every component of `T - N[V3]`, where `V3` are the degree-3 vertices. The
/// larger is returned, the leaf set on a tie.
pub fn theorem4_construction(t: &Graph) -> Result<VertexSet, FamilyError> {
    if !is_tree(t) {
        return Err(GraphError::NotATree.into());
    }
    if t.max_degree() > 3 {
        return Err(FamilyError::MaxDegree(t.max_degree()));
    }
    if t.n() <= 3 {
        return Err(FamilyError::TooSmall(t.n()));
    }
    let mut s1 = t.leaves();
    if t.vertices().all(|v| t.degree(v) != 2) {
        s1.pop();
    }

    let mut blocked = vec![false; t.n()];
    for v in t.vertices().filter(|&v| t.degree(v) == 3) {
        blocked[v] = true;
        for &w in t.neighbors(v) {
            blocked[w] = true;
        }
    }
    let rest = VertexSet::from_unsorted(t.vertices().filter(|&v| !blocked[v]).collect());
    let mut s2 = Vec::new();
    if !rest.is_empty() {
        let (forest, back) = t.induced_subgraph(&rest)?;
        for comp in components(&forest) {
            let seq = orient_path(&forest, &comp);
            s2.extend(path_pattern(seq.len()).into_iter().map(|j| back[seq[j]]));
        }
    }

    Ok(if s2.len() > s1.len() {
        VertexSet::from_unsorted(s2)
    } else {
        VertexSet::from_sorted(s1).expect("leaves are listed in order")
    })
}

/// Vertices of a path component in order, starting from its least endpoint.
fn orient_path(g: &Graph, comp: &[Vertex]) -> Vec<Vertex> {
    let start = comp.iter().copied().find(|&v| g.degree(v) <= 1).expect("component is a path");
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        prev = cur;
        cur = next;
        seq.push(cur);
    }
    debug_assert_eq!(seq.len(), comp.len());
    seq
}
