use std::collections::HashMap;

use super::{is_tree, Graph, GraphError, Vertex};

/// Parent pointers and children lists of `g` rooted at `root`, plus a BFS order.
fn root_tree(g: &Graph, root: Vertex) -> (Vec<Vec<Vertex>>, Vec<Vertex>) {
    let mut parent = vec![usize::MAX; g.n()];
    let mut children = vec![Vec::new(); g.n()];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                children[u].push(v);
                order.push(v);
            }
        }
    }
    (children, order)
}

/// Parenthesis code of the tree component containing `root`, rooted there.
/// Children codes are concatenated in lexicographic order.
pub fn rooted_code(g: &Graph, root: Vertex) -> String {
    let (children, order) = root_tree(g, root);
    let mut codes = vec![String::new(); g.n()];
    for &u in order.iter().rev() {
        let mut kids: Vec<String> = children[u]
            .iter()
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        kids.sort_unstable();
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in &kids {
            code.push_str(k);
        }
        code.push(')');
        codes[u] = code;
    }
    std::mem::take(&mut codes[root])
}

/// The one or two central vertices of a tree, found by repeated leaf stripping.
pub fn tree_centers(t: &Graph) -> Result<Vec<Vertex>, GraphError> {
    if !is_tree(t) {
        return Err(GraphError::NotATree);
    }
    let n = t.n();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &v in t.neighbors(leaf) {
                if degree[v] > 1 {
                    degree[v] -= 1;
                    if degree[v] == 1 {
                        next.push(v);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Canonical string of a free tree: the rooted code at the center, or the
/// lexicographically smaller of the two center-rooted codes.
pub fn ahu_canonical(t: &Graph) -> Result<String, GraphError> {
    let centers = tree_centers(t)?;
    Ok(centers
        .iter()
        .map(|&c| rooted_code(t, c))
        .min()
        .expect("a tree has at least one center"))
}

/// Rebuilds a tree from a rooted parenthesis code, numbering vertices in
/// preorder (the root is 0).
pub fn tree_from_code(code: &str) -> Result<Graph, GraphError> {
    let bad = |message: &str| GraphError::Parse {
        line: 1,
        message: format!("tree code: {message}"),
    };
    let mut stack: Vec<Vertex> = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0;
    let mut closed_root = false;
    for ch in code.chars() {
        if closed_root {
            return Err(bad("text after the root closes"));
        }
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop().ok_or_else(|| bad("unbalanced `)`"))?;
                closed_root = stack.is_empty();
            }
            _ => return Err(bad("only `(` and `)` are allowed")),
        }
    }
    if !closed_root {
        return Err(bad("unbalanced `(`"));
    }
    Graph::new(next, &edges)
}

/// Interns rooted subtrees by the sorted multiset of their children's ids, so
/// equal ids mean isomorphic rooted subtrees (within one interner).
#[derive(Default)]
struct SubtreeInterner {
    ids: HashMap<Vec<u32>, u32>,
}

struct RootedIds {
    id: Vec<u32>,
    children: Vec<Vec<Vertex>>,
}

impl SubtreeInterner {
    fn label(&mut self, g: &Graph, root: Vertex) -> RootedIds {
        let (children, order) = root_tree(g, root);
        let mut id = vec![0u32; g.n()];
        for &u in order.iter().rev() {
            let mut key: Vec<u32> = children[u].iter().map(|&c| id[c]).collect();
            key.sort_unstable();
            let fresh = self.ids.len() as u32;
            id[u] = *self.ids.entry(key).or_insert(fresh);
        }
        RootedIds { id, children }
    }
}

/// An isomorphism between two trees, as a map from vertices of `a` to
/// vertices of `b`, or `None` if they are not isomorphic.
pub fn tree_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<Vertex>>, GraphError> {
    let ca = tree_centers(a)?;
    let cb = tree_centers(b)?;
    if a.n() != b.n() || ca.len() != cb.len() {
        return Ok(None);
    }
    let mut interner = SubtreeInterner::default();
    let ra = interner.label(a, ca[0]);
    for &root_b in &cb {
        let rb = interner.label(b, root_b);
        if ra.id[ca[0]] != rb.id[root_b] {
            continue;
        }
        let mut map = vec![usize::MAX; a.n()];
        let mut stack = vec![(ca[0], root_b)];
        while let Some((x, y)) = stack.pop() {
            map[x] = y;
            let mut kx = ra.children[x].clone();
            let mut ky = rb.children[y].clone();
            kx.sort_by_key(|&c| ra.id[c]);
            ky.sort_by_key(|&c| rb.id[c]);
            stack.extend(kx.into_iter().zip(ky));
        }
        return Ok(Some(map));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    #[test]
    fn canonical_examples() {
        assert_eq!(ahu_canonical(&path(3)).unwrap(), "(()())");
        assert_ne!(
            ahu_canonical(&path(4)).unwrap(),
            ahu_canonical(&star(3)).unwrap()
        );
        // two labelings of the comb on four vertices (which is P4)
        let a = Graph::new(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let b = Graph::new(4, &[(3, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(ahu_canonical(&a).unwrap(), ahu_canonical(&b).unwrap());
        assert_eq!(ahu_canonical(&Graph::empty(2)), Err(GraphError::NotATree));
    }

    #[test]
    fn centers() {
        assert_eq!(tree_centers(&path(5)).unwrap(), vec![2]);
        assert_eq!(tree_centers(&path(4)).unwrap(), vec![1, 2]);
        assert_eq!(tree_centers(&path(1)).unwrap(), vec![0]);
        assert_eq!(tree_centers(&star(4)).unwrap(), vec![0]);
    }

    #[test]
    fn code_round_trip() {
        let t = tree_from_code("((()())(()))").unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(rooted_code(&t, 0), "((()())(()))");
        let unsorted = tree_from_code("((())(()()))").unwrap();
        assert_eq!(rooted_code(&unsorted, 0), "((()())(()))");
        assert!(tree_from_code("(()").is_err());
        assert!(tree_from_code("()()").is_err());
        assert!(tree_from_code("(x)").is_err());
    }

    #[test]
    fn isomorphism_maps_edges_to_edges() {
        let a = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let b = a.relabel(&perm);
        let map = tree_isomorphism(&a, &b).unwrap().unwrap();
        for (u, v) in a.edges() {
            assert!(b.has_edge(map[u], map[v]));
        }
        assert!(tree_isomorphism(&path(4), &star(3)).unwrap().is_none());
    }
}
