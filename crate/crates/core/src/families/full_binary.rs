use std::collections::BTreeSet;

use super::FamilyError;
use crate::graph::{ahu_canonical, is_tree, rooted_code, tree_from_code, Graph, Vertex};

/// Rooted codes of all full binary shapes on `n` vertices, one per free
/// isomorphism class, sorted.
///
/// Shapes grow by splitting a leaf `()` into `(()())`; rooted duplicates are
/// merged by canonical rooted code, then free duplicates by the free code.
pub fn full_binary_shapes(n: usize) -> Result<Vec<String>, FamilyError> {
    if n.is_multiple_of(2) {
        return Err(FamilyError::EvenOrder(n));
    }
    let leaves = n.div_ceil(2);
    let mut level: BTreeSet<String> = BTreeSet::from(["()".to_string()]);
    for _ in 1..leaves {
        let mut next = BTreeSet::new();
        for code in &level {
            for (pos, _) in code.match_indices("()") {
                let split = format!("{}(()()){}", &code[..pos], &code[pos + 2..]);
                let t = tree_from_code(&split).expect("split codes stay balanced");
                next.insert(rooted_code(&t, 0));
            }
        }
        level = next;
    }
    let mut seen = BTreeSet::new();
    Ok(level
        .into_iter()
        .filter(|code| {
            let t = tree_from_code(code).unwrap();
            seen.insert(ahu_canonical(&t).unwrap())
        })
        .collect())
}

/// One representative per free tree admitting a full binary rooting, rooted
/// (and numbered in preorder from) vertex 0.
pub fn enumerate_full_binary(n: usize) -> Result<std::vec::IntoIter<Graph>, FamilyError> {
    let graphs: Vec<Graph> = full_binary_shapes(n)?
        .iter()
        .map(|c| tree_from_code(c).unwrap())
        .collect();
    Ok(graphs.into_iter())
}

/// Decodes a rooted shape code and checks that every node has zero or two children.
pub fn full_binary_from_shape(code: &str) -> Result<Graph, FamilyError> {
    let t = tree_from_code(code).map_err(|e| FamilyError::Shape(e.to_string()))?;
    for v in t.vertices() {
        let children = t.degree(v) - usize::from(v != 0);
        if children != 0 && children != 2 {
            return Err(FamilyError::Shape(format!(
                "node {v} has {children} children"
            )));
        }
    }
    Ok(t)
}

/// A root making `g` a full binary tree, if one exists.
///
/// For `n >= 3` such a tree has exactly one vertex of degree 2 (the root)
/// and every other vertex has degree 1 or 3.
pub fn is_full_binary(g: &Graph) -> Option<Vertex> {
    if !is_tree(g) {
        return None;
    }
    match g.n() {
        1 => return Some(0),
        2 => return None,
        _ => {}
    }
    let mut root = None;
    for v in g.vertices() {
        match g.degree(v) {
            1 | 3 => {}
            2 if root.is_none() => root = Some(v),
            _ => return None,
        }
    }
    root
}

/// Every root under which each vertex of `g` has zero or two children,
/// found by trying all roots.
pub fn full_binary_roots(g: &Graph) -> Vec<Vertex> {
    if !is_tree(g) {
        return Vec::new();
    }
    g.vertices()
        .filter(|&r| {
            g.vertices().all(|v| {
                let children = g.degree(v) - usize::from(v != r);
                children == 0 || children == 2
            })
        })
        .collect()
}
