use super::{generate, FamilyDescriptor, FamilyError, FamilySpec};
use crate::graph::{ahu_canonical, is_tree, tree_isomorphism, Graph, GraphError};

/// Tree-family members of order `n`, in the order `T1, T2, T3, T4, T5, P1, P8`.
///
/// Only one parameter per level can match a given order, so this is at most
/// a handful of candidates.
pub fn t_family_candidates(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if n >= 2 && n.is_multiple_of(2) {
        out.push(FamilySpec::T1(n / 2));
    }
    if n >= 3 && n % 2 == 1 {
        out.push(FamilySpec::T2((n - 1) / 2));
    }
    if n >= 6 && n.is_multiple_of(2) {
        out.push(FamilySpec::T3((n - 4) / 2));
    }
    if n >= 8 && n.is_multiple_of(2) {
        out.push(FamilySpec::T4((n - 2) / 2));
    }
    if n >= 10 && n.is_multiple_of(2) {
        out.push(FamilySpec::T5((n - 8) / 2));
    }
    if n == 1 {
        out.push(FamilySpec::P1);
    }
    if n == 8 {
        out.push(FamilySpec::P8);
    }
    out
}

/// The first matching member of the tree family, with its role labeling
/// expressed in `t`'s vertex ids, or `None` when `t` is not in the family.
pub fn t_membership(t: &Graph) -> Result<Option<FamilyDescriptor>, FamilyError> {
    if !is_tree(t) {
        return Err(GraphError::NotATree.into());
    }
    let code = ahu_canonical(t)?;
    for spec in t_family_candidates(t.n()) {
        let (candidate, descriptor) = generate(&spec)?;
        if ahu_canonical(&candidate)? != code {
            continue;
        }
        let map = tree_isomorphism(&candidate, t)?.expect("equal canonical codes imply isomorphism");
        return Ok(Some(descriptor.remapped(&map)));
    }
    Ok(None)
}
