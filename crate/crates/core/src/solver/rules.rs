use crate::graph::{Graph, Vertex, VertexSet};
use crate::weights::{is_exponential_independent, WeightScratch};

/// A hereditary family of vertex sets searched by the backtracking skeleton.
///
/// The skeleton only proposes independent extensions, so a rule sees
/// `members` (already containing the new vertex, with `in_set` updated)
/// only when plain independence holds.
pub trait SetRule: Send + Sync {
    /// Registry key, also the `invariant` field of solver output.
    fn name(&self) -> &'static str;

    /// Whether `members` is still in the family after its last vertex was added.
    fn admits(&self, g: &Graph, members: &[Vertex], in_set: &[bool], scratch: &mut WeightScratch) -> bool;

    /// Independent membership check used for certification and by the
    /// unpruned search.
    fn certify(&self, g: &Graph, set: &VertexSet) -> bool;
}

pub fn is_independent(g: &Graph, set: &VertexSet) -> bool {
    set.iter()
        .all(|u| g.neighbors(u).iter().all(|&v| !set.contains(v)))
}

/// Plain independent sets.
pub struct Independent;

impl SetRule for Independent {
    fn name(&self) -> &'static str {
        "alpha"
    }

    fn admits(&self, _: &Graph, _: &[Vertex], _: &[bool], _: &mut WeightScratch) -> bool {
        true
    }

    fn certify(&self, g: &Graph, set: &VertexSet) -> bool {
        is_independent(g, set)
    }
}

/// Exponential independent sets. Every member's weight is recomputed on each
/// extension: adding a vertex can block paths and so change far-away weights.
pub struct ExponentialIndependent;

impl SetRule for ExponentialIndependent {
    fn name(&self) -> &'static str {
        "alpha_e"
    }

    fn admits(&self, g: &Graph, members: &[Vertex], in_set: &[bool], scratch: &mut WeightScratch) -> bool {
        members.iter().all(|&u| scratch.below_one(g, in_set, u))
    }

    fn certify(&self, g: &Graph, set: &VertexSet) -> bool {
        is_exponential_independent(g, set)
    }
}

static RULES: &[&dyn SetRule] = &[&ExponentialIndependent, &Independent];

/// All registered rules.
pub fn rules() -> &'static [&'static dyn SetRule] {
    RULES
}

/// Looks up a rule by registry key; `alpha-e` is accepted for `alpha_e`.
pub fn rule_by_name(name: &str) -> Option<&'static dyn SetRule> {
    let key = name.replace('-', "_");
    RULES.iter().copied().find(|r| r.name() == key)
}
