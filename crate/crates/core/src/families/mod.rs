//! Named graph families, membership in the tree family with `alpha_e = alpha`,
//! and constructive lower-bound sets.

mod constructions;
mod full_binary;
mod membership;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, Graph, GraphError, Vertex};

pub use constructions::{diametral_path, path_pattern, theorem2_construction, theorem4_construction};
pub use full_binary::{
    enumerate_full_binary, full_binary_from_shape, full_binary_roots, full_binary_shapes,
    is_full_binary,
};
pub use membership::{t_family_candidates, t_membership};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{kind} requires {requirement} (got {value})")]
    Parameter {
        kind: FamilyKind,
        requirement: &'static str,
        value: usize,
    },
    #[error("invalid full binary shape: {0}")]
    Shape(String),
    #[error("full binary trees have odd order, got {0}")]
    EvenOrder(usize),
    #[error("maximum degree {0} exceeds 3")]
    MaxDegree(usize),
    #[error("order {0} is too small (need at least 4)")]
    TooSmall(usize),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    FullBinary,
    Bull,
    T1,
    T2,
    T3,
    T4,
    T5,
    P1,
    P8,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyKind::Path => "PATH",
            FamilyKind::Cycle => "CYCLE",
            FamilyKind::Star => "STAR",
            FamilyKind::FullBinary => "FULL_BINARY",
            FamilyKind::Bull => "BULL",
            FamilyKind::T1 => "T1",
            FamilyKind::T2 => "T2",
            FamilyKind::T3 => "T3",
            FamilyKind::T4 => "T4",
            FamilyKind::T5 => "T5",
            FamilyKind::P1 => "P1",
            FamilyKind::P8 => "P8",
        };
        f.write_str(s)
    }
}

/// Which family member a graph is, with role names for its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub k: usize,
    /// Role name (`x1`, `y1`, `a`, `b'`, ...) to vertex id; a bijection onto the vertices.
    pub labeling: BTreeMap<String, Vertex>,
}

impl FamilyDescriptor {
    pub fn role(&self, name: &str) -> Option<Vertex> {
        self.labeling.get(name).copied()
    }

    /// Vertex ids of the given roles; panics on an unknown role.
    pub fn roles(&self, names: &[&str]) -> Vec<Vertex> {
        names
            .iter()
            .map(|n| self.role(n).unwrap_or_else(|| panic!("no role `{n}` in {}", self.kind)))
            .collect()
    }

    /// Same descriptor with vertex ids mapped through `map`.
    pub fn remapped(&self, map: &[Vertex]) -> FamilyDescriptor {
        FamilyDescriptor {
            kind: self.kind,
            k: self.k,
            labeling: self
                .labeling
                .iter()
                .map(|(r, &v)| (r.clone(), map[v]))
                .collect(),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Bull | FamilyKind::P1 | FamilyKind::P8 => write!(f, "{}", self.kind),
            _ => write!(f, "{}({})", self.kind, self.k),
        }
    }
}

/// A fully parameterized family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// `K_{1,leaves}`.
    Star(usize),
    /// Full binary tree given by its rooted parenthesis code, e.g. `(()())`.
    FullBinary(String),
    Bull,
    T1(usize),
    T2(usize),
    T3(usize),
    /// Defined for `k >= 3`.
    T4(usize),
    T5(usize),
    P1,
    P8,
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::Star(_) => FamilyKind::Star,
            FamilySpec::FullBinary(_) => FamilyKind::FullBinary,
            FamilySpec::Bull => FamilyKind::Bull,
            FamilySpec::T1(_) => FamilyKind::T1,
            FamilySpec::T2(_) => FamilyKind::T2,
            FamilySpec::T3(_) => FamilyKind::T3,
            FamilySpec::T4(_) => FamilyKind::T4,
            FamilySpec::T5(_) => FamilyKind::T5,
            FamilySpec::P1 => FamilyKind::P1,
            FamilySpec::P8 => FamilyKind::P8,
        }
    }

    /// The member of the tree family `T1..T5` at level `level` (1-based).
    pub fn t_family(level: u8, k: usize) -> Option<FamilySpec> {
        Some(match level {
            1 => FamilySpec::T1(k),
            2 => FamilySpec::T2(k),
            3 => FamilySpec::T3(k),
            4 => FamilySpec::T4(k),
            5 => FamilySpec::T5(k),
            _ => return None,
        })
    }

    /// Builds a spec from the command-line family name (`path`, `cycle`,
    /// `star`, `fbt`, `bull`, `t1`..`t5`, `p1`, `p8`).
    pub fn from_name(
        name: &str,
        k: Option<usize>,
        n: Option<usize>,
        shape: Option<&str>,
    ) -> Result<FamilySpec, FamilyError> {
        let size = |kind| {
            n.or(k).ok_or(FamilyError::Parameter {
                kind,
                requirement: "a size via --n or --k",
                value: 0,
            })
        };
        let level = |kind| {
            k.ok_or(FamilyError::Parameter {
                kind,
                requirement: "a level via --k",
                value: 0,
            })
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(size(FamilyKind::Path)?),
            "cycle" => FamilySpec::Cycle(size(FamilyKind::Cycle)?),
            "star" => FamilySpec::Star(size(FamilyKind::Star)?),
            "bull" => FamilySpec::Bull,
            "p1" => FamilySpec::P1,
            "p8" => FamilySpec::P8,
            "t1" => FamilySpec::T1(level(FamilyKind::T1)?),
            "t2" => FamilySpec::T2(level(FamilyKind::T2)?),
            "t3" => FamilySpec::T3(level(FamilyKind::T3)?),
            "t4" => FamilySpec::T4(level(FamilyKind::T4)?),
            "t5" => FamilySpec::T5(level(FamilyKind::T5)?),
            "fbt" => match (shape, n) {
                (Some(code), _) => FamilySpec::FullBinary(code.to_string()),
                (None, Some(order)) => {
                    let shapes = full_binary_shapes(order)?;
                    let index = k.unwrap_or(0);
                    let code = shapes.get(index).ok_or(FamilyError::Parameter {
                        kind: FamilyKind::FullBinary,
                        requirement: "a shape index below the number of shapes",
                        value: index,
                    })?;
                    FamilySpec::FullBinary(code.clone())
                }
                (None, None) => {
                    return Err(FamilyError::Parameter {
                        kind: FamilyKind::FullBinary,
                        requirement: "--shape or --n",
                        value: 0,
                    })
                }
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }
}

fn check(kind: FamilyKind, ok: bool, requirement: &'static str, value: usize) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Parameter {
            kind,
            requirement,
            value,
        })
    }
}

/// Incrementally assembled labeled graph.
struct Builder {
    edges: Vec<(Vertex, Vertex)>,
    labeling: BTreeMap<String, Vertex>,
    next: Vertex,
}

impl Builder {
    fn new() -> Self {
        Builder {
            edges: Vec::new(),
            labeling: BTreeMap::new(),
            next: 0,
        }
    }

    fn vertex(&mut self, role: impl Into<String>) -> Vertex {
        let v = self.next;
        self.next += 1;
        let prev = self.labeling.insert(role.into(), v);
        debug_assert!(prev.is_none());
        v
    }

    fn chain(&mut self, from: Vertex, roles: &[&str]) {
        let mut prev = from;
        for r in roles {
            let v = self.vertex(*r);
            self.edges.push((prev, v));
            prev = v;
        }
    }

    fn finish(self, kind: FamilyKind, k: usize) -> (Graph, FamilyDescriptor) {
        let g = Graph::new(self.next, &self.edges).expect("family constructions are simple graphs");
        (
            g,
            FamilyDescriptor {
                kind,
                k,
                labeling: self.labeling,
            },
        )
    }
}

/// The comb: path `x1..xk` with a pendant `yi` at each `xi`. Ids: `xi = i-1`, `yi = k+i-1`.
fn comb(k: usize) -> (Builder, Vec<Vertex>) {
    let mut b = Builder::new();
    let xs: Vec<Vertex> = (1..=k).map(|i| b.vertex(format!("x{i}"))).collect();
    for i in 1..=k {
        let y = b.vertex(format!("y{i}"));
        b.edges.push((xs[i - 1], y));
    }
    for w in xs.windows(2) {
        b.edges.push((w[0], w[1]));
    }
    (b, xs)
}

fn labeled_path(n: usize, roles: impl Fn(usize) -> String) -> Builder {
    let mut b = Builder::new();
    let vs: Vec<Vertex> = (0..n).map(|i| b.vertex(roles(i))).collect();
    for w in vs.windows(2) {
        b.edges.push((w[0], w[1]));
    }
    b
}

/// Builds the graph of `spec` together with its role labeling.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, FamilyDescriptor), FamilyError> {
    let kind = spec.kind();
    Ok(match *spec {
        FamilySpec::Path(n) => {
            check(kind, n >= 1, "n >= 1", n)?;
            labeled_path(n, |i| format!("v{i}")).finish(kind, n)
        }
        FamilySpec::Cycle(n) => {
            check(kind, n >= 3, "n >= 3", n)?;
            let mut b = labeled_path(n, |i| format!("v{i}"));
            b.edges.push((n - 1, 0));
            b.finish(kind, n)
        }
        FamilySpec::Star(leaves) => {
            check(kind, leaves >= 1, "at least one leaf", leaves)?;
            let mut b = Builder::new();
            let c = b.vertex("c");
            for i in 1..=leaves {
                let l = b.vertex(format!("l{i}"));
                b.edges.push((c, l));
            }
            b.finish(kind, leaves)
        }
        FamilySpec::FullBinary(ref shape) => {
            let g = full_binary_from_shape(shape)?;
            let labeling = g
                .vertices()
                .map(|v| (if v == 0 { "root".to_string() } else { format!("v{v}") }, v))
                .collect();
            let k = g.leaves().len().max(1);
            (
                g,
                FamilyDescriptor {
                    kind,
                    k,
                    labeling,
                },
            )
        }
        FamilySpec::Bull => {
            // triangle t1 t2 t3 with horns h1 at t1 and h2 at t2
            let mut b = Builder::new();
            let t1 = b.vertex("t1");
            let t2 = b.vertex("t2");
            let t3 = b.vertex("t3");
            let h1 = b.vertex("h1");
            let h2 = b.vertex("h2");
            b.edges.extend([(t1, t2), (t1, t3), (t2, t3), (t1, h1), (t2, h2)]);
            b.finish(kind, 0)
        }
        FamilySpec::T1(k) => {
            check(kind, k >= 1, "k >= 1", k)?;
            comb(k).0.finish(kind, k)
        }
        FamilySpec::T2(k) => {
            check(kind, k >= 1, "k >= 1", k)?;
            let (mut b, xs) = comb(k);
            b.chain(xs[0], &["a"]);
            b.finish(kind, k)
        }
        FamilySpec::T3(k) => {
            check(kind, k >= 1, "k >= 1", k)?;
            let (mut b, xs) = comb(k);
            b.chain(xs[0], &["a", "b", "c", "d"]);
            b.finish(kind, k)
        }
        FamilySpec::T4(k) => {
            check(kind, k >= 3, "k >= 3", k)?;
            let (mut b, xs) = comb(k);
            b.chain(xs[1], &["a", "b"]);
            b.finish(kind, k)
        }
        FamilySpec::T5(k) => {
            check(kind, k >= 1, "k >= 1", k)?;
            let (mut b, xs) = comb(k);
            b.chain(xs[0], &["a", "b", "c", "d"]);
            b.chain(xs[k - 1], &["a'", "b'", "c'", "d'"]);
            b.finish(kind, k)
        }
        FamilySpec::P1 => {
            let mut b = Builder::new();
            b.vertex("v0");
            b.finish(kind, 1)
        }
        FamilySpec::P8 => {
            const ROLES: [&str; 8] = ["d", "c", "b", "a", "a'", "b'", "c'", "d'"];
            labeled_path(8, |i| ROLES[i].to_string()).finish(kind, 8)
        }
    })
}

/// Recognizes paths, cycles, stars, full binary trees and the bull (up to
/// isomorphism). Members of the tree family are reported by [`t_membership`].
pub fn identify_basic(g: &Graph) -> Vec<FamilyKind> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let degrees = g.degree_sequence();
    let connected = graph::is_connected(g);
    if connected && g.m() + 1 == n && degrees.iter().all(|&d| d <= 2) {
        out.push(FamilyKind::Path);
    }
    if connected && n >= 3 && degrees.iter().all(|&d| d == 2) {
        out.push(FamilyKind::Cycle);
    }
    if connected && n >= 2 && g.m() + 1 == n && degrees[n - 1] == n - 1 {
        out.push(FamilyKind::Star);
    }
    if is_full_binary(g).is_some() {
        out.push(FamilyKind::FullBinary);
    }
    if degrees == [1, 1, 2, 3, 3] {
        out.push(FamilyKind::Bull);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ahu_canonical, is_tree, path};

    #[test]
    fn comb_layout() {
        let (g, d) = generate(&FamilySpec::T1(3)).unwrap();
        assert_eq!(g.n(), 6);
        let [x1, x2, x3] = d.roles(&["x1", "x2", "x3"])[..] else { unreachable!() };
        assert!(g.has_edge(x1, x2) && g.has_edge(x2, x3) && !g.has_edge(x1, x3));
        for i in 1..=3 {
            let y = d.role(&format!("y{i}")).unwrap();
            assert_eq!(g.neighbors(y), &[d.role(&format!("x{i}")).unwrap()]);
        }
    }

    #[test]
    fn t5_example() {
        let (g, d) = generate(&FamilySpec::T5(3)).unwrap();
        assert_eq!(g.n(), 14);
        assert_eq!(g.degree(d.role("x1").unwrap()), 3);
        assert!(is_tree(&g));
    }

    #[test]
    fn bull_degrees() {
        let (g, _) = generate(&FamilySpec::Bull).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 1, 2, 3, 3]);
        assert_eq!(identify_basic(&g), vec![FamilyKind::Bull]);
    }

    #[test]
    fn orders_match_the_membership_equations() {
        for k in 1..8 {
            assert_eq!(generate(&FamilySpec::T1(k)).unwrap().0.n(), 2 * k);
            assert_eq!(generate(&FamilySpec::T2(k)).unwrap().0.n(), 2 * k + 1);
            assert_eq!(generate(&FamilySpec::T3(k)).unwrap().0.n(), 2 * k + 4);
            assert_eq!(generate(&FamilySpec::T5(k)).unwrap().0.n(), 2 * k + 8);
            if k >= 3 {
                assert_eq!(generate(&FamilySpec::T4(k)).unwrap().0.n(), 2 * k + 2);
            }
        }
    }

    #[test]
    fn labelings_are_bijections() {
        let specs = [
            FamilySpec::Path(5),
            FamilySpec::Cycle(6),
            FamilySpec::Star(4),
            FamilySpec::FullBinary("((()())())".into()),
            FamilySpec::Bull,
            FamilySpec::T1(4),
            FamilySpec::T2(4),
            FamilySpec::T3(4),
            FamilySpec::T4(4),
            FamilySpec::T5(4),
            FamilySpec::P1,
            FamilySpec::P8,
        ];
        for spec in &specs {
            let (g, d) = generate(spec).unwrap();
            let mut ids: Vec<_> = d.labeling.values().copied().collect();
            ids.sort_unstable();
            assert_eq!(ids, (0..g.n()).collect::<Vec<_>>(), "{spec:?}");
        }
    }

    #[test]
    fn small_members_are_paths() {
        let p = |n| ahu_canonical(&path(n)).unwrap();
        let code = |s: FamilySpec| ahu_canonical(&generate(&s).unwrap().0).unwrap();
        assert_eq!(code(FamilySpec::T1(1)), p(2));
        assert_eq!(code(FamilySpec::T2(1)), p(3));
        assert_eq!(code(FamilySpec::T1(2)), p(4));
        assert_eq!(code(FamilySpec::T3(1)), p(6));
        assert_eq!(code(FamilySpec::P8), p(8));
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(&FamilySpec::T4(2)).is_err());
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::T1(0)).is_err());
        assert!(FamilySpec::from_name("t9", Some(1), None, None).is_err());
        assert_eq!(
            FamilySpec::from_name("path", None, Some(5), None).unwrap(),
            FamilySpec::Path(5)
        );
        assert_eq!(
            FamilySpec::from_name("t3", Some(3), None, None).unwrap(),
            FamilySpec::T3(3)
        );
    }

    #[test]
    fn descriptor_json() {
        let (_, d) = generate(&FamilySpec::T2(1)).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"kind":"T2","k":1,"labeling":{"a":2,"x1":0,"y1":1}}"#
        );
        assert_eq!(d.to_string(), "T2(1)");
    }
}
