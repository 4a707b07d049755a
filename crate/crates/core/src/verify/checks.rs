use std::cmp::Ordering;

use rayon::prelude::*;

use super::random::{instance_rng, random_connected_graph, random_instance, random_subset};
use super::{run_all, Ctx, Failure, Outcome, TheoremCheck};
use crate::characterize::{find_forbidden_induced, Characterizer};
use crate::families::{
    enumerate_full_binary, generate, is_full_binary, theorem2_construction, theorem4_construction,
    FamilyDescriptor, FamilySpec,
};
use crate::graph::{
    cycle, diameter, enumerate_labeled_graphs, free_trees_up_to, is_connected, path, star, Graph, VertexSet,
    FREE_TREE_CAP, LABELED_GRAPH_CAP,
};
use crate::weights::{all_dists_from, dist_rel, is_exponential_independent, WeightProfile};

fn free_trees(min_n: usize, max_n: usize) -> Vec<Graph> {
    free_trees_up_to(max_n)
        .expect("max_n is range-checked")
        .into_iter()
        .skip(min_n)
        .flatten()
        .collect()
}

/// `(n, mask)` for every labeled graph with `1 <= n <= max_n`.
fn labeled_masks(max_n: usize) -> Vec<(usize, u64)> {
    (1..=max_n)
        .flat_map(|n| {
            let total = enumerate_labeled_graphs(n).unwrap().total();
            (0..total).map(move |m| (n, m))
        })
        .collect()
}

fn labeled_graph(n: usize, mask: u64) -> Graph {
    enumerate_labeled_graphs(n).unwrap().graph_for(mask)
}

fn ensure(ok: bool, g: &Graph, expected: impl FnOnce() -> String, got: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::new(g, expected(), got()))
    }
}

fn check_eis(g: &Graph, s: &VertexSet, what: &str) -> Result<(), Failure> {
    ensure(
        is_exponential_independent(g, s),
        g,
        || format!("{what} is exponential independent"),
        || format!("{what} {s} is not"),
    )
}

fn diam_of(g: &Graph) -> usize {
    diameter(g).unwrap().finite().expect("connected graphs have finite diameter") as usize
}

struct Heredity;

impl TheoremCheck for Heredity {
    fn id(&self) -> &'static str {
        "thm1iii"
    }
    fn description(&self) -> &'static str {
        "subsets of exponential independent sets are exponential independent; alpha_e <= alpha"
    }
    fn default_max_n(&self) -> usize {
        12
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, 16)
    }
    fn parameter_range(&self, max_n: usize, seed: u64) -> String {
        format!("200 random graphs with n <= {max_n}, 500 random subsets of a maximum set each, seed {seed}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let streams: Vec<u64> = (0..200).collect();
        run_all(&streams, |&i| {
            let mut rng = instance_rng(ctx.seed, i);
            let g = random_instance(&mut rng, max_n);
            let best = ctx.alpha_e(&g)?;
            let a = ctx.alpha(&g)?;
            ensure(best.value <= a, &g, || format!("alpha_e <= alpha = {a}"), || best.value.to_string())?;
            for _ in 0..500 {
                let sub = random_subset(&mut rng, best.witness.iter());
                check_eis(&g, &sub, "subset of a maximum set")?;
            }
            Ok(())
        })
    }
}

struct DiameterBound;

impl TheoremCheck for DiameterBound {
    fn id(&self) -> &'static str {
        "thm2"
    }
    fn description(&self) -> &'static str {
        "alpha_e >= (2 diam + 2)/5, tight for trees exactly on paths of order 5k; the path construction attains it"
    }
    fn default_max_n(&self) -> usize {
        12
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, FREE_TREE_CAP)
    }
    fn parameter_range(&self, max_n: usize, seed: u64) -> String {
        format!("free trees n <= {max_n}; 500 random connected graphs n <= {max_n}, seed {seed}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let check = |g: &Graph, tree: bool| -> Result<(), Failure> {
            let n = g.n();
            let diam = diam_of(g);
            let ae = ctx.alpha_e(g)?.value;
            let bound = 2 * diam + 2;
            ensure(5 * ae >= bound, g, || format!("alpha_e >= {bound}/5"), || ae.to_string())?;
            if tree {
                let tight = 5 * ae == bound;
                let is_path_5k = g.max_degree() <= 2 && n.is_multiple_of(5);
                ensure(
                    tight == is_path_5k,
                    g,
                    || format!("equality iff path of order 5k ({is_path_5k})"),
                    || format!("alpha_e = {ae}, diam = {diam}"),
                )?;
            }
            let s = theorem2_construction(g).map_err(|e| Failure::new(g, "construction succeeds", e.to_string()))?;
            check_eis(g, &s, "path construction")?;
            ensure(
                s.len() >= bound.div_ceil(5),
                g,
                || format!("|S| >= {}", bound.div_ceil(5)),
                || s.len().to_string(),
            )
        };
        let mut out = run_all(&free_trees(1, max_n), |t| check(t, true));
        let streams: Vec<u64> = (0..500).collect();
        out.absorb(run_all(&streams, |&i| {
            let mut rng = instance_rng(ctx.seed, i);
            let n = rand::Rng::gen_range(&mut rng, 1..=max_n);
            let p = rand::Rng::gen_range(&mut rng, 0.0..0.5);
            check(&random_connected_graph(&mut rng, n, p), false)
        }));
        out
    }
}

struct OrderBound;

const CONNECTED_LABELED_MAX: usize = 6;

impl TheoremCheck for OrderBound {
    fn id(&self) -> &'static str {
        "thm2b"
    }
    fn description(&self) -> &'static str {
        "alpha_e <= (n+1)/2 for connected graphs, with equality exactly on full binary trees"
    }
    fn default_max_n(&self) -> usize {
        12
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, FREE_TREE_CAP)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!(
            "free trees n <= {max_n}; labeled connected graphs n <= {}",
            max_n.min(CONNECTED_LABELED_MAX)
        )
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let check = |g: &Graph| -> Result<(), Failure> {
            let n = g.n();
            let ae = ctx.alpha_e(g)?.value;
            let a = ctx.alpha(g)?;
            ensure(ae <= a, g, || format!("alpha_e <= alpha = {a}"), || ae.to_string())?;
            ensure(2 * ae <= n + 1, g, || format!("alpha_e <= {}/2", n + 1), || ae.to_string())?;
            let fb = is_full_binary(g).is_some();
            ensure(
                (2 * ae == n + 1) == fb,
                g,
                || format!("equality iff full binary ({fb})"),
                || format!("alpha_e = {ae}"),
            )
        };
        let mut out = run_all(&free_trees(1, max_n), check);
        let connected: Vec<Graph> = labeled_masks(max_n.min(CONNECTED_LABELED_MAX))
            .into_par_iter()
            .map(|(n, m)| labeled_graph(n, m))
            .filter(is_connected)
            .collect();
        out.absorb(run_all(&connected, check));
        out
    }
}

struct Paths;

impl TheoremCheck for Paths {
    fn id(&self) -> &'static str {
        "thm3i"
    }
    fn description(&self) -> &'static str {
        "alpha_e(P_n) = ceil(2n/5)"
    }
    fn default_max_n(&self) -> usize {
        25
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, 80)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!("P_n for 1 <= n <= {max_n}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let ns: Vec<usize> = (1..=max_n).collect();
        run_all(&ns, |&n| {
            let g = path(n);
            let want = (2 * n).div_ceil(5);
            let got = ctx.alpha_e(&g)?.value;
            ensure(got == want, &g, || want.to_string(), || got.to_string())
        })
    }
}

struct Cycles;

impl TheoremCheck for Cycles {
    fn id(&self) -> &'static str {
        "thm3ii"
    }
    fn description(&self) -> &'static str {
        "alpha_e(C_n) = floor(2n/5) for n >= 5"
    }
    fn default_max_n(&self) -> usize {
        20
    }
    fn max_n_range(&self) -> (usize, usize) {
        (5, 80)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!("C_n for 5 <= n <= {max_n}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let ns: Vec<usize> = (5..=max_n).collect();
        run_all(&ns, |&n| {
            let g = cycle(n);
            let want = 2 * n / 5;
            let got = ctx.alpha_e(&g)?.value;
            ensure(got == want, &g, || want.to_string(), || got.to_string())
        })
    }
}

struct FullBinary;

impl TheoremCheck for FullBinary {
    fn id(&self) -> &'static str {
        "thm3iii"
    }
    fn description(&self) -> &'static str {
        "full binary trees have alpha_e = (n+1)/2 and the leaves are the only maximum set"
    }
    fn default_max_n(&self) -> usize {
        15
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, 19)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!("full binary trees, odd n <= {max_n}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let trees: Vec<Graph> = (1..=max_n)
            .step_by(2)
            .flat_map(|n| enumerate_full_binary(n).unwrap())
            .collect();
        run_all(&trees, |t| {
            let n = t.n();
            let all = ctx.all_max(t)?;
            ensure(all.value * 2 == n + 1, t, || format!("{}", n.div_ceil(2)), || all.value.to_string())?;
            let leaves: VertexSet = t.vertices().filter(|&v| t.degree(v) <= 1).collect();
            ensure(
                all.witnesses == [leaves.clone()],
                t,
                || format!("unique maximum set {leaves}"),
                || format!("{:?}", all.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
            )
        })
    }
}

struct Subcubic;

impl TheoremCheck for Subcubic {
    fn id(&self) -> &'static str {
        "thm4"
    }
    fn description(&self) -> &'static str {
        "subcubic trees have alpha_e >= (2n+8)/13; the two-way construction attains it"
    }
    fn default_max_n(&self) -> usize {
        14
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, FREE_TREE_CAP)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!("free trees of maximum degree <= 3, n <= {max_n} (construction for n >= 4)")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let trees: Vec<Graph> = free_trees(1, max_n)
            .into_iter()
            .filter(|t| t.max_degree() <= 3)
            .collect();
        run_all(&trees, |t| {
            let n = t.n();
            let bound = 2 * n + 8;
            let ae = ctx.alpha_e(t)?.value;
            ensure(13 * ae >= bound, t, || format!("alpha_e >= {bound}/13"), || ae.to_string())?;
            if n >= 4 {
                let s = theorem4_construction(t).map_err(|e| Failure::new(t, "construction succeeds", e.to_string()))?;
                check_eis(t, &s, "subcubic construction")?;
                let need = bound.div_ceil(13);
                ensure(s.len() >= need, t, || format!("|S| >= {need}"), || s.len().to_string())?;
            }
            Ok(())
        })
    }
}

struct Hereditary;

impl TheoremCheck for Hereditary {
    fn id(&self) -> &'static str {
        "thm5"
    }
    fn description(&self) -> &'static str {
        "alpha_e = alpha on every induced subgraph iff no induced K1,3, P5 or bull"
    }
    fn default_max_n(&self) -> usize {
        5
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, 6)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!("all labeled graphs 1 <= n <= {max_n}; witnesses K1,3, P5, bull")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let ch = Characterizer::with_solver(ctx.solver);
        let masks = labeled_masks(max_n);
        let mut out = run_all(&masks, |&(n, m)| {
            let g = labeled_graph(n, m);
            let violation = ch
                .hereditary_violation(&g)
                .map_err(|e| Failure::new(&g, "hereditary check completes", e.to_string()))?;
            let pattern = find_forbidden_induced(&g);
            ensure(
                violation.is_none() == pattern.is_none(),
                &g,
                || "hereditary equality iff {K1,3, P5, bull}-free".to_string(),
                || {
                    format!(
                        "violating subset {:?}, forbidden pattern {:?}",
                        violation.map(|v| v.to_string()),
                        pattern.map(|p| format!("{} on {}", p.pattern, p.vertices))
                    )
                },
            )
        });
        let witnesses = [star(3), path(5), generate(&FamilySpec::Bull).unwrap().0];
        out.absorb(run_all(&witnesses, |g| {
            let ae = ctx.alpha_e(g)?.value;
            let a = ctx.alpha(g)?;
            ensure((ae, a) == (2, 3), g, || "alpha_e = 2 < 3 = alpha".into(), || format!("alpha_e = {ae}, alpha = {a}"))
        }));
        out
    }
}

struct TreeEquality;

impl TheoremCheck for TreeEquality {
    fn id(&self) -> &'static str {
        "thm6"
    }
    fn description(&self) -> &'static str {
        "a tree has alpha_e = alpha iff it belongs to the family T"
    }
    fn default_max_n(&self) -> usize {
        14
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, FREE_TREE_CAP)
    }
    fn parameter_range(&self, max_n: usize, _: u64) -> String {
        format!("free trees n <= {max_n}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let ch = Characterizer::with_solver(ctx.solver);
        run_all(&free_trees(1, max_n), |t| {
            let r = ch
                .tree_equality_routes(t)
                .map_err(|e| Failure::new(t, "both routes complete", e.to_string()))?;
            ensure(r.alpha_e <= r.alpha, t, || format!("alpha_e <= alpha = {}", r.alpha), || r.alpha_e.to_string())?;
            ensure(
                r.consistent(),
                t,
                || format!("membership {:?}", r.membership.as_ref().map(|d| d.to_string())),
                || format!("alpha = {}, alpha_e = {}", r.alpha, r.alpha_e),
            )
        })
    }
}

/// The maximum sets each family member must have, as role names.
fn expected_max_sets(spec: &FamilySpec, d: &FamilyDescriptor) -> (usize, Vec<VertexSet>) {
    let k = d.k;
    let ys = |from: usize, to: usize| (from..=to).map(|i| format!("y{i}")).collect::<Vec<_>>();
    let set = |extra: &[&str], ys: Vec<String>| -> VertexSet {
        let mut names: Vec<&str> = extra.to_vec();
        names.extend(ys.iter().map(String::as_str));
        d.roles(&names).into_iter().collect()
    };
    let (value, mut sets) = match spec {
        FamilySpec::T1(_) => (
            k,
            vec![
                set(&[], ys(1, k)),
                set(&["x1"], ys(2, k)),
                set(&[&format!("x{k}")], ys(1, k - 1)),
            ],
        ),
        FamilySpec::T2(_) => (k + 1, vec![set(&["a"], ys(1, k))]),
        FamilySpec::T3(1) => (3, vec![set(&["y1", "a", "d"], vec![]), set(&["y1", "b", "d"], vec![])]),
        FamilySpec::T3(_) => (k + 2, vec![set(&["b", "d"], ys(1, k))]),
        FamilySpec::T4(_) => (k + 1, vec![set(&["b"], ys(1, k))]),
        FamilySpec::T5(_) => (k + 4, vec![set(&["b", "d", "b'", "d'"], ys(1, k))]),
        FamilySpec::P8 => (4, vec![set(&["b", "d", "b'", "d'"], vec![])]),
        other => unreachable!("no expected sets for {other:?}"),
    };
    sets.sort();
    sets.dedup();
    (value, sets)
}

struct FamilyWitnesses;

impl TheoremCheck for FamilyWitnesses {
    fn id(&self) -> &'static str {
        "lem2"
    }
    fn description(&self) -> &'static str {
        "members of T have alpha_e = alpha with the listed maximum sets"
    }
    fn default_max_n(&self) -> usize {
        6
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, 10)
    }
    fn parameter_range(&self, max_k: usize, _: u64) -> String {
        format!("T1..T5 with k <= {max_k} (T4 from k = 3), P6 = T3(1), P8")
    }
    fn run(&self, ctx: &Ctx, max_k: usize) -> Outcome {
        let mut specs = Vec::new();
        for k in 1..=max_k {
            for level in 1..=5 {
                if level == 4 && k < 3 {
                    continue;
                }
                specs.push(FamilySpec::t_family(level, k).unwrap());
            }
        }
        specs.push(FamilySpec::P8);
        run_all(&specs, |spec| {
            let (g, d) = generate(spec).expect("parameters are in range");
            let (value, sets) = expected_max_sets(spec, &d);
            let all = ctx.all_max(&g)?;
            let a = ctx.alpha(&g)?;
            ensure(
                all.value == value && a == value,
                &g,
                || format!("{d}: alpha_e = alpha = {value}"),
                || format!("alpha_e = {}, alpha = {a}", all.value),
            )?;
            let show = |s: &[VertexSet]| s.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
            ensure(
                all.witnesses == sets,
                &g,
                || format!("{d}: maximum sets {}", show(&sets)),
                || show(&all.witnesses),
            )
        })
    }
}

struct LocalWeight;

impl TheoremCheck for LocalWeight {
    fn id(&self) -> &'static str {
        "lem1"
    }
    fn description(&self) -> &'static str {
        "in subcubic graphs a vertex of degree at most 2 has weight at most 2"
    }
    fn default_max_n(&self) -> usize {
        7
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, LABELED_GRAPH_CAP)
    }
    fn parameter_range(&self, max_n: usize, seed: u64) -> String {
        format!("subcubic labeled graphs n <= {max_n}, 100 random sets each, seed {seed}")
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let results: Vec<Option<Result<(), Failure>>> = labeled_masks(max_n)
            .into_par_iter()
            .map(|(n, m)| {
                let g = labeled_graph(n, m);
                if g.max_degree() > 3 {
                    return None;
                }
                let mut rng = instance_rng(ctx.seed, ((n as u64) << 40) | m);
                Some((0..100).try_for_each(|_| {
                    let s = random_subset(&mut rng, g.vertices());
                    g.vertices().filter(|&u| g.degree(u) <= 2).try_for_each(|u| {
                        let w = WeightProfile::from_distances(all_dists_from(&g, &s, u));
                        ensure(
                            w.cmp_integer(2) != Ordering::Greater,
                            &g,
                            || format!("w(S = {s}) at {u} <= 2"),
                            || w.to_dyadic().to_string(),
                        )
                    })
                }))
            })
            .collect();
        let mut out = Outcome::default();
        for r in results.into_iter().flatten() {
            out.instances += 1;
            if let Err(f) = r {
                out.failures.push(f);
            }
        }
        out
    }
}

struct Oracles;

const ORACLE_SAMPLE_MAX: usize = 7;

fn subset_of_mask(n: usize, mask: u64) -> VertexSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn distances_agree(g: &Graph, s: &VertexSet, u: usize) -> Result<(), Failure> {
    let fast = all_dists_from(g, s, u);
    for (v, &got) in s.iter().zip(&fast) {
        let want = dist_rel(g, s, u, v).expect("v is a member");
        ensure(want == got, g, || format!("dist(S = {s})({u}, {v}) = {want}"), || got.to_string())?;
    }
    Ok(())
}

impl TheoremCheck for Oracles {
    fn id(&self) -> &'static str {
        "oracle"
    }
    fn description(&self) -> &'static str {
        "fast distances and the solver agree with definition-level oracles"
    }
    fn default_max_n(&self) -> usize {
        10
    }
    fn max_n_range(&self) -> (usize, usize) {
        (1, 12)
    }
    fn parameter_range(&self, max_n: usize, seed: u64) -> String {
        format!(
            "every (tree n <= {max_n}, S, u); 1000 random (graph n <= 12, S, u); \
             alpha_e on 300 random graphs n <= {ORACLE_SAMPLE_MAX} against the subset filter; seed {seed}"
        )
    }
    fn run(&self, ctx: &Ctx, max_n: usize) -> Outcome {
        let trees = free_trees(1, max_n);
        let mut out = run_all(&trees, |t| {
            let n = t.n();
            for mask in 0..1u64 << n {
                let s = subset_of_mask(n, mask);
                for u in t.vertices() {
                    distances_agree(t, &s, u)?;
                }
            }
            Ok(())
        });
        out.instances = trees.iter().map(|t| t.n() << t.n()).sum();

        let streams: Vec<u64> = (0..1000).collect();
        out.absorb(run_all(&streams, |&i| {
            let mut rng = instance_rng(ctx.seed, i);
            let g = random_instance(&mut rng, 12);
            let s = random_subset(&mut rng, g.vertices());
            let u = rand::Rng::gen_range(&mut rng, 0..g.n());
            distances_agree(&g, &s, u)
        }));

        let streams: Vec<u64> = (1000..1300).collect();
        out.absorb(run_all(&streams, |&i| {
            let mut rng = instance_rng(ctx.seed, i);
            let g = random_instance(&mut rng, ORACLE_SAMPLE_MAX);
            let n = g.n();
            let brute = (0..1u64 << n)
                .map(|m| subset_of_mask(n, m))
                .filter(|s| is_exponential_independent(&g, s))
                .map(|s| s.len())
                .max()
                .unwrap();
            let got = ctx.alpha_e(&g)?.value;
            ensure(got == brute, &g, || brute.to_string(), || got.to_string())
        }));
        out
    }
}

static CHECKS: &[&dyn TheoremCheck] = &[
    &Heredity,
    &DiameterBound,
    &OrderBound,
    &Paths,
    &Cycles,
    &FullBinary,
    &Subcubic,
    &Hereditary,
    &TreeEquality,
    &LocalWeight,
    &FamilyWitnesses,
    &Oracles,
];

pub fn checks() -> &'static [&'static dyn TheoremCheck] {
    CHECKS
}

pub fn check_by_id(id: &str) -> Option<&'static dyn TheoremCheck> {
    CHECKS.iter().copied().find(|c| c.id() == id)
}
