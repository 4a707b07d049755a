use std::collections::BTreeSet;

use expind::graph::{
    ahu_canonical, bfs_distances, encode_graph6, enumerate_free_trees, parse_graph6, tree_isomorphism,
    ExtendedDist, Graph, Vertex, VertexSet,
};
use expind::solver::{ExponentialIndependent, Independent, SetRule, Solver};
use expind::weights::{all_dists_from, dist_rel, is_exponential_independent, weight, Dyadic, WeightProfile};
use itertools::Itertools;
use proptest::collection::vec;
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    let edges: Vec<_> = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    Graph::new(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b)))
}

fn subset_of(n: usize, bits: &[bool]) -> VertexSet {
    (0..n).filter(|&v| bits[v]).collect()
}

/// A graph, a vertex subset and a vertex.
fn instances(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, Vertex)> {
    graphs(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), vec(any::<bool>(), n), 0..n).prop_map(move |(g, b, u)| (g, subset_of(n, &b), u))
    })
}

/// Drops edges in order whenever an endpoint already has degree 3.
fn subcubic(g: &Graph) -> Graph {
    let mut deg = vec![0; g.n()];
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if deg[u] < 3 && deg[v] < 3 {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(g.n(), &edges).unwrap()
}

fn prufer_tree(n: usize, code: &[usize]) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

fn trees(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        vec(0..n, n.saturating_sub(2)).prop_map(move |code| prufer_tree(n, &code))
    })
}

fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && (0..a.n())
            .permutations(a.n())
            .any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

fn brute_alpha(g: &Graph, rule: &dyn SetRule) -> usize {
    let n = g.n();
    (0..1u32 << n)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<VertexSet>())
        .filter(|s| rule.certify(g, s))
        .map(|s| s.len())
        .max()
        .unwrap()
}

#[test]
fn prufer_codes_reach_exactly_the_enumerated_trees() {
    for n in 1..=8 {
        let expected: BTreeSet<String> = enumerate_free_trees(n)
            .unwrap()
            .map(|t| ahu_canonical(&t).unwrap())
            .collect();
        let mut seen = BTreeSet::new();
        let len = n.saturating_sub(2);
        for code in (0..len).map(|_| 0..n).multi_cartesian_product() {
            seen.insert(ahu_canonical(&prufer_tree(n, &code)).unwrap());
        }
        if len == 0 {
            seen.insert(ahu_canonical(&prufer_tree(n, &[])).unwrap());
        }
        assert_eq!(seen, expected, "n = {n}");
    }
}

/// Whether `u` is the root of a full binary subtree of `g` whose leaves are
/// exactly the members of `s` it contains.
fn full_binary_witness(g: &Graph, s: &VertexSet, u: Vertex) -> bool {
    let edges: Vec<_> = g.edges().collect();
    (0..1u32 << edges.len()).any(|mask| {
        let chosen: Vec<_> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut verts: BTreeSet<Vertex> = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.insert(u);
        if chosen.len() + 1 != verts.len() {
            return false;
        }
        let vs: Vec<_> = verts.iter().copied().collect();
        let Ok(t) = Graph::new(
            vs.len(),
            &chosen
                .iter()
                .map(|&(a, b)| (vs.binary_search(&a).unwrap(), vs.binary_search(&b).unwrap()))
                .collect::<Vec<_>>(),
        ) else {
            return false;
        };
        if !expind::graph::is_tree(&t) {
            return false;
        }
        let root = vs.binary_search(&u).unwrap();
        t.vertices().all(|v| {
            let children = t.degree(v) - usize::from(v != root);
            (children == 0 || children == 2) && (children == 0) == s.contains(vs[v])
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ahu_matches_brute_force_isomorphism(a in trees(7), b in trees(7)) {
        let same = ahu_canonical(&a).unwrap() == ahu_canonical(&b).unwrap();
        prop_assert_eq!(same, isomorphic_brute(&a, &b));
        match tree_isomorphism(&a, &b).unwrap() {
            Some(map) => {
                prop_assert!(same);
                for (u, v) in a.edges() {
                    prop_assert!(b.has_edge(map[u], map[v]));
                }
            }
            None => prop_assert!(!same),
        }
    }

    #[test]
    fn relabeled_trees_share_their_code(t in trees(12), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..t.n()).collect();
        let mut x = seed;
        for i in (1..perm.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(ahu_canonical(&t).unwrap(), ahu_canonical(&t.relabel(&perm)).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graphs(6)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_large(g in (60..70usize).prop_flat_map(|n| vec(prop::bool::weighted(0.05), n * (n - 1) / 2)
        .prop_map(move |b| graph_from_bits(n, &b)))) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn triangle_inequality(g in graphs(9)) {
        let d: Vec<Vec<ExtendedDist>> = g
            .vertices()
            .map(|u| bfs_distances(&g, u, &VertexSet::new()).unwrap())
            .collect();
        for (u, v, w) in g.vertices().cartesian_product(g.vertices()).cartesian_product(g.vertices()).map(|((a, b), c)| (a, b, c)) {
            if let (Some(x), Some(y)) = (d[u][v].finite(), d[v][w].finite()) {
                prop_assert!(d[u][w] <= ExtendedDist::Finite(x + y));
            }
            prop_assert_eq!(d[u][v], d[v][u]);
        }
    }

    #[test]
    fn blocked_bfs_matches_definition((g, s, u) in instances(10)) {
        let fast = all_dists_from(&g, &s, u);
        for (v, d) in s.iter().zip(fast) {
            prop_assert_eq!(d, dist_rel(&g, &s, u, v).unwrap());
        }
    }

    #[test]
    fn profile_comparison_is_exact((g, s, u) in instances(10), k in 0u64..4) {
        let exact = weight(&g, &s, u).weight;
        let profile = WeightProfile::from_distances(all_dists_from(&g, &s, u));
        prop_assert_eq!(profile.to_dyadic(), exact.clone());
        prop_assert_eq!(profile.cmp_integer(k), exact.cmp(&Dyadic::from_integer(k)));
    }

    #[test]
    fn subsets_of_maximum_sets_stay_independent(g in graphs(9), bits in vec(any::<bool>(), 9)) {
        let best = Solver::default().solve(&ExponentialIndependent, &g).unwrap();
        let sub: VertexSet = best.witness.iter().enumerate().filter(|(i, _)| bits[*i]).map(|(_, v)| v).collect();
        prop_assert!(is_exponential_independent(&g, &sub));
    }

    #[test]
    fn induced_subgraphs_never_gain_weight((g, s, u) in instances(9), keep in vec(any::<bool>(), 9)) {
        // keep u and all of s, drop some other vertices
        let kept: VertexSet = g.vertices().filter(|&v| v == u || s.contains(v) || keep[v]).collect();
        let (h, back) = g.induced_subgraph(&kept).unwrap();
        let pos = |v: Vertex| back.iter().position(|&b| b == v).unwrap();
        let s_h: VertexSet = s.iter().map(pos).collect();
        prop_assert!(weight(&h, &s_h, pos(u)).weight <= weight(&g, &s, u).weight);
    }

    #[test]
    fn pruned_search_agrees_with_exhaustive(g in graphs(9)) {
        let unpruned = Solver { pruning: false, ..Solver::default() };
        for rule in [&ExponentialIndependent as &dyn SetRule, &Independent] {
            let a = Solver::default().solve(rule, &g).unwrap();
            let b = unpruned.solve(rule, &g).unwrap();
            prop_assert_eq!(a.value, b.value);
            prop_assert_eq!(&a.witness, &b.witness);
            let all_a = Solver::default().all_max(rule, &g).unwrap();
            let all_b = unpruned.all_max(rule, &g).unwrap();
            prop_assert_eq!(all_a.witnesses, all_b.witnesses);
        }
    }

    #[test]
    fn solver_matches_subset_filter(g in graphs(8)) {
        let ae = Solver::default().solve(&ExponentialIndependent, &g).unwrap().value;
        let a = Solver::default().solve(&Independent, &g).unwrap().value;
        prop_assert_eq!(ae, brute_alpha(&g, &ExponentialIndependent));
        prop_assert_eq!(a, brute_alpha(&g, &Independent));
        prop_assert!(ae <= a);
    }

    #[test]
    fn low_degree_weight_is_at_most_two((g, s, u) in instances(7)) {
        let g = subcubic(&g);
        prop_assume!(g.degree(u) <= 2);
        let w = weight(&g, &s, u).weight;
        prop_assert!(w <= Dyadic::from_integer(2));
        prop_assert_eq!(w == Dyadic::from_integer(2), full_binary_witness(&g, &s, u));
    }
}
