//! Seeded generators for the randomized suites.
//!
//! Every instance draws from its own ChaCha stream, so results do not depend
//! on how instances are scheduled across threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex, VertexSet};

/// Generator for stream `stream` under `seed`.
pub fn instance_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Each of the `n choose 2` edges independently with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A random recursive tree under a random labeling, plus every other edge
/// independently with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut tree = vec![false; n * n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let (a, b) = (labels[u].min(labels[v]), labels[u].max(labels[v]));
        tree[a * n + b] = true;
        edges.push((a, b));
    }
    for b in 1..n {
        for a in 0..b {
            if !tree[a * n + b] && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Each member of `from` independently with probability 1/2.
pub fn random_subset<R: Rng>(rng: &mut R, from: impl IntoIterator<Item = Vertex>) -> VertexSet {
    from.into_iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// Order uniform in `1..=max_n`, edge density uniform in `[0.15, 0.85]`.
pub fn random_instance<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.15..0.85);
    random_graph(rng, n, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    #[test]
    fn streams_are_reproducible() {
        let a = random_instance(&mut instance_rng(7, 3), 10);
        let b = random_instance(&mut instance_rng(7, 3), 10);
        assert_eq!(a, b);
    }

    #[test]
    fn connected_generator() {
        let mut rng = instance_rng(0, 0);
        for n in 1..15 {
            assert!(is_connected(&random_connected_graph(&mut rng, n, 0.1)));
        }
    }
}
