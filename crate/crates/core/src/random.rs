//! Seeded random graphs for the property suites.
//!
//! Every suite derives a ChaCha8 stream from `(seed, trial)` so individual
//! trials replay independently of scheduling.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::triangles::{norm, Edge};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn gnp_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(&mut trial_rng(seed, 0), n, p)
}

/// Rejection-samples `G(n, p)` until `2δ > n`; gives up after `tries`.
pub fn dense_gnp<R: Rng>(rng: &mut R, n: usize, p: f64, tries: usize) -> Option<Graph> {
    (0..tries).map(|_| gnp_with(rng, n, p)).find(|g| g.min_degree().is_ok_and(|d| 2 * d > n))
}

/// A random subset of `pool` of exactly `k` members (or all of `pool`).
pub fn random_subset<R: Rng>(rng: &mut R, pool: &VertexSet, k: usize) -> VertexSet {
    let mut items = pool.to_vec();
    let k = k.min(items.len());
    for i in 0..k {
        let j = rng.gen_range(i..items.len());
        items.swap(i, j);
    }
    items[..k].iter().copied().collect()
}

/// A random triangle walk from `start`: each step keeps one endpoint of the
/// current edge and swaps the other for a common neighbour. Stops early at
/// an edge in no triangle.
pub fn random_triangle_walk<R: Rng>(g: &Graph, rng: &mut R, start: Edge, steps: usize) -> Vec<Edge> {
    let mut edges = vec![norm(start)];
    for _ in 0..steps {
        let (a, b) = *edges.last().unwrap();
        let common = (g.neighbours(a) & g.neighbours(b)).to_vec();
        let Some(&w) = common.choose(rng) else { break };
        let keep = if rng.gen_bool(0.5) { a } else { b };
        edges.push(norm((keep, w)));
    }
    edges
}
