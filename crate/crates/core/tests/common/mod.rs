//! Shared helpers for the integration tests.

use mlbp_core::{LabelSet, LabeledGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random labelled graph with `1..=max_n` vertices, `1..=max_q` labels,
/// and each vertex pair kept with probability `density`. Deterministic in
/// `seed`.
pub fn random_graph(seed: u64, max_n: usize, max_q: usize, density: f64) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let q = rng.gen_range(1..=max_q);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v, rng.gen_range(0..q)));
            }
        }
    }
    LabeledGraph::build(n, q, &edges).expect("generated edges are valid")
}

/// Random label subset, each label kept with probability `keep`.
#[allow(dead_code)]
pub fn random_label_set(graph: &LabeledGraph, seed: u64, keep: f64) -> LabelSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut labels = LabelSet::empty(graph.num_labels());
    for label in 0..graph.num_labels() {
        if rng.gen_bool(keep) {
            labels.insert(label);
        }
    }
    labels
}

/// Renumbers partition ids by first occurrence, so two id vectors agree
/// exactly when they induce the same partition.
#[allow(dead_code)]
pub fn canonical_partition(ids: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    let mut next = 0usize;
    ids.iter()
        .map(|&id| {
            *map.entry(id).or_insert_with(|| {
                let fresh = next;
                next += 1;
                fresh
            })
        })
        .collect()
}

/// Densities cycled through by seed-driven test loops.
#[allow(dead_code)]
pub const DENSITIES: [f64; 4] = [0.1, 0.3, 0.6, 0.95];
