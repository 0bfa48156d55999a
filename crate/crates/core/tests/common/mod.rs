#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use resspec::Graph;

/// Graph on `n` vertices from upper-triangle bits in row order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Arbitrary graph with order in `lo..=hi`.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| from_bits(n, &bits))
    })
}

/// Each possible edge present with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.gen_bool(p))
        .collect();
    from_bits(n, &bits)
}

/// `m` distinct edges chosen uniformly (capped at the number available).
pub fn random_graph_with_edges(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, all).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
