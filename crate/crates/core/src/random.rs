//! Seeded random forests: uniform labeled trees from Prüfer sequences,
//! split by deleting random edges.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::forest::Forest;

/// Edges of the labeled tree on `0..n` encoded by `code` (length `n - 2`).
pub fn prufer_decode(code: &[usize]) -> Vec<(usize, usize)> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Uniformly random labeled tree on `n >= 2` vertices.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Forest {
    assert!(n >= 2);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let labels: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    Forest::from_edges(labels, &prufer_decode(&code)).expect("Prüfer trees are trees")
}

/// Random tree with at most `max_edges` edges, with a random subset of at
/// most half its edges deleted.
pub fn random_forest<R: Rng>(max_edges: usize, rng: &mut R) -> Forest {
    let n = rng.gen_range(2..=max_edges.max(1) + 1);
    let tree = random_tree(n, rng);
    let m = tree.num_edges();
    let drop = rng.gen_range(0..=m / 2);
    let dropped: Vec<usize> = sample(rng, m, drop).into_vec();
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !dropped.contains(i))
        .map(|(_, &e)| e)
        .collect();
    Forest::from_edges(tree.labels().to_vec(), &edges).expect("subforest")
}

/// `count` forests from a fixed seed.
pub fn random_corpus(count: usize, max_edges: usize, seed: u64) -> Vec<Forest> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_forest(max_edges, &mut rng))
        .collect()
}
