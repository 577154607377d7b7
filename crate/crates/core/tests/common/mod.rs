#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use updom_core::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labeled graph on `n` vertices, one per subset of the `n(n-1)/2` pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Seeded `G(n, p)` graphs with `n` drawn from `sizes` and `p` from `probs`.
pub fn random_graphs(count: usize, sizes: std::ops::RangeInclusive<usize>, probs: &[f64], seed: u64) -> Vec<Graph> {
    use rand::Rng;
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(sizes.clone());
            let p = probs[r.gen_range(0..probs.len())];
            Graph::random(n, p, &mut r)
        })
        .collect()
}

/// Every subset of `0..n`, as sorted vertex lists.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}
