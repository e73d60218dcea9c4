use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

const MAX_ATTEMPTS: usize = 100_000;

/// Simple `k`-regular graph on `n` vertices from the pairing model,
/// rejecting pairings with loops or repeated edges. Connectivity is not
/// guaranteed. The same seed always yields the same graph.
pub fn random_k_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if !(n * k).is_multiple_of(2) {
        return Err(Error::Sampler(format!("n * k = {} is odd", n * k)));
    }
    if n <= k {
        return Err(Error::Sampler(format!("need n > k, got n = {n}, k = {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges = HashSet::with_capacity(n * k / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !edges.insert((u, v)) {
                continue 'attempt;
            }
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.sort_unstable();
        return Graph::new(n, edges);
    }
    Err(Error::Sampler(format!("no simple pairing after {MAX_ATTEMPTS} attempts")))
}
