//! Seeded random instances for the oracle batteries. Everything draws from a
//! caller-supplied ChaCha stream so batteries replay identically.

use rand::Rng;

use crate::hypergraph::{Graph2, Hypergraph3};

/// Random 3-graph on `n` vertices with `m` edges drawn without replacement.
pub fn random_hypergraph(rng: &mut impl Rng, n: u32, m: usize) -> Hypergraph3 {
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push([a, b, c]);
            }
        }
    }
    // Partial Fisher-Yates: the first m slots become the sample.
    let take = m.min(triples.len());
    for i in 0..take {
        let j = rng.gen_range(i as u32..triples.len() as u32) as usize;
        triples.swap(i, j);
    }
    triples.truncate(take);
    Hypergraph3::new(n, triples).expect("sampled triples are valid")
}

/// Random 3-graph with size drawn uniformly from `[0, cap]`.
pub fn random_hypergraph_sized(rng: &mut impl Rng, n: u32, cap: usize) -> Hypergraph3 {
    let m = rng.gen_range(0..=cap as u32) as usize;
    random_hypergraph(rng, n, m)
}

/// Random graph where each pair appears independently.
pub fn random_graph(rng: &mut impl Rng, n: u32, density_percent: u32) -> Graph2 {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..100) < density_percent {
                edges.push([u, v]);
            }
        }
    }
    Graph2::new(n, edges).expect("sampled pairs are valid")
}
