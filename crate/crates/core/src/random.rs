//! Seeded random hypergraphs for property checks and the `generate` command.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::label::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub vertices: usize,
    pub edges: usize,
    pub max_size: usize,
    pub seed: u64,
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Draws `spec.edges` distinct hyperedges, each uniform among the non-empty
/// subsets of size at most `spec.max_size`. Vertices are `"0"`..`"n-1"`.
pub fn random_hypergraph(spec: &RandomSpec) -> Result<Hypergraph> {
    let RandomSpec {
        vertices: n,
        edges: m,
        max_size,
        seed,
    } = *spec;
    if n == 0 {
        return Err(Error::InvalidParameters("vertex count must be positive".into()));
    }
    if max_size == 0 {
        return Err(Error::InvalidParameters("max edge size must be positive".into()));
    }
    let max_size = max_size.min(n);
    let weights: Vec<u128> = (1..=max_size).map(|s| binomial(n, s)).collect();
    let total: u128 = weights.iter().sum();
    if (m as u128) > total {
        return Err(Error::InvalidParameters(format!(
            "only {total} distinct hyperedges of size <= {max_size} exist on {n} vertices"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    while edges.len() < m {
        let mut pick = rng.random_range(0..total);
        let mut size = 1;
        for (s, &w) in weights.iter().enumerate() {
            if pick < w {
                size = s + 1;
                break;
            }
            pick -= w;
        }
        let mut edge = index::sample(&mut rng, n, size).into_vec();
        edge.sort_unstable();
        if !edges.contains(&edge) {
            edges.push(edge);
        }
    }

    let labels: Vec<Label> = (0..n).map(Label::from).collect();
    Hypergraph::from_edge_sets(
        labels.clone(),
        edges
            .iter()
            .map(|e| e.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>()),
    )
}

/// A non-empty uniformly random subset of `0..n`.
pub fn random_subset(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    loop {
        let subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        if !subset.is_empty() {
            return subset;
        }
    }
}
