//! Backtracking hypergraph isomorphism for desk-scale instances.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_ISO_BOUND: usize = 12;
pub const ISO_BOUND_ENV: &str = "HYPERINC_ISO_BOUND";
const HARD_LIMIT: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoConfig {
    pub max_vertices: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig {
            max_vertices: DEFAULT_ISO_BOUND,
        }
    }
}

impl IsoConfig {
    /// Default bound, overridden by `HYPERINC_ISO_BOUND` when it parses.
    pub fn from_env() -> Self {
        std::env::var(ISO_BOUND_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(|max_vertices| IsoConfig { max_vertices })
            .unwrap_or_default()
    }
}

struct Prepared {
    masks: Vec<u128>,
    invariants: Vec<(usize, Vec<usize>)>,
    co_degree: Vec<Vec<usize>>,
}

fn prepare(h: &Hypergraph) -> Prepared {
    let n = h.vertex_count();
    let masks: Vec<u128> = h
        .edges()
        .map(|e| e.iter().fold(0u128, |m, &v| m | (1u128 << v)))
        .collect();
    let mut invariants = vec![(0usize, Vec::new()); n];
    let mut co_degree = vec![vec![0usize; n]; n];
    for e in h.edges() {
        for &u in e {
            invariants[u].0 += 1;
            invariants[u].1.push(e.len());
            for &v in e {
                co_degree[u][v] += 1;
            }
        }
    }
    for inv in &mut invariants {
        inv.1.sort_unstable();
    }
    Prepared {
        masks,
        invariants,
        co_degree,
    }
}

/// Looks for a bijection `f: V(h1) → V(h2)` (as vertex indices) carrying the
/// edge set of `h1` exactly onto the edge set of `h2`.
pub fn are_isomorphic(h1: &Hypergraph, h2: &Hypergraph, config: &IsoConfig) -> Result<Option<Vec<usize>>> {
    let bound = config.max_vertices.min(HARD_LIMIT);
    let size = h1.vertex_count().max(h2.vertex_count());
    if size > bound {
        return Err(Error::InstanceTooLarge { size, bound });
    }
    if h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return Ok(None);
    }
    let mut sizes1: Vec<usize> = h1.edges().map(<[usize]>::len).collect();
    let mut sizes2: Vec<usize> = h2.edges().map(<[usize]>::len).collect();
    sizes1.sort_unstable();
    sizes2.sort_unstable();
    if sizes1 != sizes2 {
        return Ok(None);
    }

    let p1 = prepare(h1);
    let p2 = prepare(h2);
    let mut inv1 = p1.invariants.clone();
    let mut inv2 = p2.invariants.clone();
    inv1.sort();
    inv2.sort();
    if inv1 != inv2 {
        return Ok(None);
    }

    let n = h1.vertex_count();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&v| p1.invariants[u] == p2.invariants[v]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (candidates[u].len(), u));

    let target: HashSet<u128> = p2.masks.iter().copied().collect();
    let mut search = Search {
        p1: &p1,
        p2: &p2,
        candidates: &candidates,
        order: &order,
        target: &target,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(if search.extend(0) { Some(search.mapping) } else { None })
}

struct Search<'a> {
    p1: &'a Prepared,
    p2: &'a Prepared,
    candidates: &'a [Vec<usize>],
    order: &'a [usize],
    target: &'a HashSet<u128>,
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.p1.masks.iter().all(|&m| self.target.contains(&self.image(m)));
        }
        let u = self.order[depth];
        for &v in &self.candidates[u] {
            if self.used[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.p1.co_degree[u][w] == self.p2.co_degree[v][self.mapping[w]]);
            if !consistent {
                continue;
            }
            self.mapping[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[v] = false;
            self.mapping[u] = usize::MAX;
        }
        false
    }

    fn image(&self, mask: u128) -> u128 {
        let mut out = 0u128;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            out |= 1u128 << self.mapping[v];
            rest &= rest - 1;
        }
        out
    }
}
