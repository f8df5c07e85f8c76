//! Seeded synthetic graph generators.
//!
//! All generators use ChaCha8 so a seed reproduces the same graph on every
//! platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Erdős–Rényi `G(n, p)`, undirected or directed, no loops.
pub fn erdos_renyi<T: Scalar>(n: usize, p: f64, directed: bool, seed: u64) -> Result<Graph<T>> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        let start = if directed { 0 } else { u + 1 };
        for v in start..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v, T::one()));
            }
        }
    }
    Graph::from_edges(n, edges, directed, false)
}

/// Connected undirected graph: a random spanning tree overlaid with
/// `G(n, p)` edges.
pub fn connected_random<T: Scalar>(n: usize, p: f64, seed: u64) -> Result<Graph<T>> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        edges.push((order[k], parent, T::one()));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, T::one()));
            }
        }
    }
    // duplicates with tree edges must not double the weight
    let mut edges: Vec<_> = edges
        .into_iter()
        .map(|(u, v, w)| (u.min(v), u.max(v), w))
        .collect();
    edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    edges.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    Graph::from_edges(n, edges, false, false)
}

/// Strongly connected digraph: a random Hamiltonian cycle overlaid with
/// directed `G(n, p)` edges.
pub fn strongly_connected_random<T: Scalar>(n: usize, p: f64, seed: u64) -> Result<Graph<T>> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    if n > 1 {
        for k in 0..n {
            edges.push((order[k], order[(k + 1) % n]));
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (u, v, T::one())), true, false)
}

/// Undirected cycle on `n >= 3` nodes.
pub fn ring<T: Scalar>(n: usize) -> Result<Graph<T>> {
    if n < 3 {
        return Err(Error::Validation("a ring needs at least 3 nodes".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, T::one())), false, false)
}

/// Undirected star: node 0 joined to `leaves` other nodes.
pub fn star<T: Scalar>(leaves: usize) -> Result<Graph<T>> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i, T::one())), false, false)
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Validation(format!("edge probability {p} outside [0, 1]")))
    }
}
