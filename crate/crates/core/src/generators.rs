//! Standard graph families and a seeded random bounded-degree generator.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(n: usize, d: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, d, edges).expect("generator respects its own degree bound")
}

/// Path on `n` vertices, degree bound 2.
pub fn path(n: usize) -> Graph {
    build(n, 2, (1..n).map(|v| (v - 1, v)).collect())
}

/// Cycle on `n >= 3` vertices, degree bound 2.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    build(n, 2, (0..n).map(|v| (v, (v + 1) % n)).collect())
}

/// Complete graph, degree bound `n - 1`.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, n.saturating_sub(1), edges)
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    build(a + b, a.max(b), edges)
}

/// `rows × cols` grid, degree bound 4.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    build(rows * cols, 4, edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, 3, edges)
}

/// Simple graph on `n` vertices from `attempts` uniformly drawn vertex
/// pairs; a pair is kept when it is new, not a loop, and both endpoints
/// still have degree below `d`. Deterministic in `seed`.
pub fn random_bounded_degree(n: usize, d: usize, attempts: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = alloc::vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            if u == v || degree[u] >= d || degree[v] >= d || edges.contains(&(u, v)) {
                continue;
            }
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    build(n, d, edges)
}
