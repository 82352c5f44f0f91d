//! Finite multigraphs with a declared degree bound.
//!
//! Loops and parallel edges are kept in the edge list (Schreier graphs carry
//! both), but every vertex-adjacency notion in the crate, boundaries and
//! components included, only looks at the underlying simple graph.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Sorted, duplicate-free list of vertex identifiers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Membership table over `0..n`.
    pub(crate) fn indicator(&self, n: usize) -> Vec<bool> {
        let mut mark = vec![false; n];
        for v in self.iter() {
            mark[v] = true;
        }
        mark
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Immutable finite multigraph on vertices `0..n` whose degrees respect a
/// declared bound `d`. A loop counts once towards the degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    d: usize,
    /// Normalized `u <= v`, sorted.
    edges: Vec<(usize, usize)>,
    /// Underlying simple adjacency: sorted, no loops, no repeats.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalizing every edge to `u <= v` and sorting the
    /// edge list.
    pub fn new(n: usize, d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        let mut degree = vec![0usize; n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            let (u, v) = if u <= v { (u, v) } else { (v, u) };
            degree[u] += 1;
            if u != v {
                degree[v] += 1;
            }
            list.push((u, v));
        }
        if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, &x)| x > d) {
            return Err(Error::DegreeBound { vertex, degree, bound: d });
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Ok(Self { n, d, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_bound(&self) -> usize {
        self.d
    }

    /// Edge multiset in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Distinct non-loop neighbors of `v`, sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Multigraph degree: loops and parallel edges count once each.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v && a != b))
            .sum()
    }

    pub fn max_simple_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of distinct non-loop edges.
    pub fn simple_edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.as_slice().last() {
            Some(&v) if v >= self.n => Err(Error::InvalidVertex { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Connected components of the whole graph.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of_mark(&vec![true; self.n])
    }

    /// Components of the subgraph induced on the vertices with `alive[v]`,
    /// ordered by smallest member.
    pub(crate) fn components_of_mark(&self, alive: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if !alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if alive[u] && !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    /// Size of the component of `v` in the subgraph induced on `alive`,
    /// giving up once more than `limit` vertices are found.
    pub(crate) fn component_size_capped(&self, alive: &[bool], v: usize, limit: usize) -> usize {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(x) = stack.pop() {
            for &u in &self.adj[x] {
                if alive[u] && seen.insert(u) {
                    if seen.len() > limit {
                        return seen.len();
                    }
                    stack.push(u);
                }
            }
        }
        seen.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Inner vertex boundary: members of `e` with a neighbor outside `e`.
/// Loops never contribute.
pub fn boundary(g: &Graph, e: &VertexSet) -> Result<VertexSet> {
    g.check_set(e)?;
    let inside = e.indicator(g.n());
    Ok(VertexSet(
        e.iter()
            .filter(|&v| g.neighbors(v).iter().any(|&u| !inside[u]))
            .collect(),
    ))
}

/// Components of `g − y`, ordered by smallest member.
pub fn components_after_removal(g: &Graph, y: &VertexSet) -> Result<Vec<VertexSet>> {
    g.check_set(y)?;
    let removed = y.indicator(g.n());
    let alive: Vec<bool> = removed.iter().map(|r| !r).collect();
    Ok(g.components_of_mark(&alive))
}

/// Subgraph induced on `s`, relabeled to `0..|s|` in increasing order. The
/// returned vector maps new identifiers to original ones.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    g.check_set(s)?;
    let mut relabel = vec![usize::MAX; g.n()];
    for (i, v) in s.iter().enumerate() {
        relabel[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
        .map(|&(u, v)| (relabel[u], relabel[v]));
    let h = Graph::new(s.len(), g.degree_bound(), edges)?;
    Ok((h, s.as_slice().to_vec()))
}
