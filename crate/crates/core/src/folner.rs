//! Følner witnesses: nonempty sets `E` with `|E| <= k` and
//! `|∂E| <= eps·|E|`, and the amenability profile `eps ↦ k` of a graph
//! together with all of its induced subgraphs.
//!
//! Only connected sets are searched. If `|∂E| <= eps·|E|` then some
//! component `E'` of `g[E]` satisfies `|∂E'| <= eps·|E'|`, because the
//! boundary of `E` is the disjoint union of the boundaries of its
//! components.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, Mask};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, RatioTable, Rational};
use crate::{Error, Result, MAX_MASK_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FolnerWitness {
    pub e: VertexSet,
    pub k: usize,
    /// `|∂E| / |E|` in the graph the witness was found in.
    pub eps_achieved: Rational,
}

/// Calls `visit` once for every connected vertex set of size `1..=limit`
/// inside the subgraph induced on `alive` whose smallest member is in
/// `roots`. Sets are produced by ESU-style growth: each set is reached from
/// its smallest vertex, extending only through vertices that are new
/// exclusive neighbors, so no set is produced twice.
pub(crate) fn for_each_connected<F>(g: &Graph, alive: &[bool], roots: &[usize], limit: usize, mut visit: F)
where
    F: FnMut(&[usize], &[bool]) -> ControlFlow<()>,
{
    struct Walk<'a, F> {
        g: &'a Graph,
        alive: &'a [bool],
        limit: usize,
        root: usize,
        in_sub: Vec<bool>,
        closed: Vec<u32>,
        sub: Vec<usize>,
        visit: F,
    }

    impl<F: FnMut(&[usize], &[bool]) -> ControlFlow<()>> Walk<'_, F> {
        fn close(&mut self, w: usize, delta: i32) {
            self.closed[w] = self.closed[w].wrapping_add_signed(delta);
            for &u in self.g.neighbors(w) {
                self.closed[u] = self.closed[u].wrapping_add_signed(delta);
            }
        }

        fn push(&mut self, w: usize) {
            self.sub.push(w);
            self.in_sub[w] = true;
            self.close(w, 1);
        }

        fn pop(&mut self) {
            let w = self.sub.pop().expect("nonempty");
            self.in_sub[w] = false;
            self.close(w, -1);
        }

        fn extend(&mut self, mut ext: Vec<usize>) -> ControlFlow<()> {
            (self.visit)(&self.sub, &self.in_sub)?;
            if self.sub.len() == self.limit {
                return ControlFlow::Continue(());
            }
            while let Some(w) = ext.pop() {
                let mut next = ext.clone();
                next.extend(
                    self.g
                        .neighbors(w)
                        .iter()
                        .copied()
                        .filter(|&u| u > self.root && self.alive[u] && self.closed[u] == 0),
                );
                self.push(w);
                let flow = self.extend(next);
                self.pop();
                flow?;
            }
            ControlFlow::Continue(())
        }
    }

    if limit == 0 {
        return;
    }
    let n = g.n();
    let mut walk = Walk {
        g,
        alive,
        limit,
        root: 0,
        in_sub: vec![false; n],
        closed: vec![0; n],
        sub: Vec::with_capacity(limit),
        visit: &mut visit,
    };
    for &root in roots {
        if !alive[root] {
            continue;
        }
        walk.root = root;
        walk.push(root);
        let ext: Vec<usize> = g.neighbors(root).iter().copied().filter(|&u| u > root && alive[u]).collect();
        let flow = walk.extend(ext);
        walk.pop();
        if flow.is_break() {
            return;
        }
    }
}

fn boundary_count(g: &Graph, alive: &[bool], sub: &[usize], in_sub: &[bool]) -> usize {
    sub.iter()
        .filter(|&&x| g.neighbors(x).iter().any(|&u| alive[u] && !in_sub[u]))
        .count()
}

/// Search candidate under the selection rule: smallest `|∂E|/|E|`, then
/// smallest `|E|`, then lexicographically first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub(crate) set: Vec<usize>,
    pub(crate) boundary: usize,
}

impl Candidate {
    fn key_cmp(&self, b: usize, s: usize) -> Ordering {
        let (b0, s0) = (self.boundary, self.set.len());
        (b0 * s).cmp(&(b * s0)).then(s0.cmp(&s))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key_cmp(other.boundary, other.set.len()).then_with(|| self.set.cmp(&other.set))
    }
}

/// Best Følner candidate among connected sets rooted in `roots` inside the
/// subgraph induced on `alive`.
pub(crate) fn best_candidate(
    g: &Graph,
    alive: &[bool],
    roots: &[usize],
    table: &RatioTable,
    k: usize,
) -> Option<Candidate> {
    let mut best: Option<Candidate> = None;
    for_each_connected(g, alive, roots, k, |sub, in_sub| {
        let b = boundary_count(g, alive, sub, in_sub);
        let s = sub.len();
        if !table.accepts(b, s) {
            return ControlFlow::Continue(());
        }
        let replace = match &best {
            None => true,
            Some(cur) => match cur.key_cmp(b, s) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let mut sorted = sub.to_vec();
                    sorted.sort_unstable();
                    sorted < cur.set
                }
            },
        };
        if replace {
            let mut set = sub.to_vec();
            set.sort_unstable();
            best = Some(Candidate { set, boundary: b });
        }
        ControlFlow::Continue(())
    });
    best
}

pub(crate) fn validate(g: &Graph, eps: &Rational, k: usize) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::NoVertices);
    }
    if eps.is_negative() {
        return Err(Error::NegativeEps);
    }
    if k == 0 {
        return Err(Error::InvalidK);
    }
    Ok(())
}

/// Følner witness at `(eps, k)` chosen by the selection rule, or `None`
/// when no set of at most `k` vertices has `|∂E| <= eps·|E|`.
pub fn find_folner_set(g: &Graph, eps: &Rational, k: usize) -> Result<Option<FolnerWitness>> {
    validate(g, eps, k)?;
    let limit = k.min(g.n());
    let table = RatioTable::new(eps, limit);
    let alive = vec![true; g.n()];
    let roots: Vec<usize> = (0..g.n()).collect();
    Ok(best_candidate(g, &alive, &roots, &table, limit).map(|c| FolnerWitness {
        eps_achieved: rational::ratio(c.boundary as i64, c.set.len() as i64),
        e: VertexSet::from_sorted(c.set),
        k,
    }))
}

/// Exact amenability profile at one `eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlaProfile {
    pub eps: Rational,
    /// Smallest `k` such that every nonempty induced subgraph has a
    /// witness at `(eps, k)`.
    pub k: usize,
    /// An induced subgraph (as a vertex set of `g`) that needs exactly `k`.
    pub worst: VertexSet,
}

/// Certified bracket `lo <= k <= hi` on the profile for graphs too large to
/// scan exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlaBounds {
    pub eps: Rational,
    pub lo: usize,
    pub hi: usize,
    /// Sampled induced subgraph whose own requirement is `lo`.
    pub lo_witness: VertexSet,
    pub samples: usize,
}

/// Connected-set growth on bitmasks; same scheme as [`for_each_connected`].
fn for_each_connected_mask<F>(adj: &[Mask], alive: Mask, limit: usize, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(Mask) -> ControlFlow<()>,
{
    #[allow(clippy::too_many_arguments)]
    fn extend<F: FnMut(Mask) -> ControlFlow<()>>(
        adj: &[Mask],
        alive: Mask,
        above: Mask,
        limit: usize,
        sub: Mask,
        mut ext: Mask,
        closed: Mask,
        visit: &mut F,
    ) -> ControlFlow<()> {
        visit(sub)?;
        if sub.count_ones() as usize == limit {
            return ControlFlow::Continue(());
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let fresh = adj[w] & alive & above & !closed;
            extend(adj, alive, above, limit, sub | 1 << w, ext | fresh, closed | adj[w], visit)?;
        }
        ControlFlow::Continue(())
    }

    if limit == 0 {
        return ControlFlow::Continue(());
    }
    for root in bits::members(alive) {
        let above = !0u64 << (root + 1);
        let bit = 1 << root;
        extend(adj, alive, above, limit, bit, adj[root] & alive & above, adj[root] | bit, visit)?;
    }
    ControlFlow::Continue(())
}

/// Smallest witness size needed by the subgraph induced on `s`, provided it
/// exceeds `floor`; `None` when some witness of size at most `floor` exists.
fn requirement_above(adj: &[Mask], s: Mask, table: &RatioTable, floor: usize) -> Option<usize> {
    let smallest_component = bits::components(adj, s)
        .into_iter()
        .map(|c| c.count_ones() as usize)
        .min()
        .expect("nonempty");
    if smallest_component <= floor {
        return None;
    }
    let mut need = smallest_component;
    let flow = for_each_connected_mask(adj, s, smallest_component - 1, &mut |e| {
        let size = e.count_ones() as usize;
        if size < need && table.accepts(bits::boundary(adj, s, e).count_ones() as usize, size) {
            need = size;
            if need <= floor {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    (flow.is_continue() && need > floor).then_some(need)
}

/// Smallest `k` such that every nonempty induced subgraph of `g` has a
/// Følner witness at `(eps, k)`, by scanning all `2^n − 1` induced
/// subgraphs. Refuses graphs above `cap` vertices.
pub fn ula_profile(g: &Graph, eps: &Rational, cap: usize) -> Result<UlaProfile> {
    validate(g, eps, 1)?;
    let n = g.n();
    let cap = cap.min(MAX_MASK_VERTICES);
    if n > cap {
        return Err(Error::SizeLimit { n, cap });
    }
    let adj = bits::adjacency_masks(g);
    let table = RatioTable::new(eps, n);
    let mut k = 0;
    let mut worst: Mask = 0;
    for s in 1..=bits::full(n) {
        if let Some(need) = requirement_above(&adj, s, &table, k) {
            k = need;
            worst = s;
        }
    }
    Ok(UlaProfile { eps: eps.clone(), k, worst: VertexSet::from_sorted(bits::to_vec(worst)) })
}

/// Smallest witness size for the subgraph of `g` induced on `alive`.
pub(crate) fn requirement(g: &Graph, alive: &[bool], table: &RatioTable) -> usize {
    let comps = g.components_of_mark(alive);
    let smallest = comps.iter().map(VertexSet::len).min().expect("nonempty");
    let mut need = smallest;
    let roots: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    for_each_connected(g, alive, &roots, smallest - 1, |sub, in_sub| {
        if sub.len() < need && table.accepts(boundary_count(g, alive, sub, in_sub), sub.len()) {
            need = sub.len();
            if need == 1 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    need
}

/// Bracket on the profile for large graphs. The upper end is the largest
/// component of `g` (every induced subgraph's smallest component fits) or 1
/// when `eps >= 1`; the lower end is the largest requirement among `g`
/// itself and `samples` seeded induced subgraphs (random vertex subsets and
/// balls around random vertices).
pub fn ula_profile_approx(g: &Graph, eps: &Rational, samples: usize, seed: u64) -> Result<UlaBounds> {
    validate(g, eps, 1)?;
    let n = g.n();
    let table = RatioTable::new(eps, n);
    let hi = if table.accepts(1, 1) {
        1
    } else {
        g.components().iter().map(VertexSet::len).max().expect("nonempty")
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lo = requirement(g, &vec![true; n], &table);
    let mut lo_witness = g.vertices();
    for i in 0..samples {
        let alive = if i % 2 == 0 {
            let keep = rng.gen_range(0.2..0.95);
            let mut mark: Vec<bool> = (0..n).map(|_| rng.gen_bool(keep)).collect();
            if !mark.iter().any(|&b| b) {
                mark[rng.gen_range(0..n)] = true;
            }
            mark
        } else {
            ball(g, rng.gen_range(0..n), rng.gen_range(1..=4))
        };
        let need = requirement(g, &alive, &table);
        if need > lo {
            lo = need;
            lo_witness = (0..n).filter(|&v| alive[v]).collect();
        }
    }
    Ok(UlaBounds { eps: eps.clone(), lo, hi, lo_witness, samples })
}

fn ball(g: &Graph, center: usize, radius: usize) -> Vec<bool> {
    let mut mark = vec![false; g.n()];
    mark[center] = true;
    let mut frontier = vec![center];
    for _ in 0..radius {
        let mut next = Vec::new();
        for v in frontier {
            for &u in g.neighbors(v) {
                if !mark[u] {
                    mark[u] = true;
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    mark
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen, random_bounded_degree};
    use crate::rational::ratio;
    use alloc::collections::BTreeSet;

    #[test]
    fn p5_half_two() {
        let w = find_folner_set(&path(5), &ratio(1, 2), 2).unwrap().unwrap();
        assert_eq!(w.e, VertexSet::from([0, 1]));
        assert_eq!(w.eps_achieved, ratio(1, 2));
    }

    #[test]
    fn small_component_is_boundary_free() {
        let g = Graph::new(5, 2, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let w = find_folner_set(&g, &ratio(0, 1), 2).unwrap().unwrap();
        assert_eq!(w.e, VertexSet::from([3, 4]));
        assert_eq!(w.eps_achieved, ratio(0, 1));
    }

    #[test]
    fn petersen_has_no_boundary_free_small_set() {
        assert_eq!(find_folner_set(&petersen(), &ratio(0, 1), 3).unwrap(), None);
    }

    #[test]
    fn empty_graph_is_rejected() {
        let g = Graph::new(0, 0, []).unwrap();
        assert_eq!(find_folner_set(&g, &ratio(1, 2), 2), Err(Error::NoVertices));
    }

    #[test]
    fn connected_growth_produces_each_set_once() {
        for seed in 0..30 {
            let g = random_bounded_degree(9, 4, 20, seed);
            let alive = vec![true; 9];
            let roots: Vec<usize> = (0..9).collect();
            let mut seen = BTreeSet::new();
            for_each_connected(&g, &alive, &roots, 4, |sub, _| {
                let mut s = sub.to_vec();
                s.sort_unstable();
                assert!(seen.insert(s), "duplicate set");
                ControlFlow::Continue(())
            });
            let adj = bits::adjacency_masks(&g);
            let expected: BTreeSet<Vec<usize>> = (1u64..1 << 9)
                .filter(|m| m.count_ones() <= 4 && bits::components(&adj, *m).len() == 1)
                .map(bits::to_vec)
                .collect();
            assert_eq!(seen, expected, "seed {seed}");
            let mut masks = BTreeSet::new();
            let _ = for_each_connected_mask(&adj, bits::full(9), 4, &mut |m| {
                assert!(masks.insert(bits::to_vec(m)));
                ControlFlow::Continue(())
            });
            assert_eq!(masks, expected);
        }
    }

    #[test]
    fn profile_examples() {
        assert_eq!(ula_profile(&path(6), &ratio(1, 2), 14).unwrap().k, 2);
        for g in [path(4), cycle(5), petersen()] {
            assert_eq!(ula_profile(&g, &ratio(1, 1), 14).unwrap().k, 1);
        }
        let k5 = ula_profile(&complete(5), &ratio(1, 4), 14).unwrap();
        assert_eq!(k5.k, 5);
        assert_eq!(k5.worst, complete(5).vertices());
    }

    #[test]
    fn approx_brackets_exact() {
        for seed in 0..8 {
            let g = random_bounded_degree(11, 3, 16, seed);
            for eps in [ratio(1, 4), ratio(1, 2)] {
                let exact = ula_profile(&g, &eps, 14).unwrap().k;
                let b = ula_profile_approx(&g, &eps, 40, seed).unwrap();
                assert!(b.lo <= exact && exact <= b.hi, "seed {seed}: {} <= {exact} <= {}", b.lo, b.hi);
            }
        }
    }
}
