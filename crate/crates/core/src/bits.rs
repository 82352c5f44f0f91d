//! Bitmask helpers for the exhaustive scans on graphs with at most 63
//! vertices.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::Graph;

pub(crate) type Mask = u64;

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<Mask> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | (1 << u)))
        .collect()
}

pub(crate) fn full(n: usize) -> Mask {
    if n == 64 {
        !0
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn members(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn to_vec(m: Mask) -> Vec<usize> {
    members(m).collect()
}

/// Vertices of `alive` reachable from `seed` inside `alive`.
pub(crate) fn flood(adj: &[Mask], alive: Mask, seed: Mask) -> Mask {
    let mut reached = seed & alive;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= adj[v];
        }
        frontier = next & alive & !reached;
        reached |= frontier;
    }
    reached
}

/// Component masks of the subgraph induced on `alive`, ordered by smallest
/// member.
pub(crate) fn components(adj: &[Mask], alive: Mask) -> Vec<Mask> {
    let mut rest = alive;
    let mut out = Vec::new();
    while rest != 0 {
        let c = flood(adj, rest, rest & rest.wrapping_neg());
        out.push(c);
        rest &= !c;
    }
    out
}

/// True iff every component of the subgraph induced on `alive` has at most
/// `k` vertices.
pub(crate) fn components_within(adj: &[Mask], alive: Mask, k: usize) -> bool {
    let mut rest = alive;
    while rest != 0 {
        let c = flood(adj, rest, rest & rest.wrapping_neg());
        if c.count_ones() as usize > k {
            return false;
        }
        rest &= !c;
    }
    true
}

/// Inner boundary of `e` inside the subgraph induced on `alive`.
pub(crate) fn boundary(adj: &[Mask], alive: Mask, e: Mask) -> Mask {
    members(e)
        .filter(|&v| adj[v] & alive & !e != 0)
        .fold(0, |m, v| m | (1 << v))
}

/// Lexicographic order of the sorted member lists.
pub(crate) fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// All `n`-bit masks with exactly `size` bits set, in increasing numeric
/// order (Gosper's hack).
pub(crate) fn masks_of_size(n: usize, size: usize) -> impl Iterator<Item = Mask> {
    let limit: u128 = 1u128 << n;
    let mut cur: Option<u128> = if size > n {
        None
    } else if size == 0 {
        Some(0)
    } else {
        Some((1u128 << size) - 1)
    };
    core::iter::from_fn(move || {
        let m = cur?;
        cur = if m == 0 {
            None
        } else {
            let c = m & m.wrapping_neg();
            let r = m + c;
            let next = (((r ^ m) >> 2) / c) | r;
            (next < limit).then_some(next)
        };
        Some(m as Mask)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_counts_binomials() {
        for n in 0..=10 {
            let total: usize = (0..=n).map(|s| masks_of_size(n, s).count()).sum();
            assert_eq!(total, 1 << n);
        }
        assert_eq!(masks_of_size(5, 2).count(), 10);
        assert_eq!(masks_of_size(3, 4).count(), 0);
    }

    #[test]
    fn lex_order_differs_from_numeric() {
        // {0,3} precedes {1,2} lexicographically.
        assert_eq!(lex_cmp(0b1001, 0b0110), Ordering::Less);
    }
}
