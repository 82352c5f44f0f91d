//! K-separators: the predicate, exhaustive enumeration, and the lightest
//! separator under a vertex weighting.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::bits::{self, Mask};
use crate::graph::{components_after_removal, Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::{Error, Result, MAX_MASK_VERTICES};

/// Proof that removing `y` leaves components of at most `k` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorCertificate {
    pub y: VertexSet,
    pub k: usize,
    /// Largest component of `g − y`; 0 when `y` is everything.
    pub max_component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparatorCheck {
    Certified(SeparatorCertificate),
    /// The first component (by smallest member) that exceeds `k`.
    Refused { component: VertexSet },
}

impl SeparatorCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, SeparatorCheck::Certified(_))
    }

    pub fn certificate(self) -> Option<SeparatorCertificate> {
        match self {
            SeparatorCheck::Certified(c) => Some(c),
            SeparatorCheck::Refused { .. } => None,
        }
    }
}

pub fn is_k_separator(g: &Graph, y: &VertexSet, k: usize) -> Result<SeparatorCheck> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let parts = components_after_removal(g, y)?;
    if let Some(big) = parts.iter().find(|c| c.len() > k) {
        return Ok(SeparatorCheck::Refused { component: big.clone() });
    }
    let max_component = parts.iter().map(VertexSet::len).max().unwrap_or(0);
    Ok(SeparatorCheck::Certified(SeparatorCertificate { y: y.clone(), k, max_component }))
}

/// Nonnegative exact weights, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    w: Vec<Rational>,
}

impl WeightVector {
    pub fn new(w: Vec<Rational>) -> Option<Self> {
        w.iter().all(|x| !x.is_negative()).then_some(Self { w })
    }

    /// `1/n` on every vertex.
    pub fn uniform(n: usize) -> Self {
        let each = if n == 0 { Rational::zero() } else { rational::ratio(1, n as i64) };
        Self { w: alloc::vec![each; n] }
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.w.iter().sum()
    }

    /// Scaled to total 1; `None` when the total is zero.
    pub fn normalized(&self) -> Option<Self> {
        let t = self.total();
        if t.is_zero() {
            return None;
        }
        Some(Self { w: self.w.iter().map(|x| x / &t).collect() })
    }

    pub fn weight_of(&self, y: &VertexSet) -> Rational {
        y.iter().map(|v| &self.w[v]).sum()
    }

    pub(crate) fn weight_of_mask(&self, m: Mask) -> Rational {
        bits::members(m).map(|v| &self.w[v]).sum()
    }
}

fn check_scan(g: &Graph, k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let cap = cap.min(MAX_MASK_VERTICES);
    if g.n() > cap {
        return Err(Error::SizeLimit { n: g.n(), cap });
    }
    Ok(())
}

/// Smallest separator size worth scanning. Every component of `g − y` that
/// lies in a component of `g` meeting `y` touches `y`, so there are at most
/// `c + Δ·|y|` components, each of at most `k` vertices.
fn size_lower_bound(g: &Graph, k: usize) -> usize {
    let n = g.n();
    let c = g.components().len();
    let delta = g.max_simple_degree();
    let need = n.saturating_sub(k * c);
    need.div_ceil(1 + k * delta)
}

fn filter_size<F>(n: usize, size: usize, keep: F) -> Vec<Mask>
where
    F: Fn(Mask) -> bool + Sync,
{
    #[cfg(feature = "rayon")]
    {
        use rayon::prelude::*;
        let all: Vec<Mask> = bits::masks_of_size(n, size).collect();
        all.into_par_iter().filter(|&m| keep(m)).collect()
    }
    #[cfg(not(feature = "rayon"))]
    {
        bits::masks_of_size(n, size).filter(|&m| keep(m)).collect()
    }
}

/// K-separators as bitmasks in canonical order (size, then lexicographic).
pub(crate) fn separator_masks(g: &Graph, k: usize, minimal_only: bool, cap: usize) -> Result<Vec<Mask>> {
    check_scan(g, k, cap)?;
    let n = g.n();
    let adj = bits::adjacency_masks(g);
    let all = bits::full(n);
    let mut found: Vec<Mask> = Vec::new();
    for size in size_lower_bound(g, k)..=n {
        let mut layer = if minimal_only {
            let minimal = &found;
            filter_size(n, size, |y| {
                !minimal.iter().any(|&m| m & !y == 0) && bits::components_within(&adj, all & !y, k)
            })
        } else {
            filter_size(n, size, |y| bits::components_within(&adj, all & !y, k))
        };
        layer.sort_unstable_by(|&a, &b| bits::lex_cmp(a, b));
        found.extend(layer);
    }
    Ok(found)
}

/// All K-separators of `g`, or only the inclusion-minimal ones, ordered by
/// size and then lexicographically.
pub fn enumerate_k_separators(g: &Graph, k: usize, minimal_only: bool, cap: usize) -> Result<Vec<VertexSet>> {
    Ok(separator_masks(g, k, minimal_only, cap)?
        .into_iter()
        .map(|m| VertexSet::from_sorted(bits::to_vec(m)))
        .collect())
}

/// First mask of least weight; with masks in canonical order this is the
/// smallest, then lexicographically first, among the lightest.
pub(crate) fn lightest(masks: &[Mask], w: &WeightVector) -> (Mask, Rational) {
    let mut best: Option<(Mask, Rational)> = None;
    for &m in masks {
        let weight = w.weight_of_mask(m);
        if best.as_ref().is_none_or(|(_, b)| weight < *b) {
            best = Some((m, weight));
        }
    }
    best.expect("the full vertex set always separates")
}

/// A K-separator of minimum total weight and that weight. Ties go to the
/// smallest separator, then the lexicographically first. Only minimal
/// separators are scanned: adding vertices never lowers a nonnegative
/// weight.
pub fn min_weight_separator(g: &Graph, w: &WeightVector, k: usize, cap: usize) -> Result<(VertexSet, Rational)> {
    if w.len() != g.n() {
        return Err(Error::WeightLength { len: w.len(), n: g.n() });
    }
    let masks = separator_masks(g, k, true, cap)?;
    let (m, weight) = lightest(&masks, w);
    Ok((VertexSet::from_sorted(bits::to_vec(m)), weight))
}

/// `h(G, K)`: the smallest separator size as a fraction of `n`.
pub fn min_separator_fraction(g: &Graph, k: usize, cap: usize) -> Result<Rational> {
    let masks = separator_masks(g, k, true, cap)?;
    Ok(fraction_of_smallest(&masks, g.n()))
}

pub(crate) fn fraction_of_smallest(masks: &[Mask], n: usize) -> Rational {
    let smallest = masks.iter().map(|m| m.count_ones()).min().unwrap_or(0);
    if n == 0 {
        Rational::zero()
    } else {
        rational::ratio(i64::from(smallest), n as i64)
    }
}

/// Minimal K-separator avoiding heavy vertices: start from the full vertex
/// set and put vertices back in decreasing weight order whenever the
/// component they rejoin stays within `k`. Works at any size; the result
/// is a true K-separator but not necessarily the lightest.
pub fn heuristic_light_separator(g: &Graph, weights: &[f64], k: usize) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| weights[b].total_cmp(&weights[a]).then(a.cmp(&b)));
    let mut alive = alloc::vec![false; n];
    for v in order {
        alive[v] = true;
        if g.component_size_capped(&alive, v, k) > k {
            alive[v] = false;
        }
    }
    Ok((0..n).filter(|&v| !alive[v]).collect())
}
