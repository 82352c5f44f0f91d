//! The separator game.
//!
//! The separator player picks a K-separator `Y`, the weight player picks a
//! vertex `v`, and the payoff is `[v ∈ Y]`. Its value seen from the
//! separator side is `ε*(G,K)`, the least achievable largest vertex
//! marginal of a distribution on K-separators (strong hyperfiniteness).
//! Seen from the weight side it is `w*(G,K)`, the best guaranteed weight of
//! the lightest K-separator under a normalized weighting (weighted
//! hyperfiniteness). The two agree by LP duality; [`exact_game`] computes
//! both with exact witnesses, and [`mwu_game`] brackets the value with
//! multiplicative weights when enumeration is too expensive.
//!
//! The LP, over separators `Y_1..Y_m`:
//!
//! ```text
//! min t   s.t.   Σ_i x_i·[v ∈ Y_i] − t + s_v = 0   for every vertex v
//!                Σ_i x_i = 1,   x, t, s >= 0
//! ```
//!
//! The slacks `s_v` are the nonnegative offsets of the separator hull. The
//! vertex rows' multipliers, negated, are the weight player's optimal
//! strategy.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Float, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, Mask};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::separators::{self, heuristic_light_separator, is_k_separator, WeightVector};
use crate::simplex;
use crate::{Error, Result};

/// Probability distribution on K-separators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorDistribution {
    pub support: Vec<VertexSet>,
    pub probs: Vec<Rational>,
    /// Per vertex: probability that the drawn separator contains it.
    pub marginals: Vec<Rational>,
}

impl SeparatorDistribution {
    pub fn new(n: usize, support: Vec<VertexSet>, probs: Vec<Rational>) -> Self {
        let mut marginals = vec![Rational::zero(); n];
        for (y, p) in support.iter().zip(&probs) {
            for v in y.iter() {
                marginals[v] += p;
            }
        }
        Self { support, probs, marginals }
    }

    pub fn max_marginal(&self) -> Rational {
        self.marginals.iter().max().cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-checks every claim of the distribution against `g` from scratch.
    pub fn verify(&self, g: &Graph, k: usize) -> Result<()> {
        if self.probs.iter().any(Signed::is_negative) {
            return Err(Error::CertificateRejected("negative probability"));
        }
        if self.probs.iter().sum::<Rational>() != Rational::one() {
            return Err(Error::CertificateRejected("probabilities do not sum to 1"));
        }
        for y in &self.support {
            if !is_k_separator(g, y, k)?.is_certified() {
                return Err(Error::CertificateRejected("support member is not a K-separator"));
            }
        }
        let again = Self::new(g.n(), self.support.clone(), self.probs.clone());
        if again.marginals != self.marginals {
            return Err(Error::CertificateRejected("marginals do not match the support"));
        }
        Ok(())
    }
}

/// Which separators the exact LP ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    Minimal,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameReport {
    pub k: usize,
    /// Smallest separator fraction `min |Y| / n`.
    pub h: Rational,
    pub eps_star: Rational,
    pub w_star: Rational,
    /// `eps_star − w_star`; zero by LP duality.
    pub gap: Rational,
    pub primal: SeparatorDistribution,
    /// Normalized weights (total 1).
    pub dual: WeightVector,
    /// Lightest K-separator under `dual` and its weight, which is `w_star`.
    pub dual_best_response: (VertexSet, Rational),
    /// Number of separators the LP ranged over.
    pub columns: usize,
    pub pivots: usize,
}

/// Exact game value over minimal K-separators.
pub fn exact_game(g: &Graph, k: usize, cap: usize) -> Result<GameReport> {
    exact_game_with_support(g, k, Support::Minimal, cap)
}

pub fn exact_game_with_support(g: &Graph, k: usize, support: Support, cap: usize) -> Result<GameReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let masks = separators::separator_masks(g, k, support == Support::Minimal, cap)?;
    let m = masks.len();
    let t_col = m;
    let width = m + 1 + n;
    let mut a = Vec::with_capacity(n + 1);
    for v in 0..n {
        let mut row = vec![Rational::zero(); width];
        for (i, &y) in masks.iter().enumerate() {
            if y >> v & 1 == 1 {
                row[i] = Rational::one();
            }
        }
        row[t_col] = -Rational::one();
        row[m + 1 + v] = Rational::one();
        a.push(row);
    }
    let mut simplex_row = vec![Rational::zero(); width];
    for x in &mut simplex_row[..m] {
        *x = Rational::one();
    }
    a.push(simplex_row);
    let mut b = vec![Rational::zero(); n + 1];
    b[n] = Rational::one();
    let mut c = vec![Rational::zero(); width];
    c[t_col] = Rational::one();

    let lp = simplex::minimize(&a, &b, &c).expect("separator LP is feasible and bounded");

    let chosen: Vec<usize> = (0..m).filter(|&i| lp.x[i].is_positive()).collect();
    let primal = SeparatorDistribution::new(
        n,
        chosen.iter().map(|&i| VertexSet::from_sorted(bits::to_vec(masks[i]))).collect(),
        chosen.iter().map(|&i| lp.x[i].clone()).collect(),
    );
    primal.verify(g, k)?;
    let eps_star = primal.max_marginal();
    if eps_star != lp.objective {
        return Err(Error::CertificateRejected("largest marginal differs from the LP optimum"));
    }

    let raw: Vec<Rational> = lp.duals[..n].iter().map(|y| -y.clone()).collect();
    let raw = WeightVector::new(raw).ok_or(Error::CertificateRejected("negative dual weight"))?;
    // A zero game value leaves the weights unconstrained.
    let dual = raw.normalized().unwrap_or_else(|| WeightVector::uniform(n));
    let (best_mask, w_star) = separators::lightest(&masks, &dual);
    let dual_best_response = (VertexSet::from_sorted(bits::to_vec(best_mask)), w_star.clone());

    Ok(GameReport {
        k,
        h: separators::fraction_of_smallest(&masks, n),
        gap: &eps_star - &w_star,
        eps_star,
        w_star,
        primal,
        dual,
        dual_best_response,
        columns: m,
        pivots: lp.pivots,
    })
}

/// `⌈n/(k+1)⌉ / n`, the game value of the cycle `C_n`, defined for
/// `n >= 3` and `1 <= k < n`.
pub fn cycle_value_formula(n: usize, k: usize) -> Option<Rational> {
    (n >= 3 && k >= 1 && k < n).then(|| rational::ratio(n.div_ceil(k + 1) as i64, n as i64))
}

/// Bracket on the game value from multiplicative weights.
#[derive(Debug, Clone, PartialEq)]
pub struct MwuReport {
    pub k: usize,
    pub rounds: usize,
    pub eta: f64,
    /// Weight-side guarantee: the lightest separator weight under `weights`.
    pub lo: Rational,
    /// Largest marginal of `empirical`.
    pub hi: Rational,
    /// `lo` is exact only when the best responses were exact.
    pub lo_certified: bool,
    /// `hi` holds whenever every response is a verified K-separator.
    pub hi_certified: bool,
    pub weights: WeightVector,
    pub lo_response: VertexSet,
    /// Empirical distribution of the separator player's responses.
    pub empirical: SeparatorDistribution,
}

enum Responder {
    Exact(Vec<Mask>),
    Heuristic,
}

impl Responder {
    /// Lightest response under float weights `p`; exact ties are broken
    /// uniformly at random.
    fn respond(&self, g: &Graph, p: &[f64], k: usize, rng: &mut ChaCha8Rng) -> Result<VertexSet> {
        match self {
            Responder::Exact(masks) => {
                let value = |m: Mask| bits::members(m).map(|v| p[v]).sum::<f64>();
                let best = masks.iter().map(|&m| value(m)).fold(f64::INFINITY, f64::min);
                let ties: Vec<Mask> = masks.iter().copied().filter(|&m| value(m) <= best).collect();
                let pick = ties[rng.gen_range(0..ties.len())];
                Ok(VertexSet::from_sorted(bits::to_vec(pick)))
            }
            Responder::Heuristic => heuristic_light_separator(g, p, k),
        }
    }

    /// Exact lightest-separator weight under `w`, or the weight of the
    /// heuristic response.
    fn exact_value(&self, g: &Graph, w: &WeightVector, p: &[f64], k: usize) -> Result<(VertexSet, Rational)> {
        match self {
            Responder::Exact(masks) => {
                let (m, value) = separators::lightest(masks, w);
                Ok((VertexSet::from_sorted(bits::to_vec(m)), value))
            }
            Responder::Heuristic => {
                let y = heuristic_light_separator(g, p, k)?;
                let value = w.weight_of(&y);
                Ok((y, value))
            }
        }
    }
}

fn exact_weights(p: &[f64]) -> WeightVector {
    let w: Vec<Rational> = p.iter().map(|&x| rational::from_f64(x).unwrap_or_else(Rational::zero)).collect();
    let w = WeightVector::new(w).expect("probabilities are nonnegative");
    w.normalized().unwrap_or_else(|| WeightVector::uniform(p.len()))
}

/// Multiplicative weights for the weight player against best responses.
///
/// Each round the weights `p_t ∝ exp(η·#{s < t : v ∈ Y_s})` with
/// `η = sqrt(ln n / rounds)` are answered by a lightest K-separator `Y_t`.
/// `hi` is the largest marginal of the empirical distribution of the `Y_t`;
/// `lo` is the exact lightest-separator weight under the better of the
/// strongest round's weights and the time-averaged weights. Up to `cap`
/// vertices the best responses are exact and `lo <= ε* <= hi` is certified;
/// above it a heuristic responder is used and only `hi` stays certified.
pub fn mwu_game(g: &Graph, k: usize, rounds: usize, seed: u64, cap: usize) -> Result<MwuReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if rounds == 0 {
        return Err(Error::NoRounds);
    }
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let responder = match separators::separator_masks(g, k, true, cap) {
        Ok(masks) => Responder::Exact(masks),
        Err(Error::SizeLimit { .. }) => Responder::Heuristic,
        Err(e) => return Err(e),
    };
    let exact = matches!(responder, Responder::Exact(_));
    let eta = Float::sqrt(Float::ln(n as f64) / rounds as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = vec![0usize; n];
    let mut responses: BTreeMap<VertexSet, usize> = BTreeMap::new();
    let mut average = vec![0.0f64; n];
    let mut strongest: (f64, Vec<f64>) = (f64::NEG_INFINITY, Vec::new());

    for _ in 0..rounds {
        let top = hits.iter().copied().max().unwrap_or(0) as f64;
        let raw: Vec<f64> = hits.iter().map(|&h| Float::exp(eta * (h as f64 - top))).collect();
        let z: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|x| x / z).collect();
        let y = responder.respond(g, &p, k, &mut rng)?;
        let value: f64 = y.iter().map(|v| p[v]).sum();
        if value > strongest.0 {
            strongest = (value, p.clone());
        }
        for (a, x) in average.iter_mut().zip(&p) {
            *a += x / rounds as f64;
        }
        for v in y.iter() {
            hits[v] += 1;
        }
        *responses.entry(y).or_insert(0) += 1;
    }

    let mut best: Option<(Rational, WeightVector, VertexSet)> = None;
    for p in [&strongest.1, &average] {
        let w = exact_weights(p);
        let (y, value) = responder.exact_value(g, &w, p, k)?;
        if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
            best = Some((value, w, y));
        }
    }
    let (lo, weights, lo_response) = best.expect("two candidates");

    let total = rational::from_usize(rounds);
    let (support, counts): (Vec<VertexSet>, Vec<usize>) = responses.into_iter().unzip();
    let probs = counts.iter().map(|&c| rational::from_usize(c) / &total).collect();
    let empirical = SeparatorDistribution::new(n, support, probs);
    let hi_certified = empirical.verify(g, k).is_ok();
    Ok(MwuReport {
        k,
        rounds,
        eta,
        hi: empirical.max_marginal(),
        lo,
        lo_certified: exact,
        hi_certified,
        weights,
        lo_response,
        empirical,
    })
}
