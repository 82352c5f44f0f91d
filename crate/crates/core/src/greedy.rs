//! Separator construction from Følner sets.
//!
//! Stage `i` works in the graph `G_i` obtained from `g` by deleting
//! `E_1 ∪ … ∪ E_{i−1}`: it picks a Følner set `E_i` of `G_i`, records its
//! boundary `∂_{G_i}(E_i)`, and deletes all of `E_i`. The union of the stage
//! boundaries is a K-separator of `g` of size at most `eps·n`. When some
//! `G_i` has no Følner set the run stops and reports `G_i`, which is then an
//! induced subgraph of `g` without a witness at `(eps, k)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::folner::{best_candidate, Candidate};
use crate::graph::{Graph, VertexSet};
use crate::rational::{RatioTable, Rational};
use crate::separators::is_k_separator;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    /// `|V(G_i)|`.
    pub stage_vertices: usize,
    /// `E_i`, in identifiers of the original graph.
    pub folner_set: VertexSet,
    /// `∂_{G_i}(E_i)`.
    pub boundary: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub eps: Rational,
    pub k: usize,
    pub stages: Vec<Stage>,
    pub separator: VertexSet,
    /// The separator was re-checked against `g`: a K-separator with at most
    /// `eps·n` vertices.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuckReport {
    pub eps: Rational,
    pub k: usize,
    /// 1-based index of the stage that found no Følner set.
    pub stage: usize,
    /// Vertex set of `G_stage`.
    pub stage_graph: VertexSet,
    pub completed: Vec<Stage>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyOutcome {
    Separated(GreedyTrace),
    Stuck(StuckReport),
}

struct Piece {
    vertices: Vec<usize>,
    best: Option<Candidate>,
}

fn pieces_of(g: &Graph, alive: &[bool], within: &[usize], table: &RatioTable, k: usize) -> Vec<Piece> {
    let mut mark = vec![false; g.n()];
    for &v in within {
        mark[v] = alive[v];
    }
    g.components_of_mark(&mark)
        .into_iter()
        .map(|c| {
            let vertices = c.into_vec();
            let best = best_candidate(g, alive, &vertices, table, k);
            Piece { vertices, best }
        })
        .collect()
}

pub fn greedy_separator(g: &Graph, eps: &Rational, k: usize) -> Result<GreedyOutcome> {
    if eps.is_negative() {
        return Err(Error::NegativeEps);
    }
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let n = g.n();
    let limit = k.min(n.max(1));
    let table = RatioTable::new(eps, limit);
    let mut alive = vec![true; n];
    let mut remaining = n;
    let all: Vec<usize> = (0..n).collect();
    // Følner sets live inside one component of the stage graph, so each
    // component keeps its best candidate until a stage cuts into it.
    let mut pieces = pieces_of(g, &alive, &all, &table, limit);
    let mut stages = Vec::new();

    while remaining > 0 {
        let chosen = pieces
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.best.as_ref().map(|c| (i, c)))
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i);
        let Some(idx) = chosen else {
            return Ok(GreedyOutcome::Stuck(StuckReport {
                eps: eps.clone(),
                k,
                stage: stages.len() + 1,
                stage_graph: (0..n).filter(|&v| alive[v]).collect(),
                completed: stages,
            }));
        };
        let piece = pieces.swap_remove(idx);
        let e = piece.best.expect("chosen piece has a candidate").set;
        let in_e = VertexSet::from_sorted(e.clone()).indicator(n);
        let boundary: VertexSet = e
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&u| alive[u] && !in_e[u]))
            .collect();
        stages.push(Stage { stage_vertices: remaining, folner_set: VertexSet::from_sorted(e.clone()), boundary });
        for &v in &e {
            alive[v] = false;
        }
        remaining -= e.len();
        pieces.extend(pieces_of(g, &alive, &piece.vertices, &table, limit));
    }

    let separator = stages.iter().fold(VertexSet::new(), |acc, s| acc.union(&s.boundary));
    let small = BigInt::from(separator.len()) * eps.denom() <= eps.numer() * BigInt::from(n);
    let verified = small && is_k_separator(g, &separator, k)?.is_certified();
    Ok(GreedyOutcome::Separated(GreedyTrace { eps: eps.clone(), k, stages, separator, verified }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use crate::rational::ratio;

    fn trace(o: GreedyOutcome) -> GreedyTrace {
        match o {
            GreedyOutcome::Separated(t) => t,
            GreedyOutcome::Stuck(s) => panic!("stuck at stage {}", s.stage),
        }
    }

    #[test]
    fn p6_trace() {
        let t = trace(greedy_separator(&path(6), &ratio(1, 2), 2).unwrap());
        let expect = [([0, 1], vec![1]), ([2, 3], vec![3]), ([4, 5], vec![])];
        assert_eq!(t.stages.len(), 3);
        for (stage, (e, b)) in t.stages.iter().zip(expect) {
            assert_eq!(stage.folner_set, VertexSet::from(e));
            assert_eq!(stage.boundary, VertexSet::from(b));
        }
        assert_eq!(t.stages.iter().map(|s| s.stage_vertices).collect::<Vec<_>>(), vec![6, 4, 2]);
        assert_eq!(t.separator, VertexSet::from([1, 3]));
        assert!(t.verified);
    }

    #[test]
    fn whole_graph_fits() {
        let t = trace(greedy_separator(&cycle(5), &ratio(1, 3), 5).unwrap());
        assert_eq!(t.stages.len(), 1);
        assert_eq!(t.stages[0].folner_set, cycle(5).vertices());
        assert!(t.separator.is_empty());
    }

    #[test]
    fn c4_gets_stuck_immediately() {
        match greedy_separator(&cycle(4), &ratio(0, 1), 2).unwrap() {
            GreedyOutcome::Stuck(s) => {
                assert_eq!(s.stage, 1);
                assert_eq!(s.stage_graph, cycle(4).vertices());
                assert!(s.completed.is_empty());
            }
            GreedyOutcome::Separated(_) => panic!("C4 has no boundary-free set of size 2"),
        }
    }

    #[test]
    fn empty_graph_needs_no_stages() {
        let g = Graph::new(0, 0, []).unwrap();
        let t = trace(greedy_separator(&g, &ratio(1, 2), 1).unwrap());
        assert!(t.stages.is_empty() && t.verified);
    }
}
