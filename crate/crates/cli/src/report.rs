//! JSON payloads. Rationals are `"p/q"` strings in lowest terms and vertex
//! sets are sorted integer arrays, so reports diff cleanly and carry no
//! floating-point drift. Object keys come out sorted.

use hyperfinite::folner::{UlaBounds, UlaProfile};
use hyperfinite::game::{GameReport, MwuReport, SeparatorDistribution};
use hyperfinite::greedy::{GreedyOutcome, Stage};
use hyperfinite::rational::to_pq;
use hyperfinite::schreier::SchreierGraph;
use hyperfinite::{FolnerWitness, Rational, VertexSet, WeightVector};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn rational(r: &Rational) -> Value {
    Value::String(to_pq(r))
}

pub fn set(s: &VertexSet) -> Value {
    json!(s.as_slice())
}

fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

fn sets(ss: &[VertexSet]) -> Value {
    Value::Array(ss.iter().map(set).collect())
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn distribution(d: &SeparatorDistribution) -> Value {
    json!({
        "support": sets(&d.support),
        "probs": rationals(&d.probs),
        "marginals": rationals(&d.marginals),
    })
}

fn weights(w: &WeightVector) -> Value {
    json!({ "weights": rationals(w.as_slice()), "total": rational(&w.total()) })
}

pub fn game(r: &GameReport) -> Value {
    json!({
        "k": r.k,
        "h": rational(&r.h),
        "eps_star": rational(&r.eps_star),
        "w_star": rational(&r.w_star),
        "gap": rational(&r.gap),
        "columns": r.columns,
        "pivots": r.pivots,
        "primal": distribution(&r.primal),
        "dual": weights(&r.dual),
        "dual_best_response": {
            "separator": set(&r.dual_best_response.0),
            "weight": rational(&r.dual_best_response.1),
        },
    })
}

pub fn mwu(r: &MwuReport, seed: u64) -> Value {
    json!({
        "k": r.k,
        "rounds": r.rounds,
        "seed": seed,
        "eta": r.eta,
        "lo": rational(&r.lo),
        "hi": rational(&r.hi),
        "width": rational(&(&r.hi - &r.lo)),
        "lo_certified": r.lo_certified,
        "hi_certified": r.hi_certified,
        "lo_weights": weights(&r.weights),
        "lo_response": set(&r.lo_response),
        "empirical": distribution(&r.empirical),
    })
}

fn stage(i: usize, s: &Stage) -> Value {
    json!({
        "stage": i + 1,
        "stage_vertices": s.stage_vertices,
        "folner_set": set(&s.folner_set),
        "boundary": set(&s.boundary),
    })
}

fn stages(ss: &[Stage]) -> Value {
    Value::Array(ss.iter().enumerate().map(|(i, s)| stage(i, s)).collect())
}

pub fn greedy(o: &GreedyOutcome) -> Value {
    match o {
        GreedyOutcome::Separated(t) => json!({
            "status": "separated",
            "eps": rational(&t.eps),
            "k": t.k,
            "stages": stages(&t.stages),
            "separator": set(&t.separator),
            "verified": t.verified,
        }),
        GreedyOutcome::Stuck(s) => json!({
            "status": "stuck",
            "eps": rational(&s.eps),
            "k": s.k,
            "stage": s.stage,
            "stage_graph": set(&s.stage_graph),
            "stages": stages(&s.completed),
        }),
    }
}

pub fn folner(w: Option<&FolnerWitness>, boundary: Option<&VertexSet>) -> Value {
    match (w, boundary) {
        (Some(w), Some(b)) => json!({
            "found": true,
            "witness": {
                "e": set(&w.e),
                "k": w.k,
                "eps_achieved": rational(&w.eps_achieved),
                "boundary": set(b),
            },
        }),
        _ => json!({ "found": false, "witness": null }),
    }
}

pub fn ula_exact(p: &UlaProfile) -> Value {
    json!({ "eps": rational(&p.eps), "exact": true, "k": p.k, "worst": set(&p.worst) })
}

pub fn ula_bounds(b: &UlaBounds) -> Value {
    json!({
        "eps": rational(&b.eps),
        "exact": false,
        "lo": b.lo,
        "hi": b.hi,
        "lo_witness": set(&b.lo_witness),
        "samples": b.samples,
    })
}

pub fn schreier(source: &str, s: &SchreierGraph, planar: bool) -> Value {
    let slots = s.slot_counts();
    json!({
        "source": source,
        "n": s.graph.n(),
        "edges": s.graph.edges().len(),
        "simple_edges": s.graph.simple_edge_count(),
        "loops": s.loop_count(),
        "one_slot_per_generator": slots.iter().all(|c| *c == [1; 4]),
        "transitive": s.transitive,
        "planar": planar,
    })
}

/// Full report: the payload plus provenance. Only `wall_time_ms` varies
/// between runs on the same input.
pub fn envelope(command: &str, input_digest: &str, parameters: Value, result: Value, wall_time_ms: u128) -> Value {
    json!({
        "command": command,
        "input_digest": input_digest,
        "parameters": parameters,
        "result": result,
        "wall_time_ms": wall_time_ms as u64,
    })
}
