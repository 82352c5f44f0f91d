//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use hyperfinite::game::{exact_game_with_support, Support};
use hyperfinite::generators::{complete, complete_bipartite, random_bounded_degree};
use hyperfinite::graph::{boundary, induced_subgraph};
use hyperfinite::rational::ratio;
use hyperfinite::{
    build_schreier, cycle_action, exact_game, greedy_separator, is_k_separator, is_planar, mwu_game, Graph,
    GreedyOutcome, Rational, VertexSet,
};
use hyperfinite_cli::format::parse_graph;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = 20;
/// Largest allowed MWU bracket width after 4000 rounds.
const MWU_WIDTH: (i64, i64) = (1, 20);
const MWU_ROUNDS: usize = 4000;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize, max_d: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let d = rng.gen_range(1..=max_d);
    let attempts = rng.gen_range(0..=n * d);
    random_bounded_degree(n, d, attempts, rng.gen())
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// All subsets of size at most `k`, connected or not.
fn brute_folner_exists(g: &Graph, eps: &Rational, k: usize) -> bool {
    let n = g.n();
    (1u64..1 << n).any(|m| {
        let e: VertexSet = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        e.len() <= k && ratio(boundary(g, &e).unwrap().len() as i64, 1) <= eps * ratio(e.len() as i64, 1)
    })
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of connected simple graphs on
/// `n` vertices with maximum degree at most `d`.
fn connected_graphs(n: usize, d: usize) -> Vec<Graph> {
    let pairs = pair_index(n);
    let slot = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let tables: Vec<Vec<usize>> =
        permutations(n).iter().map(|p| pairs.iter().map(|&(u, v)| slot(p[u], p[v])).collect()).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&x| x > d) {
            continue;
        }
        let g = Graph::new(n, d, edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = tables
            .iter()
            .map(|t| (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << t[i]))
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

fn zero_gap() -> Check {
    let mut classes = Vec::new();
    for n in 1..=6 {
        let gs = connected_graphs(n, 4);
        classes.push(gs.len());
        for g in &gs {
            for k in 1..=3 {
                let r = exact_game(g, k, CAP).map_err(|e| e.to_string())?;
                ensure(r.gap.is_zero(), || format!("gap {} on {g:?} k={k}", r.gap))?;
            }
        }
    }
    // Connected graphs up to isomorphism number 1, 1, 2, 6, 21, 112. Degree 4
    // only binds at n = 6, removing the 34 graphs K1 + H with H on 5 vertices.
    ensure(classes == [1, 1, 2, 6, 21, 112 - 34], || format!("class counts {classes:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..500 {
        let g = random_graph(&mut rng, 1, 12, 4);
        for k in 1..=3 {
            let r = exact_game(&g, k, CAP).map_err(|e| e.to_string())?;
            ensure(r.gap.is_zero(), || format!("gap {} on random graph {i} k={k}", r.gap))?;
        }
    }
    Ok(format!("connected classes per n {classes:?} and 500 random graphs, k in 1..=3"))
}

fn minimal_support() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..240 {
        let g = random_graph(&mut rng, 1, 7, 4);
        for k in 1..=3 {
            let min = exact_game_with_support(&g, k, Support::Minimal, CAP).map_err(|e| e.to_string())?;
            let all = exact_game_with_support(&g, k, Support::All, CAP).map_err(|e| e.to_string())?;
            ensure(min.eps_star == all.eps_star, || {
                format!("graph {i} k={k}: minimal {} vs all {}", min.eps_star, all.eps_star)
            })?;
        }
    }
    Ok("240 graphs, k in 1..=3".into())
}

fn greedy_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut separated, mut stuck, mut stuck_checked) = (0, 0, 0);
    for i in 0..1000 {
        let g = random_graph(&mut rng, 1, 60, 4);
        for eps in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
            for k in [2, 3, 5] {
                match greedy_separator(&g, &eps, k).map_err(|e| e.to_string())? {
                    GreedyOutcome::Separated(t) => {
                        separated += 1;
                        ensure(t.verified, || format!("graph {i}: unverified trace"))?;
                        ensure(ratio(t.separator.len() as i64, 1) <= &eps * ratio(g.n() as i64, 1), || {
                            format!("graph {i}: separator too large")
                        })?;
                        ensure(is_k_separator(&g, &t.separator, k).unwrap().is_certified(), || {
                            format!("graph {i}: not a {k}-separator")
                        })?;
                    }
                    GreedyOutcome::Stuck(s) => {
                        stuck += 1;
                        if s.stage_graph.len() <= 12 {
                            stuck_checked += 1;
                            let (h, _) = induced_subgraph(&g, &s.stage_graph).unwrap();
                            ensure(!brute_folner_exists(&h, &eps, k), || {
                                format!("graph {i} eps {eps} k {k}: stuck graph has a witness")
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{separated} separated, {stuck} stuck ({stuck_checked} confirmed by subset scan)"))
}

fn cycle_formula() -> Check {
    for n in 3..=12usize {
        for k in 1..n {
            let got = exact_game(&hyperfinite::generators::cycle(n), k, CAP).map_err(|e| e.to_string())?.eps_star;
            let want = ratio(n.div_ceil(k + 1) as i64, n as i64);
            ensure(got == want, || format!("C{n} k={k}: {got} != {want}"))?;
        }
    }
    let p3 = parse_graph(&std::fs::read_to_string(fixture("p3.txt")).unwrap()).unwrap();
    let r = exact_game(&p3, 1, CAP).map_err(|e| e.to_string())?;
    ensure(r.eps_star == ratio(1, 2) && r.h == ratio(1, 3), || format!("P3: eps {} h {}", r.eps_star, r.h))?;
    let w = r.dual.as_slice();
    ensure(w[1] == ratio(1, 2) && &w[0] + &w[2] == ratio(1, 2), || format!("P3 dual {w:?}"))?;
    Ok(format!("C3..C12 all k; P3 dual ({}, {}, {})", w[0], w[1], w[2]))
}

fn averaging() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tried = 0;
    for i in 0..1000 {
        let (g, e) = loop {
            tried += 1;
            let g = random_graph(&mut rng, 1, 14, 4);
            let e = random_subset(&mut rng, g.n());
            if !e.is_empty() {
                break (g, e);
            }
        };
        let b = boundary(&g, &e).unwrap().len();
        let (sub, map) = induced_subgraph(&g, &e).unwrap();
        let good = sub.components().iter().any(|c| {
            let part: VertexSet = c.iter().map(|v| map[v]).collect();
            boundary(&g, &part).unwrap().len() * e.len() <= b * part.len()
        });
        ensure(good, || format!("pair {i}: no component meets the ratio"))?;
    }
    Ok(format!("1000 nonempty pairs ({tried} drawn)"))
}

fn mwu_bracket() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let width = ratio(MWU_WIDTH.0, MWU_WIDTH.1);
    let mut widest = Rational::zero();
    for i in 0..50 {
        let g = random_graph(&mut rng, 2, 12, 4);
        let k = rng.gen_range(1..=3);
        let exact = exact_game(&g, k, CAP).map_err(|e| e.to_string())?.eps_star;
        let r = mwu_game(&g, k, MWU_ROUNDS, i, CAP).map_err(|e| e.to_string())?;
        ensure(r.lo <= exact && exact <= r.hi, || format!("graph {i}: {} <= {exact} <= {} fails", r.lo, r.hi))?;
        let w = &r.hi - &r.lo;
        ensure(w <= width, || format!("graph {i}: width {w}"))?;
        widest = widest.max(w);
    }
    Ok(format!("50 graphs, widest bracket {:.5}", widest.to_f64().unwrap_or(f64::NAN)))
}

fn monotonicity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..300 {
        let g = random_graph(&mut rng, 1, 10, 4);
        let s = random_subset(&mut rng, g.n());
        if s.is_empty() {
            continue;
        }
        let (h, _) = induced_subgraph(&g, &s).unwrap();
        for k in 1..=2 {
            let eg = exact_game(&g, k, CAP).map_err(|e| e.to_string())?.eps_star;
            let eh = exact_game(&h, k, CAP).map_err(|e| e.to_string())?.eps_star;
            ensure(eh <= eg, || format!("pair {i} k={k}: {eh} > {eg}"))?;
        }
    }
    Ok("300 pairs, k in 1..=2".into())
}

fn schreier_pipeline() -> Check {
    for n in (2..=200).step_by(2) {
        let s = build_schreier(&cycle_action(n).unwrap());
        ensure(is_planar(&s.graph), || format!("cycle_action({n}) not planar"))?;
        ensure(s.slot_counts().iter().all(|c| *c == [1; 4]), || format!("cycle_action({n}) slots"))?;
        ensure((0..n).all(|v| s.graph.degree(v) == 4), || format!("cycle_action({n}) degree"))?;
    }
    for name in ["k5.txt", "k33.txt"] {
        let g = parse_graph(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        ensure(!is_planar(&g), || format!("{name} reported planar"))?;
    }
    ensure(!is_planar(&complete(5)) && !is_planar(&complete_bipartite(3, 3)), || "generated K5/K3,3".into())?;
    for n in (4..=12).step_by(2) {
        let s = build_schreier(&cycle_action(n).unwrap());
        for k in 1..n {
            let got = exact_game(&s.graph, k, CAP).map_err(|e| e.to_string())?.eps_star;
            let want = ratio(n.div_ceil(k + 1) as i64, n as i64);
            ensure(got == want, || format!("Schreier C{n} k={k}: {got} != {want}"))?;
        }
    }
    Ok("even n <= 200 planar and 4-regular by slot; K5, K3,3 rejected; values match cycles".into())
}

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_string_lossy().into_owned()
}

/// Report text minus the timing line.
fn payload(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hfl")).args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok(text.lines().filter(|l| !l.trim_start().starts_with("\"wall_time_ms\"")).collect::<Vec<_>>().join("\n"))
}

fn determinism() -> Check {
    let p3 = fixture("p3.txt");
    let p6 = fixture("p6.txt");
    let c6 = fixture("c6.txt");
    let runs: [Vec<&str>; 5] = [
        vec!["game", &p3, "--k", "1"],
        vec!["profile", &p6, "--k", "2"],
        vec!["greedy", &p6, "--eps", "1/2", "--k", "2"],
        vec!["game", &c6, "--k", "2", "--mwu", "--rounds", "4000", "--seed", "11"],
        vec!["schreier", "--family", "cycle:8", "--profile", "--k", "2"],
    ];
    for args in &runs {
        let base = payload(args)?;
        ensure(payload(args)? == base, || format!("{args:?} differs between runs"))?;
        for w in ["1", "4"] {
            let mut with = vec!["--workers", w];
            with.extend(args.iter().copied());
            ensure(payload(&with)? == base, || format!("{args:?} differs with {w} workers"))?;
        }
    }
    Ok(format!("{} commands, two runs and 1 vs 4 workers", runs.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("zero duality gap", zero_gap),
        ("minimal separators suffice", minimal_support),
        ("greedy soundness", greedy_soundness),
        ("cycle closed form", cycle_formula),
        ("averaging over components", averaging),
        ("MWU bracketing", mwu_bracket),
        ("monotone under induced subgraphs", monotonicity),
        ("Schreier pipeline", schreier_pipeline),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
