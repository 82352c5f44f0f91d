//! Schreier graphs of `C2 * C2 * C2 * C2` acting on a finite set.
//!
//! The group is generated by four involutions `a, b, c, d` with no further
//! relations, so an action on `0..n` is just four involutive permutations.
//! For a transitive action the Schreier graph is `Sch(Γ/H, Σ)` with `H` the
//! stabilizer of any point. Each generator contributes one edge slot per
//! vertex: the edge `{x, g·x}`, which is a loop when `g` fixes `x`.

use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    pub fn letter(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
            Generator::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.letter() == c)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Four involutions of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionAction {
    perms: [Vec<usize>; 4],
}

impl InvolutionAction {
    pub fn new(perms: [Vec<usize>; 4]) -> Result<Self> {
        let n = perms[0].len();
        if n == 0 {
            return Err(Error::EmptyAction);
        }
        for (generator, p) in Generator::ALL.into_iter().zip(&perms) {
            if p.len() != n {
                return Err(Error::ActionLength { generator, len: p.len(), n });
            }
            for (point, &image) in p.iter().enumerate() {
                if image >= n {
                    return Err(Error::ActionOutOfRange { generator, point, image, n });
                }
                if p[image] != point {
                    return Err(Error::NotInvolution { generator, point, image });
                }
            }
        }
        Ok(Self { perms })
    }

    pub fn n(&self) -> usize {
        self.perms[0].len()
    }

    pub fn images(&self, g: Generator) -> &[usize] {
        &self.perms[g as usize]
    }

    pub fn act(&self, g: Generator, x: usize) -> usize {
        self.perms[g as usize][x]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierGraph {
    /// Degree bound 4.
    pub graph: Graph,
    /// Generator of `graph.edges()[i]`.
    pub labels: Vec<Generator>,
    pub transitive: bool,
}

impl SchreierGraph {
    /// Edge slots per vertex and generator; 1 everywhere for a valid
    /// Schreier graph.
    pub fn slot_counts(&self) -> Vec<[usize; 4]> {
        let mut slots = alloc::vec![[0usize; 4]; self.graph.n()];
        for (&(u, v), &g) in self.graph.edges().iter().zip(&self.labels) {
            slots[u][g as usize] += 1;
            if u != v {
                slots[v][g as usize] += 1;
            }
        }
        slots
    }

    pub fn loop_count(&self) -> usize {
        self.graph.edges().iter().filter(|(u, v)| u == v).count()
    }
}

pub fn build_schreier(act: &InvolutionAction) -> SchreierGraph {
    let mut labeled: Vec<((usize, usize), Generator)> = Vec::new();
    for g in Generator::ALL {
        for x in 0..act.n() {
            let y = act.act(g, x);
            if x <= y {
                labeled.push(((x, y), g));
            }
        }
    }
    labeled.sort_unstable();
    let graph = Graph::new(act.n(), 4, labeled.iter().map(|&(e, _)| e))
        .expect("an involution action gives one slot per generator");
    let labels = labeled.into_iter().map(|(_, g)| g).collect();
    let transitive = graph.is_connected();
    SchreierGraph { graph, labels, transitive }
}

/// `a` pairs `2i` with `2i+1`, `b` pairs `2i+1` with `2i+2` (mod n), `c`
/// and `d` are the identity. The Schreier graph is the `n`-cycle with two
/// loops at every vertex.
pub fn cycle_action(n: usize) -> Result<InvolutionAction> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::OddCycleLength(n));
    }
    let a = (0..n).map(|x| x ^ 1).collect();
    let b = (0..n)
        .map(|x| if x % 2 == 1 { (x + 1) % n } else { (x + n - 1) % n })
        .collect();
    let id: Vec<usize> = (0..n).collect();
    InvolutionAction::new([a, b, id.clone(), id])
}

/// Each generator is an independent uniformly random maximum matching of
/// `0..n` (one fixed point when `n` is odd). Deterministic in `(n, seed)`.
pub fn random_action(n: usize, seed: u64) -> Result<InvolutionAction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut p: Vec<usize> = (0..n).collect();
        for pair in order.chunks_exact(2) {
            p[pair[0]] = pair[1];
            p[pair[1]] = pair[0];
        }
        p
    };
    let perms = [draw(), draw(), draw(), draw()];
    InvolutionAction::new(perms)
}
