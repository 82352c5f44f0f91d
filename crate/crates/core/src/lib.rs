//! Computational tools for hyperfiniteness on finite bounded-degree graphs.
//!
//! The crate walks the chain uniform local amenability ⇒ hyperfiniteness ⇒
//! strong hyperfiniteness ⇔ weighted hyperfiniteness on concrete finite
//! graphs:
//!
//! * [`folner`] searches for small sets with small inner vertex boundary
//!   (Følner witnesses) and computes the amenability profile of a graph and
//!   all of its induced subgraphs.
//! * [`greedy`] repeatedly extracts Følner sets and collects their stage
//!   boundaries into a K-separator of size at most ε·n.
//! * [`game`] solves the separator game exactly: the minimum over
//!   distributions on K-separators of the largest vertex marginal, and the
//!   maximum over vertex weightings of the lightest K-separator, with exact
//!   rational witnesses for both sides.
//! * [`schreier`] builds Schreier graphs of the free product of four copies
//!   of C2 from involution actions, and [`planar`] tests their planarity.
//!
//! The crate is `no_std` and only needs `alloc`. The optional `rayon`
//! feature parallelizes the exhaustive subset scans; results are merged back
//! into canonical order so output never depends on the worker count.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "rayon")]
extern crate std;

mod bits;
mod error;
pub mod folner;
pub mod game;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod planar;
pub mod rational;
pub mod schreier;
pub mod separators;
pub mod simplex;

pub use error::Error;
pub use folner::{find_folner_set, ula_profile, ula_profile_approx, FolnerWitness, UlaBounds, UlaProfile};
pub use game::{
    cycle_value_formula, exact_game, exact_game_with_support, mwu_game, GameReport, MwuReport,
    SeparatorDistribution, Support,
};
pub use graph::{Graph, VertexSet};
pub use greedy::{greedy_separator, GreedyOutcome, GreedyTrace, Stage, StuckReport};
pub use planar::is_planar;
pub use rational::Rational;
pub use schreier::{build_schreier, cycle_action, random_action, Generator, InvolutionAction, SchreierGraph};
pub use separators::{
    enumerate_k_separators, is_k_separator, min_weight_separator, SeparatorCertificate, WeightVector,
};

/// Largest vertex count accepted by the exhaustive separator scans unless
/// the caller raises it.
pub const DEFAULT_ENUM_CAP: usize = 20;

/// Largest vertex count for which [`ula_profile`] scans every induced
/// subgraph.
pub const DEFAULT_ULA_CAP: usize = 14;

/// Hard ceiling for the bitmask-based scans.
pub const MAX_MASK_VERTICES: usize = 63;

pub type Result<T, E = Error> = core::result::Result<T, E>;
