//! Local actions of the two projections on spheres of the trees.
//!
//! `P_k` is the group generated by the automaton states acting on the
//! reduced words of length `k`. The groups form a tower under truncation;
//! the tower stabilizing at depth `k` (`|P_{k+1}| = |P_k|`) means the
//! projection is discrete.

mod sphere;
mod tower;

pub use sphere::{sphere_index, sphere_index_bounded, SphereIndex};
pub use tower::{
    automaton_for, discreteness_verdict, local_group, tower, tower_bounded, verdict_from_orders,
    DiscretenessVerdict, LocalTower, Side, TowerReport,
};

use thiserror::Error;

use crate::permcore::PermError;
use crate::vhcomplex::VhError;

/// Default maximal depth of a tower.
pub const DEFAULT_DEPTH: usize = 5;
/// Default bound on the number of sphere words.
pub const DEFAULT_WORD_BOUND: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum LocalActionError {
    #[error("sphere of depth {depth} has {words} words, above the bound {bound}")]
    DepthOverflow {
        depth: usize,
        words: u128,
        bound: u64,
    },
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("a discreteness verdict needs at least 2 tower levels, got {len}")]
    TowerTooShort { len: usize },
    #[error("word {word:?} is not reduced")]
    NotReduced { word: Vec<usize> },
    #[error("tower is not compatible under truncation at depth {depth}: {detail}")]
    Incompatible { depth: usize, detail: String },
    #[error("tower stabilized at depth {at} but grows again at depth {grows_at}")]
    PersistenceViolated { at: usize, grows_at: usize },
    #[error(transparent)]
    Datum(#[from] VhError),
    #[error(transparent)]
    Perm(#[from] PermError),
}
