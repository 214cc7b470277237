//! Decision procedures for the local hypotheses of Wang-type finiteness for
//! cocompact lattices in products of trees.
//!
//! The crate is organised bottom-up:
//!
//! * [`permcore`]: permutations, permutation groups, Schreier–Sims;
//! * [`groupprops`]: transitivity, primitivity, quasi-primitivity, socle
//!   typing and section tests;
//! * [`vhcomplex`]: one-vertex VH square-complex data and their automata;
//! * [`localaction`]: local actions on tree spheres and discreteness evidence;
//! * [`pipeline`]: per-side reports and the finiteness / obstruction verdicts;
//! * [`catalog`]: bundled example inputs.

pub mod catalog;
pub mod groupprops;
pub mod localaction;
pub mod order;
pub mod permcore;
pub mod pipeline;
pub mod vhcomplex;

pub use order::Order;
pub use permcore::{PermGroup, Permutation};
