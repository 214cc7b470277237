//! One-vertex VH square complexes.
//!
//! A datum consists of a horizontal alphabet (size `n`) and a vertical one
//! (size `m`), each closed under a fixed-point-free inversion, and a set of
//! oriented squares `(a, b, a′, b′)` read as the relation `a·b = b′·a′`. Its
//! universal cover is `T_n × T_m` exactly when the corner map
//! `(a, b) ↦ (b′, a′)` is a bijection, i.e. the vertex link is complete
//! bipartite; that completeness condition is what [`validate`] checks.

mod automaton;
mod datum;
mod io;
mod survey;

pub use automaton::{horizontal_automaton, vertical_automaton, MealyAutomaton};
pub use datum::{
    dual, orientation_orbit, validate, Alphabet, Corners, Square, ValidationReport, VhDatum,
    Violation, Warning,
};
pub use io::{parse_datum, serialize_datum, DatumFile};
pub use survey::enumerate_complete_data;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VhError {
    #[error("malformed datum document: {0}")]
    MalformedDocument(String),
    #[error("inversion on the {side} alphabet is not a fixed-point-free involution: {detail}")]
    InvolutionNotFpf { side: &'static str, detail: String },
    #[error("alphabet size {size} is odd")]
    OddAlphabet { size: usize },
    #[error("datum is not valid ({} violation(s)); first: {}", .0.violations.len(),
        .0.violations.first().map(|v| v.to_string()).unwrap_or_default())]
    InvalidDatum(ValidationReport),
    #[error("letter {letter} out of range for alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
}
