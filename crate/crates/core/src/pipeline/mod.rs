//! Per-side analyses assembled into the overgroup verdicts.

mod bound;
mod report;
mod side;

pub use bound::{parse_ratio, wang_index_bound, IndexBound, MAX_BOUND_N};
pub use report::{
    analyze_pair, contradiction_chain, theorem01_verdict, theorem25_obstruction, ChainReport,
    FinitenessVerdict, ObstructionReport, WangReport,
};
pub use side::{analyze_datum_side, analyze_group, SideAnalysis, SideReport, SideSource};

use thiserror::Error;

use crate::groupprops::{GroupPropsError, DEFAULT_SECTION_CAP};
use crate::localaction::{LocalActionError, DEFAULT_DEPTH, DEFAULT_WORD_BOUND};
use crate::permcore::{PermError, DEFAULT_ENUM_CAP};
use crate::vhcomplex::VhError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Tower depth `K`.
    pub depth: usize,
    pub enum_cap: u64,
    pub section_cap: u64,
    /// Reject self-paired squares.
    pub strict: bool,
    pub word_bound: u64,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            depth: DEFAULT_DEPTH,
            enum_cap: DEFAULT_ENUM_CAP,
            section_cap: DEFAULT_SECTION_CAP,
            strict: false,
            word_bound: DEFAULT_WORD_BOUND,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("side {side} is not quasi-primitive of almost simple type")]
    NotAlmostSimple { side: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("volume ratio {0} is below 1")]
    RatioBelowOne(String),
    #[error("cannot parse volume ratio {0:?} (expected an integer, decimal or fraction)")]
    BadRatio(String),
    #[error("N = {n} exceeds the supported maximum {max}")]
    BoundTooLarge { n: String, max: u64 },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    GroupProps(#[from] GroupPropsError),
    #[error(transparent)]
    LocalAction(#[from] LocalActionError),
    #[error(transparent)]
    Datum(#[from] VhError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl PipelineError {
    /// True when the failure is a resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        match self {
            PipelineError::BoundTooLarge { .. } => true,
            PipelineError::GroupProps(e) => e.is_too_large(),
            PipelineError::Perm(PermError::TooLarge { .. }) => true,
            PipelineError::LocalAction(LocalActionError::DepthOverflow { .. }) => true,
            PipelineError::LocalAction(LocalActionError::Perm(PermError::TooLarge { .. })) => true,
            _ => false,
        }
    }
}
