//! Structural properties of permutation groups: transitivity grades,
//! primitivity, minimal normal subgroups and socle type, and the section
//! tests used by the overgroup obstruction.

mod normal;
mod sections;
mod simple_orders;
mod transitivity;

pub use normal::{
    class_representatives, classify_qp, composition_factor_orders, is_quasiprimitive, is_simple,
    minimal_normal_subgroups, qp_analysis, QpAnalysis, QpTag, QpType,
};
pub use sections::{
    section_exact_small, section_necessary, solvable_outer_check, SectionReport, SectionVerdict,
    DEFAULT_SECTION_CAP,
};
pub use simple_orders::{
    simple_groups_up_to, simple_order_id, SimpleGroupEntry, SIMPLE_TABLE_LIMIT,
};
pub use transitivity::{
    is_2transitive, is_primitive, is_transitive, minimal_block_systems, BlockSystem,
};

use thiserror::Error;

use crate::permcore::PermError;

#[derive(Debug, Error)]
pub enum GroupPropsError {
    #[error("degree {degree} is too small (need at least 2)")]
    DegreeTooSmall { degree: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("group is not simple")]
    NotSimple,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl GroupPropsError {
    /// True when the failure is a resource cap rather than bad input.
    pub fn is_too_large(&self) -> bool {
        matches!(self, GroupPropsError::Perm(PermError::TooLarge { .. }))
    }
}
