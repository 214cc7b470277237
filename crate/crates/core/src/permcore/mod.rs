//! Permutations, permutation groups and the Schreier–Sims engine.

mod chain;
mod group;
mod io;
mod perm;

pub use chain::StabChain;
pub use group::{PermGroup, DEFAULT_ENUM_CAP};
pub use io::{parse_group_file, RawGroupFile};
pub use perm::Permutation;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PermError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a bijection: {images:?}")]
    NotABijection { images: Vec<usize> },
    #[error("permutation groups need a positive degree")]
    ZeroDegree,
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: BigUint, cap: u64 },
    #[error("malformed group file: {0}")]
    Malformed(String),
}
