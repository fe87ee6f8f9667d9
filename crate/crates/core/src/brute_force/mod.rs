//! Explicit matrix models of PSL(2,q) for small q and of Sz(8), used as an
//! independent oracle for the closed-form class tables.

mod cache;
mod group;
mod matrix;
mod psl2;
mod suzuki;

use std::ops::Deref;

use thiserror::Error;

use crate::closed_form::{GroupError, GroupSpec};
use crate::finite_field::FieldError;

pub use cache::{load_or_build, read_cache, write_cache};
pub use group::{conjugacy_classes, MatrixGroup, TiReport, TiRow};
pub use matrix::{MatrixArith, MatrixElement, MAX_DIM};
pub use psl2::{enumerate_psl2, PSL2_BRUTE_FORCE_MAX_Q};
pub use suzuki::{generate_sz, suzuki_unipotent, SZ32_MEMORY_ESTIMATE};

#[derive(Debug, Error)]
pub enum BruteForceError {
    #[error("brute force unsupported for q={q}")]
    Unsupported { q: u64 },
    #[error("Sz(32) needs an explicit opt-in (about {SZ32_MEMORY_ESTIMATE} of memory)")]
    LargeGroupNotEnabled,
    #[error("closure exceeded {limit} elements")]
    ResourceLimit { limit: usize },
    #[error("generated group has order {found}, expected {expected}")]
    OrderMismatch { expected: u128, found: u128 },
    #[error("no element of order {0}")]
    NoElementOfOrder(usize),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not TI: conjugation by element {witness} leaves {intersection} common elements")]
    NotTi { witness: usize, intersection: usize },
    #[error("invalid group data: {0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
}

/// A fully enumerated PSL(2,q) or Sz(q).
#[derive(Debug, Clone)]
pub struct BruteForceGroup {
    spec: GroupSpec,
    group: MatrixGroup,
}

impl BruteForceGroup {
    pub(crate) fn new(spec: GroupSpec, group: MatrixGroup) -> Result<Self, BruteForceError> {
        if group.order() as u128 != spec.group_order {
            return Err(BruteForceError::OrderMismatch {
                expected: spec.group_order,
                found: group.order() as u128,
            });
        }
        Ok(BruteForceGroup { spec, group })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    /// Elements of order two.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| self.element_order(x) == 2)
            .collect()
    }
}

impl Deref for BruteForceGroup {
    type Target = MatrixGroup;

    fn deref(&self) -> &MatrixGroup {
        &self.group
    }
}
