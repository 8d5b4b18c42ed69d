//! Garside theory of the 3-strand braid group: left-canonical forms,
//! cycling, super summit sets and Murasugi's classification.

mod murasugi;
mod normal_form;
mod simple;
mod summit;

use thiserror::Error;

pub use murasugi::{murasugi_class, MurasugiClass};
pub use normal_form::{cycling, equal_in_b3, inf_sup, left_canonical_form, tau, GarsideNormalForm};
pub use simple::{PermutationBraid, ALL_SIMPLES};
pub use summit::{
    conjugacy_test, conjugate_to_positive, summit_inf, summit_inf_sup, super_summit_set, EXPLORATION_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("expected a 3-strand braid, got {0} strands")]
    NotThreeStrands(usize),
    #[error("delta power, cycling undefined")]
    PureDeltaPower,
    #[error("summit exploration exceeded {} elements", EXPLORATION_CAP)]
    ExplorationCap,
    #[error("internal error: no Murasugi family matched {0}")]
    Unclassified(String),
    #[error("internal error: several Murasugi families matched {0}")]
    AmbiguousClass(String),
}
