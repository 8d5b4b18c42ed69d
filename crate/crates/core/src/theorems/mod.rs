//! Closed-form invariants and finite verifiers for the relations between
//! signature and crossing number.

mod enumerate;
mod formulas;
mod geography;
mod identify;
mod report;
mod smoothing;
mod verify;

use thiserror::Error;

use crate::garside3::GarsideError;
use crate::seifert::SeifertError;

pub use enumerate::{is_canonical, Symmetry, WordEnumerator};
pub use formulas::{murasugi_erle_sigma, positivity_predicate};
pub use geography::{geography_csv, geography_table, split_sum_fillers, GeographyRow, GeographyTable, EXCEPTIONS};
pub use identify::{
    crossing_number_3braid, link_report, link_report_two_bridge, CrossingNumber, CrossingStatus, LinkName, LinkReport,
    ThreeBraidCrossing,
};
pub use report::{Finding, Report, Violation};
pub use smoothing::{smooth, t2c_smoothing_candidates, SmoothingCandidate};
pub use verify::{
    check_main_omissions, verify_inequality, verify_main_theorem, verify_smoothing_lemma, verify_t2c_theorem, Sharding,
    DEFAULT_SAMPLES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Garside(#[from] GarsideError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error("expected a 3-strand word, got {0} strands")]
    NotThreeStrands(usize),
    #[error("closure of `{0}` is split; some generator is missing")]
    Split(String),
    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("{0}")]
    InvalidParameter(String),
}
