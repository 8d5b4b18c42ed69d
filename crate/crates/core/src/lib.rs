//! Exact invariants of braid closures and 2-bridge links.
//!
//! The crate computes signatures and nullities from Seifert matrices and
//! Goeritz matrices, solves the word and conjugacy problems in the 3-strand
//! braid group with Garside normal forms, classifies 3-braids into Murasugi's
//! seven conjugacy families, and runs finite verifiers for the relations
//! between signature and crossing number (`σ = 1 − cr`, `σ = 2 − cr`) and for
//! the crossing-number/signature geography table.

pub mod braid;
pub mod cli;
pub mod garside3;
pub mod planar;
pub mod seifert;
pub mod symform;
pub mod theorems;
pub mod twobridge;

pub use braid::{parse_braid, BraidWord, ClosureStats, ParseError};
pub use garside3::{GarsideNormalForm, MurasugiClass, PermutationBraid};
pub use seifert::{seifert_matrix, signature_nullity_of_closure};
pub use symform::SymBilinearForm;
pub use theorems::{LinkName, LinkReport, Report};
pub use twobridge::{parse_conway, ConwayDiagram};



