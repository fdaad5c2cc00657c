//! Exact computations for representations of the category FA of finite sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`] — integer partitions and Young-diagram predicates;
//! * [`symrep`] — symmetric-group characters, induction and permutation characters;
//! * [`fbgroth`] — Grothendieck groups of FB-modules and FB-bimodules up to a truncation degree;
//! * [`facalc`] — closed-form hom-space formulas and composition-factor multiplicities;
//! * [`oracle`] — explicit matrix realizations of FA-modules and a natural-transformation solver;
//! * [`verify`] — named suites that compare the closed forms with the oracle.

pub mod error;
pub mod facalc;
pub mod fbgroth;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod symrep;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{RationalMatrix, Q};
pub use partitions::Partition;
