//! Explicit FA-modules and a natural-transformation solver used to check the closed forms.

pub mod checks;
pub mod functor;
pub mod hom;
pub mod models;
pub mod presentation;
pub mod setmap;

use serde::{Deserialize, Serialize};

pub use functor::{Descriptor, SchurBase, TruncatedFunctor};
pub use hom::{nat_hom, NatHomResult, Route};
pub use setmap::SetMap;

/// The outcome of one verified claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub parameters: serde_json::Value,
    pub expected: serde_json::Value,
    pub computed: serde_json::Value,
    pub pass: bool,
}

impl ClaimReport {
    pub fn new(
        claim: &str,
        parameters: serde_json::Value,
        expected: serde_json::Value,
        computed: serde_json::Value,
        pass: bool,
    ) -> Self {
        ClaimReport { claim: claim.to_string(), parameters, expected, computed, pass }
    }
}
