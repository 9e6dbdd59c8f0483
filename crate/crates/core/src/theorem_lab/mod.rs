//! Exhaustive checks over enumerated finite spaces and the catalog.

pub mod enumerate;
pub mod expr;
pub mod suite;

pub use enumerate::{canonical_code, canonical_form, enumerate_posets, MAX_ENUMERATION};
pub use expr::{Expr, EXTENDED_FLAGS};
pub use suite::{
    catalog_suite, find_counterexample, implications, run_implication_suite, space_facts, Counterexample,
    ImplicationSpec, SpaceFacts, SuiteResult, Violation, IMPLICATIONS,
};
