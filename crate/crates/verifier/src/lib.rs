//! Enumeration engines, proposition sweeps and census tables over the
//! `setfam` core.
//!
//! Every sweep is deterministic for a given [`ScopeConfig`]: sampled inputs
//! are drawn from a seeded ChaCha stream before checking starts, checks run
//! in parallel, and the first failing instance in generation order is the
//! one reported.

pub mod census;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod report;
pub mod sample;
pub mod shrink;
pub mod sweeps;

pub use census::{census, CensusTable};
pub use enumerate::{enumerate_families, monotone_tables, FamilyFilter, ENUMERATION_MAX};
pub use error::VerifierError;
pub use report::SweepReport;
pub use sweeps::{run_all, run_sweep, ScopeConfig, SWEEP_IDS};
