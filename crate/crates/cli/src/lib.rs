//! Suite runner behind the `twin` binary.
//!
//! Each suite expands a [`SuiteConfig`] into independent cases, runs them on
//! a worker pool, and collects a [`RunReport`] in case order. Case ids are
//! self-describing, so any single case can be re-run with [`replay`].

pub mod config;
pub mod error;
pub mod report;
pub mod suites;

pub use config::{Budgets, Suite, SuiteConfig};
pub use error::{HarnessError, Result};
pub use report::{CaseRecord, Counts, Relation, RunReport, Status};
pub use suites::{cmd_blockclaims, cmd_guarantees, cmd_lcs_tail, cmd_tables, cmd_twinbound, replay, run_suite};
