//! Randomized checking harness, input/output formats and command-line
//! front end for [`lorentz_core`].
//!
//! The suites in [`suite`] sample simple functions, sequences and index grids
//! ([`generate`]), run the inequality checks of the core crate on them and
//! aggregate the outcome into a [`RunReport`]. Runs are deterministic in the
//! seed: see [`suite`] for the generator layout.

pub mod config;
pub mod error;
pub mod generate;
pub mod input;
pub mod report;
pub mod suite;

pub use config::SuiteConfig;
pub use error::HarnessError;
pub use input::{parse_input, parse_input_path, Document, Input};
pub use report::{emit_norm_table, emit_report, Format, NormRow};
pub use suite::{run_suite, FailureRecord, RunReport, Suite};
