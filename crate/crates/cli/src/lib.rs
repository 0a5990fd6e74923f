//! Batch front end: spec files, computations, predicates, the law suite and
//! the worked-example goldens.

pub mod commands;
pub mod golden;
pub mod spec;

pub use commands::{run, Cli, CliError, Output};
pub use spec::{parse_spec, SpecDocument, SpecError};
