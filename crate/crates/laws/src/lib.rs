//! Property-law harness: every proposition of the theory as an executable
//! law, quantified over enumerated or seeded IF submodules, evaluated on an
//! optimized and a definitional route, with shrinking and stable reports.

pub mod budget;
pub mod catalog;
pub mod generate;
pub mod laws;
pub mod ops;
pub mod oracle;
pub mod paper;
pub mod report;
pub mod shrink;
pub mod suite;

use thiserror::Error;

pub use budget::{parse_grid, InstanceBudget, ModuleSource};
pub use catalog::{LawId, CATALOG};
pub use report::{LawReport, Status, SuiteReport};
pub use suite::{check_law, run_laws, run_suite, Universe};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid budget module: {0}")]
    Algebra(#[from] ifmod_core::algebra::AlgebraError),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}
