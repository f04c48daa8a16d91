//! Seeded verification suites and grid export for `twistor-core`.

pub mod checks;
pub mod grid;
pub mod report;
pub mod sample;
pub mod seed;

pub use grid::{export_grid, AxisSpec, GridExport, GridField};
pub use report::{run_suite, CheckRecord, SuiteReport, SCHEMA};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown grid field `{0}`")]
    UnknownField(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error("invalid axes: {0}")]
    InvalidAxes(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
