//! Verification harness: a catalog of exact checks over `mv-core`, run
//! concurrently and reported as JSON or text, plus table export.

pub mod checks;
pub mod config;
pub mod report;
pub mod tables;

pub use checks::{run_check, CheckResult, Status, CATALOG};
pub use config::{CheckConfig, Format};
pub use report::{run_suites, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Core(#[from] mv_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
