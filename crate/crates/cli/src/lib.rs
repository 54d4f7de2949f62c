//! Batch verification driver and data exporter for the K3 reconstruction.

pub mod checks;
pub mod context;
pub mod export;
pub mod report;

pub use checks::{run_checks, Suite};
pub use context::{Context, Options};
pub use report::{CheckReport, Report, Status};
