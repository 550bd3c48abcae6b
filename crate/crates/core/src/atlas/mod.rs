//! Asymptotic bounds and the end-to-end pipeline driver.

mod bounds;
mod csv;
mod pipeline;

pub use bounds::*;
pub use csv::{emit_csv, parse_csv, read_csv, write_csv};
pub use pipeline::{pipeline_build, PipelineConfig, PipelineReport, StageSummary};
