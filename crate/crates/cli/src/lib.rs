//! Job files, reports and SVG figures on top of the `logfutaki` engine.

#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod cli;
pub mod error;
pub mod figure;
pub mod job;
pub mod report;

pub use error::CliError;
pub use figure::{emit_figure, render_figure, FigureLayout, SvgStyle, STYLE};
pub use job::{parse_job, JobSpec, PolytopeSource, SupportSpec};
pub use report::{run_job, Report, View};
