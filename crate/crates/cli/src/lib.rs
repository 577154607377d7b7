//! File formats, JSON documents, run reports and the `updom` command line
//! built on `updom-core`.

pub mod cli;
pub mod formats;
pub mod json;
pub mod report;

pub use cli::run;
