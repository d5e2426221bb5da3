//! File formats, reports and experiment suites on top of `kholes-core`.

pub mod growth;
pub mod io;
pub mod report;
pub mod suites;

pub use kholes_core;
