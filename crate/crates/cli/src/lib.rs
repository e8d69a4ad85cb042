//! Command-line front end for `alexq-core`: argument handling, the bundled
//! knot dataset, JSON output, and the table verification report.

pub mod commands;
pub mod dataset;
pub mod report;
