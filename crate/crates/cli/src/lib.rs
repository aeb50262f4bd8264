//! Command-line front end: claim registry, reports and text dumps.

pub mod claims;
pub mod format;
pub mod report;
