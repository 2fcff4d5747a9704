//! File formats, reports and command implementations for the `eigencong`
//! binary.

pub mod app;
pub mod fetch;
pub mod file;
pub mod report;
