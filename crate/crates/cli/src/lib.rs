//! Command-line surface for `hocolim-core`: an expression language over
//! loaded documents, property suites and JSON reports.

pub mod app;
pub mod docs;
pub mod eval;
pub mod report;
pub mod suites;
pub mod syntax;
