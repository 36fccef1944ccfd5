//! Command-line front end: argument handling plus the verification,
//! equivalence and operation-count reports.

pub mod app;
pub mod equiv;
pub mod stats;
pub mod verify;

pub use app::run;
