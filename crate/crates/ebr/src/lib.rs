//! Command-line front end, file formats and caching for `ebr-core`.

pub mod cache;
pub mod cli;
pub mod compute;
pub mod document;
pub mod expr;
pub mod verify;
