//! HOA input/output and the `sccdet` command-line tool.

pub mod cli;
pub mod hoa;
