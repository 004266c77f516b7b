//! Library side of the `cpw` command-line driver.

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;
