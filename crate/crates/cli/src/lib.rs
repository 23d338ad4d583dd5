//! Command-line front end for the exact-arithmetic certification library.
//!
//! The library half of the binary: flag parsing and validation ([`config`]),
//! the stable report shape ([`report`]), and the command implementations
//! ([`commands`]). Keeping these in a lib target lets the integration tests
//! drive the exact code paths the binary runs.

pub mod commands;
pub mod config;
pub mod report;
