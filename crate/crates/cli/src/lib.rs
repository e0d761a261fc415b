//! Library side of the command-line front end: configuration, the batch
//! verification suite, command handlers, and report writers. The binary in
//! `main.rs` is a thin argument-parsing shell over these.

pub mod checks;
pub mod commands;
pub mod config;
pub mod report;
