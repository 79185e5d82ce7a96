//! Command line, file formats and the verification runner for `spreadpoly-core`.
//!
//! The binary is a thin wrapper over [`cli::run`], which maps an argv to an
//! exit code plus buffered stdout/stderr so the whole surface can be exercised
//! in-process.

pub mod cli;
pub mod fixture;
pub mod format;
pub mod verify;
