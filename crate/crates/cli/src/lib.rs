//! Reading algebra files and running the `snalab` commands.

pub mod commands;
pub mod dot;
pub mod format;
