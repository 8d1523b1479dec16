//! Text format and command implementations behind the `torelli` binary.

pub mod commands;
pub mod format;
