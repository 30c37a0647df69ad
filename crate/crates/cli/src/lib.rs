//! Library side of the `pdirac` command-line tool: scenario parsing, subcommands and
//! report rendering.

pub mod commands;
pub mod report;
pub mod scenario;
