//! Configuration files, subcommands and the acceptance suite for `lfactor-core`.

pub mod acceptance;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
