//! File formats, output records, the verification suite and the command-line
//! driver built on `paradromic-core`.

pub mod cli;
pub mod record;
pub mod relations;
pub mod verify;

pub use cli::{run, run_verify};
