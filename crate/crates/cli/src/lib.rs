//! File formats, the parallel solver driver and the command layer behind the
//! `twistcube` binary.

pub mod cli;
pub mod document;
pub mod dot;
pub mod error;
pub mod manifest;
pub mod parallel;
pub mod spec_file;

pub use document::GraphDocument;
pub use error::{CliError, FormatError};
