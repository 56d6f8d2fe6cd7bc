//! The per-invocation run record written to stderr.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub args: Vec<String>,
    /// SHA-256 of the input file, when the command read one.
    pub input_sha256: Option<String>,
    pub elapsed_ms: u128,
    pub outcome: &'static str,
    pub exit_code: i32,
}

impl RunManifest {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("manifests serialise")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}
