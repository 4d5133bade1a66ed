//! Machine-readable run reports.
//!
//! Every command prints JSON on stdout and a short human summary on
//! stderr. Reports are deterministic: fixed field order, sorted content,
//! no timestamps. Exit codes: 0 affirmative, 1 negative or inconclusive,
//! 2 input error.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub verdict: String,
    pub details: serde_json::Value,
    pub exit_code: i32,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn digest_bytes(path: &Path, bytes: &[u8]) -> InputDigest {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut sha256 = String::with_capacity(64);
    for byte in digest {
        sha256.push_str(&format!("{byte:02x}"));
    }
    InputDigest {
        path: path.display().to_string(),
        sha256,
    }
}
