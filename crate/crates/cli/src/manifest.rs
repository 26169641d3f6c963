//! Run manifest: enough to identify the inputs of a run and compare its
//! result with a rerun.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Manifest {
    pub command: String,
    pub args: Vec<String>,
    /// `(path, sha256)` of every file read, in read order.
    pub input_hashes: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub versions: BTreeMap<&'static str, &'static str>,
    pub wall_seconds: f64,
    pub exit_code: u8,
    /// Deterministic part of the result; equal across reruns.
    pub summary: Value,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn versions() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([("vic", env!("CARGO_PKG_VERSION")), ("manifest", "1")])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sha_of_empty_input() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
