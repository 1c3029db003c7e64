//! Machine-readable run reports.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Outcome of one subcommand. Two runs on the same input and seed give the
/// same report apart from `elapsed_ms`.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: Option<String>,
    pub outcome: Value,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
}

/// Hex SHA-256 of the raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
