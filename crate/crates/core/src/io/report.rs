//! Run reports: what went in, what was done, what came out.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Serializes with sorted keys (serde_json maps are ordered) and integer
/// wall time, so two runs differ only in `wall_time_ms`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    /// Input name to SHA-256 hex digest.
    pub inputs: BTreeMap<String, String>,
    pub operation: String,
    pub params: Value,
    pub results: Value,
    pub wall_time_ms: u64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunReport {
    pub fn new(operation: impl Into<String>, params: Value) -> RunReport {
        RunReport {
            inputs: BTreeMap::new(),
            operation: operation.into(),
            params,
            results: Value::Null,
            wall_time_ms: 0,
        }
    }

    pub fn add_input_bytes(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.insert(name.into(), sha256_hex(bytes));
    }

    pub fn add_input_file(&mut self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let bytes = std::fs::read(path)?;
        self.add_input_bytes(path.display().to_string(), &bytes);
        Ok(())
    }

    pub fn finish(mut self, results: Value, started: Instant) -> RunReport {
        self.results = normalize(results);
        self.wall_time_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&normalize(serde_json::to_value(self).expect("report serializes")))
            .expect("report serializes");
        s.push('\n');
        s
    }
}

/// Rebuilds every object so keys come out sorted regardless of how the value
/// was assembled.
fn normalize(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<String, Value> = map.into_iter().map(|(k, v)| (k, normalize(v))).collect();
            Value::Object(sorted.into_iter().collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digests_are_sha256() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn keys_are_sorted() {
        let mut r = RunReport::new("op", json!({"b": 1, "a": 2}));
        r.add_input_bytes("x", b"");
        let r = r.finish(json!({"z": {"y": 1, "x": 2}, "a": []}), Instant::now());
        let text = r.to_json();
        let pos = |k: &str| text.find(k).unwrap();
        assert!(pos("\"inputs\"") < pos("\"operation\""));
        assert!(pos("\"operation\"") < pos("\"params\""));
        assert!(pos("\"results\"") < pos("\"wall_time_ms\""));
        assert!(pos("\"x\": 2") < pos("\"y\": 1"));
    }
}
