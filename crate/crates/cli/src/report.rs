//! Run reports: enough to replay a command and check what it did.

use std::path::Path;
use std::time::Duration;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    /// Arguments after the program name.
    pub command: Vec<String>,
    /// `(path, sha256)` of every input file, in reading order.
    pub inputs: Vec<(String, String)>,
    pub result_size: Option<usize>,
    /// `None` when timing is switched off for byte-stable reports.
    pub wall_time: Option<Duration>,
    pub counters: Map<String, Value>,
    pub solver: String,
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push((path.display().to_string(), sha256_hex(bytes)));
    }

    pub fn counter(&mut self, key: &str, value: impl Into<Value>) {
        self.counters.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> Value {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|(path, digest)| json!({ "path": path, "sha256": digest }))
            .collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "result_size": self.result_size,
            "wall_time_ms": self.wall_time.map(|d| (d.as_secs_f64() * 1e6).round() / 1e3),
            "counters": self.counters,
            "solver": self.solver,
            "version": env!("CARGO_PKG_VERSION"),
            "seed": self.seed.map_or(json!("none"), |s| json!(s)),
        })
    }
}
