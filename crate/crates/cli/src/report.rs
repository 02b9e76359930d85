use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

/// Reads a file and records its digest.
pub fn read_input(path: &Path, inputs: &mut Vec<Input>) -> anyhow::Result<Vec<u8>> {
    let bytes = std::fs::read(path).map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let digest = Sha256::digest(&bytes);
    let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
    inputs.push(Input { path: path.display().to_string(), sha256 });
    Ok(bytes)
}

/// Result of one command: an exit code, human text and a JSON payload.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Vec<Input>,
    pub exit: u8,
    pub text: String,
    pub result: Value,
    pub wall_seconds: Option<f64>,
}

impl Outcome {
    pub fn print(&self, json: bool) {
        if json {
            let mut report = json!({
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "exit_code": self.exit,
            });
            if let Some(s) = self.wall_seconds {
                report["wall_seconds"] = json!(s);
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        } else {
            print!("{}", self.text);
        }
    }
}

pub struct InputError(pub anyhow::Error);

impl InputError {
    pub fn print(&self, json: bool) {
        if json {
            let report = json!({ "error": format!("{:#}", self.0), "exit_code": 2 });
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        eprintln!("error: {:#}", self.0);
    }
}
