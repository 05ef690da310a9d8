//! Structured run reports for the command-line surface.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::time::Instant;

/// Exit code for input or feasibility errors.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for a verification mismatch.
pub const EXIT_MISMATCH: i32 = 3;

/// Verdict of a cross-check between two computation routes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    Mismatch,
}

/// One comparison performed during a command, with both sides verbatim.
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub label: String,
    pub left: String,
    pub right: String,
    pub verdict: Verdict,
}

/// What a command did and produced; exit code 0 iff no mismatch and no error.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub result: Value,
    pub comparisons: Vec<Comparison>,
    pub wall_time_ms: u128,
}

/// Builds a report while timing the command.
pub struct ReportBuilder {
    command: String,
    inputs_digest: String,
    comparisons: Vec<Comparison>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(command: &str, inputs: &impl Serialize) -> Self {
        let canon = serde_json::to_string(inputs).unwrap_or_default();
        let digest = hex_digest(canon.as_bytes());
        Self {
            command: command.to_string(),
            inputs_digest: digest,
            comparisons: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn compare(&mut self, label: &str, left: String, right: String) -> Verdict {
        let verdict = if left == right {
            Verdict::Equal
        } else {
            Verdict::Mismatch
        };
        self.comparisons.push(Comparison {
            label: label.to_string(),
            left,
            right,
            verdict,
        });
        verdict
    }

    pub fn finish(self, result: Value) -> RunReport {
        RunReport {
            command: self.command,
            inputs_digest: self.inputs_digest,
            result,
            comparisons: self.comparisons,
            wall_time_ms: self.started.elapsed().as_millis(),
        }
    }
}

impl RunReport {
    pub fn has_mismatch(&self) -> bool {
        self.comparisons.iter().any(|c| c.verdict == Verdict::Mismatch)
    }

    pub fn exit_code(&self) -> i32 {
        if self.has_mismatch() {
            EXIT_MISMATCH
        } else {
            0
        }
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().take(8).map(|b| format!("{b:02x}")).collect()
}
