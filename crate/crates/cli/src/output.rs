use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use shadowsum_core::Complex64;

/// One run of a subcommand, as printed.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub command: String,
    /// SHA-256 of the input file bytes; absent when no file was read.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<[f64; 2]>,
    /// `"pass"` or `"fail"` for checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    pub diagnostics: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl RunResult {
    pub fn new(command: impl Into<String>, digest: Option<String>) -> Self {
        RunResult {
            command: command.into(),
            digest,
            ..Default::default()
        }
    }

    pub fn set_value(&mut self, z: Complex64) {
        self.value = Some(pair(z));
    }

    pub fn diag(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("diagnostics serialize");
        self.diagnostics.insert(key.to_string(), v);
    }

    pub fn passed(&self) -> bool {
        self.status.as_deref() != Some("fail")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("results serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "command: {}", self.command).unwrap();
        if let Some(d) = &self.digest {
            writeln!(s, "digest: {d}").unwrap();
        }
        if let Some([re, im]) = self.value {
            writeln!(s, "value: [{re}, {im}]").unwrap();
        }
        if let Some(st) = &self.status {
            writeln!(s, "status: {st}").unwrap();
        }
        for (k, v) in &self.diagnostics {
            writeln!(s, "{k}: {v}").unwrap();
        }
        if let Some(t) = self.wall_time_ms {
            writeln!(s, "wall_time_ms: {t:.3}").unwrap();
        }
        s
    }
}

pub fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}
