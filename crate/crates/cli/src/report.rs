//! Report files and their table rendering.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    pub schema: u32,
    pub command: Vec<String>,
    /// SHA-256 of the canonical instance, absent for instance-free commands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub records: Vec<Value>,
    pub status: i32,
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One `key  value` line per scalar field, records separated by blank lines.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (i, record) in self.records.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            flatten("", record, &mut out);
        }
        out.push_str(&format!("\nstatus  {}\n", self.status));
        out
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}  [{}]\n", parts.join(", ")));
        }
        v => out.push_str(&format!("{prefix}  {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
