use serde_json::{json, Map, Value};

/// Result of one command: human-readable lines plus a structured document.
/// Both are fully determined by the job, so repeated runs are byte-identical.
#[derive(Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub data: Map<String, Value>,
    /// Set when the command ran but found a failing check.
    pub failed: bool,
}

impl Report {
    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, key: &str, value: Value) {
        match self.data.entry(key.to_string()).or_insert_with(|| json!([])) {
            Value::Array(items) => items.push(value),
            _ => unreachable!("{key} holds a list"),
        }
    }

    pub fn render_text(&self, header: &str) -> String {
        let mut out = String::from(header);
        out.push('\n');
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }

    pub fn render_json(self, meta: Value) -> String {
        let mut doc = meta;
        doc["status"] = json!(if self.failed { "failed" } else { "ok" });
        doc["result"] = Value::Object(self.data);
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }
}
