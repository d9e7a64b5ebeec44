//! Command reports: a flat `key: value` text form and a JSON form.

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    /// Hex SHA-256 of every input byte read, in order.
    pub inputs_sha256: String,
    pub status: Status,
    pub result: Map<String, Value>,
}

pub(crate) struct Inputs(Sha256);

impl Inputs {
    pub fn new() -> Inputs {
        Inputs(Sha256::new())
    }

    pub fn add(&mut self, bytes: &[u8]) {
        self.0.update(bytes);
    }

    pub fn hex(self) -> String {
        self.0.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::Array(a)
            if a.iter().any(|x| match x {
                Value::String(s) => s.contains(char::is_whitespace),
                other => other.is_object() || other.is_array(),
            }) =>
        {
            for (i, v) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        Value::Array(a) => {
            let words: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), words.join(" ")));
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Error => 1,
        }
    }

    /// One `key: value` line per leaf, nested keys joined with dots.
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            ("command".to_string(), self.command.clone()),
            ("inputs_sha256".to_string(), self.inputs_sha256.clone()),
            ("status".to_string(), self.status.as_str().to_string()),
        ];
        flatten("", &Value::Object(self.result.clone()), &mut lines);
        lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("inputs_sha256".into(), Value::String(self.inputs_sha256.clone()));
        m.insert("status".into(), Value::String(self.status.as_str().into()));
        m.insert("result".into(), Value::Object(self.result.clone()));
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_flattening() {
        let Value::Object(result) = json!({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": "x"}], "f": null, "g": ["p q", "r"]}) else {
            unreachable!()
        };
        let r = Report {
            command: "x".into(),
            inputs_sha256: Inputs::new().hex(),
            status: Status::Ok,
            result,
        };
        let text = r.to_text();
        assert!(text.contains("inputs_sha256: e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855\n"));
        assert!(text.ends_with("a: 1\nb.c: 1 2\nd.0.e: x\nf: none\ng.0: p q\ng.1: r\n"));
    }
}
