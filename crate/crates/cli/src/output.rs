//! Rendering of a result record in the three output formats.
//!
//! A record is a JSON object. `tsv` prints a header row of keys and one row
//! of values; `human` prints `key: value` lines. Nested values are written
//! as compact JSON in both, so every format carries the same values.

use serde_json::{Map, Value};

use crate::args::Format;

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render(record: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let keys: Vec<&str> = record.keys().map(String::as_str).collect();
            let values: Vec<String> = record.values().map(|v| cell(v).replace(['\t', '\n'], " ")).collect();
            format!("{}\n{}\n", keys.join("\t"), values.join("\t"))
        }
        Format::Human => record.iter().map(|(k, v)| format!("{k}: {}\n", cell(v))).collect(),
    }
}

/// Converts any serializable value to a record; non-objects are wrapped as
/// `{"value": ...}`.
pub fn to_record<T: serde::Serialize>(value: &T) -> Map<String, Value> {
    match serde_json::to_value(value).expect("results serialize") {
        Value::Object(map) => map,
        other => {
            let mut map = Map::new();
            map.insert("value".into(), other);
            map
        }
    }
}
