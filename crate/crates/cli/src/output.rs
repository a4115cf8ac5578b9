use serde_json::{Map, Value};

use cbrauer::{Error, Result};

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

/// A command's result in every format it supports.
pub struct Output {
    pub command: &'static str,
    pub json: Map<String, Value>,
    pub text: String,
    pub csv: Option<String>,
    pub dot: Option<String>,
}

impl Output {
    pub fn new(command: &'static str, text: impl Into<String>) -> Self {
        Output {
            command,
            json: Map::new(),
            text: text.into(),
            csv: None,
            dot: None,
        }
    }

    pub fn field(mut self, key: &str, value: impl serde::Serialize) -> Result<Self> {
        self.json.insert(key.to_string(), serde_json::to_value(value)?);
        Ok(self)
    }

    pub fn render(self, format: Format) -> Result<String> {
        let unsupported = || Error::Validation(format!("{} has no {format:?} output", self.command));
        match format {
            Format::Text => Ok(ensure_newline(self.text)),
            Format::Csv => self.csv.map(ensure_newline).ok_or_else(unsupported),
            Format::Dot => self.dot.map(ensure_newline).ok_or_else(unsupported),
            Format::Json => {
                let mut obj = self.json;
                obj.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
                obj.insert("command".into(), Value::from(self.command));
                Ok(ensure_newline(serde_json::to_string_pretty(&Value::Object(obj))?))
            }
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Validation(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
