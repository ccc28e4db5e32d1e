//! Experiment reports with a stable JSON and CSV encoding.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error("serialization failed: {0}")]
    Serialize(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub experiment: String,
    /// Seconds since the epoch from `SOURCE_DATE_EPOCH`, absent otherwise.
    pub timestamp: Option<String>,
    pub inputs: Value,
    /// SHA-256 of the compact JSON encoding of `inputs`.
    pub inputs_digest: String,
    pub cutoffs: Value,
    pub values: Value,
    pub verdicts: Map<String, Value>,
    /// Mathematical statements the experiment instantiates.
    #[serde(rename = "paper_anchor")]
    pub anchors: Vec<String>,
    pub notes: Vec<String>,
    pub table: Option<Table>,
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, ReportError> {
    serde_json::to_value(v).map_err(|e| ReportError::Serialize(e.to_string()))
}

pub fn digest(inputs: &Value) -> String {
    let bytes = serde_json::to_vec(inputs).expect("values always encode");
    hex::encode(Sha256::digest(&bytes))
}

impl Report {
    pub fn new<T: Serialize>(experiment: &str, inputs: &T, anchors: &[&str]) -> Result<Self, ReportError> {
        let inputs = to_value(inputs)?;
        Ok(Report {
            experiment: experiment.to_string(),
            timestamp: std::env::var("SOURCE_DATE_EPOCH")
                .ok()
                .filter(|s| s.parse::<u64>().is_ok()),
            inputs_digest: digest(&inputs),
            inputs,
            cutoffs: Value::Null,
            values: Value::Null,
            verdicts: Map::new(),
            anchors: anchors.iter().map(|s| s.to_string()).collect(),
            notes: Vec::new(),
            table: None,
        })
    }

    pub fn values<T: Serialize>(mut self, v: &T) -> Result<Self, ReportError> {
        self.values = to_value(v)?;
        Ok(self)
    }

    pub fn cutoffs<T: Serialize>(mut self, v: &T) -> Result<Self, ReportError> {
        self.cutoffs = to_value(v)?;
        Ok(self)
    }

    pub fn verdict<T: Serialize>(mut self, name: &str, v: &T) -> Result<Self, ReportError> {
        self.verdicts.insert(name.to_string(), to_value(v)?);
        Ok(self)
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    pub fn table(mut self, headers: &[&str], rows: Vec<Vec<Value>>) -> Self {
        self.table = Some(Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always encode");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        serde_json::from_str(text).map_err(|e| ReportError::Serialize(e.to_string()))
    }

    /// The table if present, otherwise one `path,value` row per leaf of
    /// `values`.
    pub fn to_csv(&self) -> Result<String, ReportError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| ReportError::Serialize(e.to_string());
        match &self.table {
            Some(t) => {
                w.write_record(&t.headers).map_err(err)?;
                for row in &t.rows {
                    w.write_record(row.iter().map(cell)).map_err(err)?;
                }
            }
            None => {
                w.write_record(["path", "value"]).map_err(err)?;
                let mut leaves = Vec::new();
                flatten("", &self.values, &mut leaves);
                for (k, v) in leaves {
                    w.write_record([k, v]).map_err(err)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| ReportError::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| ReportError::Serialize(e.to_string()))
    }

    pub fn render(&self, format: Format) -> Result<String, ReportError> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(a) => {
            for (i, v) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        leaf => out.push((prefix.to_string(), cell(leaf))),
    }
}

/// Writes the rendered report to `path`, or returns it for stdout.
pub fn emit(report: &Report, format: Format, path: Option<&Path>) -> Result<String, ReportError> {
    let text = report.render(format)?;
    if let Some(path) = path {
        std::fs::write(path, &text).map_err(|e| ReportError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
    }
    Ok(text)
}
