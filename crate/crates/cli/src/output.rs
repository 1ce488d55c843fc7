//! Rendering command results as JSON, CSV or text.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use carlitz_core::verify::SuiteReport;
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; expected json, csv or text")),
        }
    }
}

/// A result prepared in all three encodings.
pub struct Rendered {
    json: Value,
    csv: String,
    text: String,
}

impl Rendered {
    pub fn new(json: Value, header: &[&str], rows: Vec<Vec<String>>, text: String) -> Self {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).expect("in-memory write");
        for row in rows {
            w.write_record(&row).expect("in-memory write");
        }
        let csv =
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8");
        Rendered { json, csv, text }
    }

    pub fn report(r: SuiteReport) -> Self {
        Rendered {
            json: r.to_json(),
            csv: r.to_csv(),
            text: r.to_text(),
        }
    }

    pub fn encode(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
            Format::Text => self.text.clone(),
        }
    }
}

pub fn emit(r: &Rendered, format: Format, path: Option<&Path>) -> std::io::Result<()> {
    let body = r.encode(format);
    match path {
        Some(p) => std::fs::write(p, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

/// Prints a JSON error record to stderr and returns exit status 2.
pub fn fail(kind: &str, message: &str) -> ExitCode {
    let rec = json!({"error": {"kind": kind, "message": message}});
    eprintln!("{rec}");
    ExitCode::from(2)
}
