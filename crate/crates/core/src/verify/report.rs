//! Suite reports and their JSON, CSV and text encodings.

use std::time::Duration;

use num_rational::Ratio;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// How a case was decided.
#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    /// Exact equality of exact objects.
    Exact,
    /// Equality below a certified precision.
    Certified { prec: i64 },
    /// A defect exponent compared with a bound; `None` when the defect was
    /// only bounded, not resolved.
    Defect {
        exponent: Option<Ratio<i64>>,
        bound: Ratio<i64>,
    },
}

impl Check {
    fn kind(&self) -> &'static str {
        match self {
            Check::Exact => "exact",
            Check::Certified { .. } => "certified",
            Check::Defect { .. } => "defect",
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Check::Exact => json!({"kind": "exact"}),
            Check::Certified { prec } => json!({"kind": "certified", "prec": prec}),
            Check::Defect { exponent, bound } => json!({
                "kind": "defect",
                "exponent": exponent.map(|e| e.to_string()),
                "bound": bound.to_string(),
            }),
        }
    }

    fn summary(&self) -> String {
        match self {
            Check::Exact => "exact".into(),
            Check::Certified { prec } => format!("certified@{prec}"),
            Check::Defect {
                exponent: Some(e),
                bound,
            } => format!("defect r^{e} <= r^{bound}"),
            Check::Defect {
                exponent: None,
                bound,
            } => format!("defect unresolved, bound r^{bound}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub id: String,
    pub inputs: Value,
    pub pass: bool,
    pub check: Check,
    pub detail: String,
    pub elapsed: Option<Duration>,
}

impl CaseReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "inputs": self.inputs,
            "pass": self.pass,
            "check": self.check.to_json(),
            "detail": self.detail,
        });
        if let Some(t) = self.elapsed {
            v["elapsed_ms"] = json!(t.as_secs_f64() * 1e3);
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "pass": self.pass(),
            "cases": self.cases.iter().map(CaseReport::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let timed = self.cases.iter().any(|c| c.elapsed.is_some());
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "suite", "id", "pass", "check", "defect", "bound", "inputs", "detail",
        ];
        if timed {
            header.push("elapsed_ms");
        }
        w.write_record(&header).expect("in-memory write");
        for c in &self.cases {
            let (defect, bound) = match &c.check {
                Check::Defect { exponent, bound } => (
                    exponent.map(|e| e.to_string()).unwrap_or_default(),
                    bound.to_string(),
                ),
                Check::Certified { prec } => (String::new(), prec.to_string()),
                Check::Exact => (String::new(), String::new()),
            };
            let mut rec = vec![
                self.suite.clone(),
                c.id.clone(),
                c.pass.to_string(),
                c.check.kind().to_string(),
                defect,
                bound,
                c.inputs.to_string(),
                c.detail.clone(),
            ];
            if timed {
                rec.push(
                    c.elapsed
                        .map(|t| format!("{:.3}", t.as_secs_f64() * 1e3))
                        .unwrap_or_default(),
                );
            }
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mut line = format!(
                "{} {} [{}]",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.check.summary()
            );
            if !c.detail.is_empty() {
                line.push_str(": ");
                line.push_str(&c.detail);
            }
            if let Some(t) = c.elapsed {
                line.push_str(&format!(" ({:.1} ms)", t.as_secs_f64() * 1e3));
            }
            out.push_str(&line);
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "suite {}: {} ({} cases, {} failed)\n",
            self.suite,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.cases.len(),
            failed
        ));
        out
    }
}
