//! Structured command reports, rendered as text or JSON.
//!
//! JSON field order is alphabetical within each object, so identical
//! invocations print identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    ContradictionWithPaper,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::ContradictionWithPaper => "contradiction-with-paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Value::Object(Default::default()),
            findings: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        if let Value::Object(map) = &mut self.results {
            map.insert(key.to_string(), to_value(value));
        }
    }

    pub fn finding(&mut self, name: &str, outcome: Outcome, detail: impl Into<String>) {
        self.findings.push(Finding {
            name: name.to_string(),
            outcome,
            detail: detail.into(),
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if !self.inputs.is_empty() {
            out.push_str("inputs:\n");
            for (k, v) in &self.inputs {
                writeln!(out, "  {k} = {}", scalar(v)).unwrap();
            }
        }
        out.push_str("results:\n");
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                render_value(&mut out, k, v, 1);
            }
        }
        if !self.findings.is_empty() {
            out.push_str("findings:\n");
            for f in &self.findings {
                writeln!(out, "  [{}] {}: {}", f.outcome.label(), f.name, f.detail).unwrap();
            }
        }
        out
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("value serializes")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (k, v) in map {
                render_value(out, k, v, depth + 1);
            }
        }
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
            writeln!(out, "{pad}{key}:").unwrap();
            render_table(out, rows, depth + 1);
        }
        Value::Array(items) => {
            let items: Vec<String> = items.iter().map(scalar).collect();
            writeln!(out, "{pad}{key} = [{}]", items.join(", ")).unwrap();
        }
        other => writeln!(out, "{pad}{key} = {}", scalar(other)).unwrap(),
    }
}

fn render_table(out: &mut String, rows: &[Value], depth: usize) {
    let pad = "  ".repeat(depth);
    let columns: Vec<&String> = match &rows[0] {
        Value::Object(map) => map.keys().collect(),
        _ => return,
    };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| scalar(&r[c.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap())
        .collect();
    let line = |items: Vec<&str>| {
        items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{pad}{}", line(columns.iter().map(|c| c.as_str()).collect())).unwrap();
    for row in &cells {
        writeln!(out, "{pad}{}", line(row.iter().map(String::as_str).collect())).unwrap();
    }
}
