//! Tabular results and their text, CSV and JSON renderings.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub counterexample: Option<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Self {
            command: command.into(),
            parameters: Vec::new(),
            columns,
            rows: Vec::new(),
            counterexample: None,
        }
    }

    pub fn param(mut self, name: &str, value: impl ToString) -> Self {
        self.parameters.push((name.to_string(), value.to_string()));
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    /// Records the first counterexample only.
    pub fn fail(&mut self, record: Value) {
        if self.counterexample.is_none() {
            self.counterexample = Some(record);
        }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn status(&self) -> &'static str {
        if self.failed() {
            "mismatch"
        } else {
            "ok"
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        // A single value prints bare.
        if self.rows.len() == 1 && self.columns.len() == 1 {
            return format!("{}\n", self.rows[0][0]);
        }
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain(std::iter::once(self.columns[c].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = String::new();
        out.push_str(&line(self.columns.clone()));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
            out.push('\n');
        }
        out.push_str(&format!("status: {}\n", self.status()));
        out
    }

    fn render_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let parameters: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.to_string(), Value::String(v.clone())))
                        .collect(),
                )
            })
            .collect();
        let mut doc = json!({
            "command": self.command,
            "parameters": parameters,
            "results": results,
            "status": self.status(),
        });
        if let Some(ce) = &self.counterexample {
            doc["counterexample"] = ce.clone();
        }
        let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        text.push('\n');
        text
    }
}
