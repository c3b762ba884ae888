//! Table, JSON and CSV rendering of command results.
//!
//! Every real is rounded to 12 significant digits once, then printed with
//! the shortest representation that parses back to the same `f64`, so the
//! JSON and CSV carry identical digits and re-emitting parsed JSON is the
//! identity.

use clap::ValueEnum;
use serde_json::{Map, Value};
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(usize),
    Num(Option<f64>),
    Bool(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(Some(v))
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// Round to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

/// JSON value for a real; non-finite values become `null`.
pub fn num(v: f64) -> Value {
    serde_json::Number::from_f64(round12(v)).map_or(Value::Null, Value::Number)
}

fn cell_value(c: &Cell) -> Value {
    match c {
        Cell::Int(i) => Value::from(*i as u64),
        Cell::Num(Some(v)) => num(*v),
        Cell::Num(None) => Value::Null,
        Cell::Bool(b) => Value::Bool(*b),
    }
}

fn cell_text(c: &Cell) -> String {
    match cell_value(c) {
        Value::Null => String::new(),
        v => v.to_string(),
    }
}

/// Result of one command: echoed inputs, a table of rows, and a summary.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub inputs: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Map<String, Value>,
}

impl Document {
    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(k, c)| (k.to_string(), cell_value(c)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("inputs".into(), Value::Object(self.inputs.clone()));
        doc.insert("rows".into(), Value::Array(rows));
        doc.insert("summary".into(), Value::Object(self.summary.clone()));
        Value::Object(doc)
    }

    pub fn write<W: Write>(&self, format: Format, out: &mut W) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(cell_text))?;
                }
                w.flush()
            }
            Format::Table => self.write_table(out),
        }
    }

    fn write_table<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for (k, v) in &self.inputs {
            writeln!(out, "# {k}: {}", plain(v))?;
        }
        let text: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| match cell_text(c) {
                        s if s.is_empty() => "-".to_string(),
                        s => s,
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, h)| text.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| -> String {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        for r in &text {
            writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
        }
        for (k, v) in &self.summary {
            writeln!(out, "# {k}: {}", plain(v))?;
        }
        Ok(())
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
