//! Tabular output in JSON, CSV and aligned text.

use std::io::Write;

use serde_json::{json, Map, Value};
use so2m_core::{Family, HodgePolynomial, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A value with its JSON form and its human-readable form.
#[derive(Clone, Debug)]
pub struct Cell {
    pub json: Value,
    pub text: String,
}

impl Cell {
    pub fn new(json: Value, text: impl Into<String>) -> Self {
        Cell { json, text: text.into() }
    }

    pub fn str(s: impl Into<String>) -> Self {
        let s = s.into();
        Cell { json: Value::String(s.clone()), text: s }
    }

    pub fn int(n: impl Into<i64>) -> Self {
        let n = n.into();
        Cell { json: json!(n), text: n.to_string() }
    }

    pub fn bool(b: bool) -> Self {
        Cell { json: json!(b), text: b.to_string() }
    }

    pub fn roots(rs: &[Root]) -> Self {
        let text = if rs.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", rs.iter().map(Root::to_string).collect::<Vec<_>>().join(", "))
        };
        Cell { json: Value::Array(rs.iter().map(|r| json!(r.coords)).collect()), text }
    }

    pub fn polynomial(p: &HodgePolynomial) -> Self {
        let terms: Vec<Value> = p.terms().map(|(a, b, c)| json!([a, b, c])).collect();
        Cell { json: Value::Array(terms), text: p.to_string() }
    }

    pub fn list(items: &[String], sep: &str) -> Self {
        Cell { json: json!(items), text: items.join(sep) }
    }

    pub fn int_vec(v: &[i64]) -> Self {
        let text = format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(", "));
        Cell { json: json!(v), text }
    }
}

pub struct Table {
    pub m: usize,
    pub family: Family,
    /// JSON key and text heading of each column.
    pub columns: Vec<(&'static str, &'static str)>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(m: usize, family: Family, columns: &[(&'static str, &'static str)]) -> Self {
        Table { m, family, columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, String> {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text().into_bytes()),
        }
    }

    fn json(&self) -> Result<Vec<u8>, String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for ((key, _), cell) in self.columns.iter().zip(row) {
                    obj.insert((*key).to_string(), cell.json.clone());
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "m": self.m, "family": self.family.to_string(), "rows": rows });
        let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| e.to_string())?;
        out.push(b'\n');
        Ok(out)
    }

    fn csv(&self) -> Result<Vec<u8>, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns.iter().map(|(k, _)| *k)).map_err(|e| e.to_string())?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.text.as_str())).map_err(|e| e.to_string())?;
        }
        w.into_inner().map_err(|e| e.to_string())
    }

    fn text(&self) -> String {
        let width = |s: &str| s.chars().count();
        let mut widths: Vec<usize> = self.columns.iter().map(|(_, h)| width(h)).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(&c.text));
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - width(c)))).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = format!("so(2,{}), type {}\n", self.m, self.family);
        out.push_str(&line(self.columns.iter().map(|(_, h)| *h).collect()));
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&rule.join("  "));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row.iter().map(|c| c.text.as_str()).collect()));
            out.push('\n');
        }
        out
    }
}

pub fn write_output(bytes: &[u8], path: Option<&std::path::Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()
        }
    }
}
