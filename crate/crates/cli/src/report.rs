//! Report model and its json/csv/text renderings.

use std::fmt::Write as _;
use std::io::{self, Write};

use baxter_core::{BigInt, BigRational};
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Big(BigInt),
    Rational(BigRational),
    Float(f64),
    Bool(bool),
    Text(String),
    List(Vec<Cell>),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Big(v.into())
    }
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Big(v)
    }
}

impl From<BigRational> for Cell {
    fn from(v: BigRational) -> Self {
        Cell::Rational(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// 17 significant digits; non-finite values have no JSON number form.
fn float_text(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Big(v) => Value::String(v.to_string()),
            Cell::Rational(v) => Value::String(v.to_string()),
            Cell::Float(v) => match float_text(*v) {
                Some(s) => Value::Number(s.parse::<Number>().expect("formatted float is a JSON number")),
                None => Value::Null,
            },
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(v) => Value::String(v.clone()),
            Cell::List(v) => Value::Array(v.iter().map(Cell::to_json).collect()),
        }
    }

    fn to_text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(v) => v.to_string(),
            Cell::Rational(v) => v.to_string(),
            Cell::Float(v) => float_text(*v).unwrap_or_else(|| v.to_string()),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
            Cell::List(v) => v.iter().map(Cell::to_text).collect::<Vec<_>>().join(" "),
        }
    }
}

pub type Row = Vec<(&'static str, Cell)>;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub params: Row,
    pub pass: bool,
    pub rows: Vec<Row>,
}

fn object(row: &Row) -> Value {
    let mut map = Map::new();
    for (k, v) in row {
        map.insert((*k).to_owned(), v.to_json());
    }
    Value::Object(map)
}

impl Report {
    pub fn new(command: &'static str, params: Row) -> Self {
        Self { command, params, pass: true, rows: Vec::new() }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.into()));
        map.insert("params".into(), object(&self.params));
        map.insert("pass".into(), Value::Bool(self.pass));
        map.insert("rows".into(), Value::Array(self.rows.iter().map(object).collect()));
        Value::Object(map)
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
            Format::Csv => self.write_csv(out),
            Format::Text => out.write_all(self.to_text().as_bytes()),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if let Some(first) = self.rows.first() {
            w.write_record(first.iter().map(|(k, _)| *k))?;
        }
        for row in &self.rows {
            w.write_record(row.iter().map(|(_, v)| v.to_text()))?;
        }
        w.flush()
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", v.to_text())).collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|(k, v)| format!("{k}={}", v.to_text())).collect();
            let _ = writeln!(s, "  {}", cells.join("  "));
        }
        let _ = writeln!(s, "{}: {}", self.command, if self.pass { "PASS" } else { "FAIL" });
        s
    }
}
