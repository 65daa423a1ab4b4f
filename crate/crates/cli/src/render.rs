//! Text, CSV and JSON rendering of exact values.

use dyckwig::exact_math::{format_rational, to_decimal_string};
use dyckwig::{ExactMatrix, Rational};
use serde_json::Value;

/// How scalars are written: exact `num/den` strings or fixed decimals.
#[derive(Debug, Clone, Copy)]
pub enum Scalar {
    Exact,
    Decimal(usize),
}

impl Scalar {
    pub fn from_precision(precision: Option<usize>) -> Self {
        precision.map_or(Scalar::Exact, Scalar::Decimal)
    }

    pub fn show(&self, x: &Rational) -> String {
        match self {
            Scalar::Exact => format_rational(x),
            Scalar::Decimal(p) => to_decimal_string(x, *p),
        }
    }
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn matrix_json(m: &ExactMatrix<Rational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational_json).collect()))
            .collect(),
    )
}

/// Right-aligned grid with optional row and column labels.
pub fn table(header: Option<&[String]>, rows: &[Vec<String>]) -> String {
    let cols = rows
        .iter()
        .map(Vec::len)
        .chain(header.map(<[String]>::len))
        .max()
        .unwrap_or(0);
    let mut width = vec![0usize; cols];
    for row in header.into_iter().map(<[String]>::to_vec).chain(rows.iter().cloned()) {
        for (j, cell) in row.iter().enumerate() {
            width[j] = width[j].max(cell.chars().count());
        }
    }
    let line = |row: &[String]| {
        row.iter()
            .enumerate()
            .map(|(j, c)| format!("{c:>w$}", w = width[j]))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = String::new();
    if let Some(h) = header {
        out.push_str(&line(h));
        out.push('\n');
    }
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

pub fn matrix_table(m: &ExactMatrix<Rational>, scalar: Scalar, labels: &[String]) -> String {
    let mut header = vec![String::new()];
    header.extend(labels.iter().cloned());
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| {
            let mut row = vec![labels[i].clone()];
            row.extend(m.row(i).iter().map(|x| scalar.show(x)));
            row
        })
        .collect();
    table(Some(&header), &rows)
}

pub fn csv_string(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
