//! Rendering of computed tables and reports as CSV or JSON.
//!
//! CSV is header + comma-separated rows with LF line endings; JSON is one
//! object with a `columns` array and a `rows` array of arrays (reports are
//! flat objects instead). Numbers are limited to a configured count of
//! significant digits in both formats so output is compact and identical
//! across runs.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    Flag(bool),
}

/// Scientific notation with `digits` significant digits (`digits >= 1`).
fn fmt_sig(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

/// Round to `digits` significant digits, returning the nearest f64.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    fmt_sig(x, digits)
        .parse()
        .expect("parse of formatted float")
}

fn json_cell(cell: &Cell, precision: usize) -> Value {
    match cell {
        Cell::Num(x) => Value::from(round_sig(*x, precision)),
        Cell::Flag(b) => Value::from(u8::from(*b)),
    }
}

pub fn render_table(
    columns: &[&str],
    rows: &[Vec<Cell>],
    format: Format,
    precision: usize,
) -> String {
    debug_assert!(rows.iter().all(|r| r.len() == columns.len()));
    match format {
        Format::Csv => {
            let mut out = String::with_capacity(64 + rows.len() * columns.len() * 18);
            out.push_str(&columns.join(","));
            out.push('\n');
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    match cell {
                        Cell::Num(x) => out.push_str(&fmt_sig(*x, precision)),
                        Cell::Flag(b) => out.push(if *b { '1' } else { '0' }),
                    }
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut object = serde_json::Map::new();
            object.insert(
                "columns".to_string(),
                Value::from(columns.iter().map(|c| Value::from(*c)).collect::<Vec<_>>()),
            );
            object.insert(
                "rows".to_string(),
                Value::from(
                    rows.iter()
                        .map(|row| {
                            Value::from(
                                row.iter()
                                    .map(|cell| json_cell(cell, precision))
                                    .collect::<Vec<_>>(),
                            )
                        })
                        .collect::<Vec<_>>(),
                ),
            );
            let mut text = Value::Object(object).to_string();
            text.push('\n');
            text
        }
    }
}

/// Key-value report; `None` renders as `none` in CSV and `null` in JSON.
pub fn render_report(entries: &[(&str, Option<f64>)], format: Format, precision: usize) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("key,value\n");
            for (key, value) in entries {
                out.push_str(key);
                out.push(',');
                match value {
                    Some(x) => out.push_str(&fmt_sig(*x, precision)),
                    None => out.push_str("none"),
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut object = serde_json::Map::new();
            for (key, value) in entries {
                object.insert(
                    (*key).to_string(),
                    match value {
                        Some(x) => Value::from(round_sig(*x, precision)),
                        None => Value::Null,
                    },
                );
            }
            let mut text = Value::Object(object).to_string();
            text.push('\n');
            text
        }
    }
}
