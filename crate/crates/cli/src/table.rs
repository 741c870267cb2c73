//! Numeric CSV tables: 17 significant digits, `.` separator, LF endings.

use std::fmt::Write;

use spinchain::scenario::{ScenarioRun, TimeSeriesRecord};

use crate::error::{CliError, Result};

/// Round-trip-exact rendering of an f64.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{v:.16e}")
    }
}

/// Column names for a run, with `_ref` columns when a reference run exists.
pub fn run_header(with_reference: bool) -> Vec<String> {
    let mut cols: Vec<String> = TimeSeriesRecord::COLUMNS.iter().map(|s| s.to_string()).collect();
    if with_reference {
        cols.extend(
            TimeSeriesRecord::COLUMNS[1..]
                .iter()
                .map(|c| format!("{c}_ref")),
        );
    }
    cols
}

/// Rows of a run (values only, in [`run_header`] order).
pub fn run_rows(run: &ScenarioRun) -> Vec<Vec<f64>> {
    run.records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.values().to_vec();
            if let Some(reference) = &run.reference {
                row.extend_from_slice(&reference[i].values()[1..]);
            }
            row
        })
        .collect()
}

pub fn render(header: &[String], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format_value(*v)).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn render_run(run: &ScenarioRun) -> String {
    render(&run_header(run.reference.is_some()), &run_rows(run))
}

/// A parsed numeric table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<String> = lines
            .next()
            .ok_or_else(|| CliError::config("CSV has no header"))?
            .split(',')
            .map(|s| s.trim().to_string())
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let row = line
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<f64>()
                        .map_err(|_| CliError::config(format!("row {}: bad number {c:?}", i + 1)))
                })
                .collect::<Result<Vec<f64>>>()?;
            if row.len() != header.len() {
                return Err(CliError::config(format!(
                    "row {} has {} cells, header has {}",
                    i + 1,
                    row.len(),
                    header.len()
                )));
            }
            rows.push(row);
        }
        Ok(Self { header, rows })
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }
}
