//! Metric logging shared by every training loop.
//!
//! A [`TrainLog`] is an ordered stream of named real-valued metric rows. A
//! non-finite value aborts the run immediately with diagnostics rather than
//! silently poisoning the CSV.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct TrainLog {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl TrainLog {
    pub fn new<S: Into<String>>(columns: Vec<S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Appends one row. The first column is the step/event index and must be
    /// non-decreasing.
    pub fn push(&mut self, row: Vec<f64>) -> Result<()> {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        for (column, &value) in self.columns.iter().zip(&row) {
            if !value.is_finite() {
                return Err(Error::NonFinite {
                    column: column.clone(),
                    value,
                    index: self.rows.len() as u64,
                });
            }
        }
        if let (Some(last), Some(first)) = (self.rows.last(), row.first()) {
            assert!(*first >= last[0], "step index must be monotone");
        }
        self.rows.push(row);
        Ok(())
    }

    /// Last value of a named column, if any rows were logged.
    pub fn last(&self, column: &str) -> Option<f64> {
        let idx = self.columns.iter().position(|c| c == column)?;
        self.rows.last().map(|r| r[idx])
    }

    pub fn column(&self, column: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == column)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// CSV with 17 significant digits so doubles round-trip byte-exactly.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format_float(*v)).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn save_csv<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(file))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("utf8")
    }
}

/// 17 significant digits: enough for exact f64 round-trips.
pub fn format_float(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{v}")
    } else {
        format!("{v:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_row_aborts() {
        let mut log = TrainLog::new(vec!["step", "mi_nats"]);
        log.push(vec![0.0, 0.5]).unwrap();
        let err = log.push(vec![1.0, f64::NAN]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }

    #[test]
    fn csv_round_trips_doubles() {
        let mut log = TrainLog::new(vec!["step", "v"]);
        let v = 0.1234567890123456789_f64;
        log.push(vec![0.0, v]).unwrap();
        let csv = log.to_csv_string();
        let cell = csv.lines().nth(1).unwrap().split(',').nth(1).unwrap();
        assert_eq!(cell.parse::<f64>().unwrap(), v);
    }
}
