//! Uniform grids and the named-column tables emitted by the command line.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("invalid grid '{spec}': {reason}")]
    Grid { spec: String, reason: String },

    #[error("row {row} has {got} values, expected {expected}")]
    Arity { row: usize, got: usize, expected: usize },

    #[error("non-finite value {value} in column '{column}' of row {row}")]
    NonFinite { row: usize, column: String, value: f64 },

    #[error("table has no columns")]
    NoColumns,

    #[error("cannot parse '{text}' as a number")]
    Number { text: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// `count` uniformly spaced values from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self, TableError> {
        let err = |reason: &str| TableError::Grid {
            spec: format!("{start}:{stop}:{count}"),
            reason: reason.into(),
        };
        if !(start.is_finite() && stop.is_finite()) {
            return Err(err("bounds must be finite"));
        }
        if !(start < stop) {
            return Err(err("start must be below stop"));
        }
        if count < 2 {
            return Err(err("count must be at least 2"));
        }
        Ok(Self { start, stop, count })
    }

    pub fn step(&self) -> f64 {
        (self.stop - self.start) / (self.count - 1) as f64
    }

    /// Grid values; the first and last are exactly `start` and `stop`.
    pub fn values(&self) -> Vec<f64> {
        let n = (self.count - 1) as f64;
        let span = self.stop - self.start;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.stop } else { self.start + span * i as f64 / n })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = TableError;

    /// Parses `start:stop:count`.
    fn from_str(s: &str) -> Result<Self, TableError> {
        let err = |reason: &str| TableError::Grid {
            spec: s.to_string(),
            reason: reason.into(),
        };
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(err("expected start:stop:count"));
        }
        let start: f64 = parts[0].trim().parse().map_err(|_| err("start is not a number"))?;
        let stop: f64 = parts[1].trim().parse().map_err(|_| err("stop is not a number"))?;
        let count: usize = parts[2].trim().parse().map_err(|_| err("count is not a positive integer"))?;
        GridSpec::new(start, stop, count)
    }
}

/// Named numeric columns with rows of equal arity and finite values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleTable {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl SampleTable {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Result<Self, TableError> {
        let columns: Vec<String> = columns.into_iter().map(Into::into).collect();
        if columns.is_empty() {
            return Err(TableError::NoColumns);
        }
        Ok(Self { columns, rows: Vec::new() })
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

    pub fn push(&mut self, row: Vec<f64>) -> Result<(), TableError> {
        let index = self.rows.len();
        if row.len() != self.columns.len() {
            return Err(TableError::Arity {
                row: index,
                got: row.len(),
                expected: self.columns.len(),
            });
        }
        if let Some((j, &value)) = row.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(TableError::NonFinite {
                row: index,
                column: self.columns[j].clone(),
                value,
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// CSV with a header row and `\n` line endings. Values use the shortest
    /// decimal form that parses back to the same double.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), TableError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is UTF-8")
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self, TableError> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
        let mut table = SampleTable::new(r.headers()?.iter().map(str::to_string))?;
        for record in r.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|text| text.parse::<f64>().map_err(|_| TableError::Number { text: text.to_string() }))
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row)?;
        }
        Ok(table)
    }

    /// `{"columns": [...], "rows": [[...], ...]}`.
    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), TableError> {
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_json(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("json output is UTF-8")
    }

    pub fn read_json<R: Read>(input: R) -> Result<Self, TableError> {
        let raw: SampleTable = serde_json::from_reader(input)?;
        let mut table = SampleTable::new(raw.columns)?;
        for row in raw.rows {
            table.push(row)?;
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: GridSpec = "-1:1:5".parse().unwrap();
        assert_eq!(g.values(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert!("1:1:5".parse::<GridSpec>().is_err());
        assert!("0:1:1".parse::<GridSpec>().is_err());
        assert!("0:1".parse::<GridSpec>().is_err());
        assert!("a:1:3".parse::<GridSpec>().is_err());
        let g = GridSpec::new(0.1, 0.7, 7).unwrap();
        assert_eq!(*g.values().last().unwrap(), 0.7);
        assert!(GridSpec::new(-10.0, 10.0, 201).unwrap().values().contains(&2.0));
    }

    #[test]
    fn push_validates() {
        let mut t = SampleTable::new(["a", "b"]).unwrap();
        assert!(t.push(vec![1.0]).is_err());
        assert!(matches!(t.push(vec![1.0, f64::NAN]), Err(TableError::NonFinite { .. })));
        t.push(vec![1.0, 2.0]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.column("b"), Some(vec![2.0]));
        assert!(SampleTable::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let mut t = SampleTable::new(["x", "y"]).unwrap();
        t.push(vec![0.1 + 0.2, -1e-300]).unwrap();
        t.push(vec![std::f64::consts::PI, 5e-324]).unwrap();
        let text = t.to_csv_string();
        assert!(text.starts_with("x,y\n"));
        assert!(!text.contains('\r'));
        let back = SampleTable::read_csv(text.as_bytes()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn json_round_trip() {
        let mut t = SampleTable::new(["w", "C", "S"]).unwrap();
        t.push(vec![0.0, 0.0, 0.0]).unwrap();
        t.push(vec![1.0, 0.721_705_924_292_605, 0.247_558_287_651_610_8]).unwrap();
        let back = SampleTable::read_json(t.to_json_string().as_bytes()).unwrap();
        assert_eq!(back, t);
        let v: serde_json::Value = serde_json::from_str(&t.to_json_string()).unwrap();
        assert_eq!(v["columns"][1], "C");
    }
}
