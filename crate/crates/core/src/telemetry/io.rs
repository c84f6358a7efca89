//! Telemetry CSV serialization.
//!
//! Schema: `t_s,current_a,soc_true,v_true_1..m,v_meas_1..m`, one row per
//! sample. Values are written with shortest round-tripping formatting, so a
//! write/read cycle is lossless.

use super::{TelemetryFrame, TelemetryStream};
use std::fmt;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

#[derive(Debug)]
pub enum StreamIoError {
    Io(std::io::Error),
    EmptyFile,
    /// A required column is absent from the header.
    MissingColumn { name: String },
    UnexpectedHeader { detail: String },
    /// `row` is the 1-based data row (header excluded).
    BadField { row: usize, column: String, detail: String },
    NanValue { row: usize, column: String },
    NonMonotoneTimestamp { row: usize },
    NonUniformInterval { row: usize },
    WrongFieldCount { row: usize, expected: usize, found: usize },
}

impl fmt::Display for StreamIoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StreamIoError::Io(e) => write!(f, "i/o error: {e}"),
            StreamIoError::EmptyFile => write!(f, "empty telemetry file"),
            StreamIoError::MissingColumn { name } => write!(f, "missing column `{name}`"),
            StreamIoError::UnexpectedHeader { detail } => {
                write!(f, "unexpected header: {detail}")
            }
            StreamIoError::BadField { row, column, detail } => {
                write!(f, "row {row}, column `{column}`: {detail}")
            }
            StreamIoError::NanValue { row, column } => {
                write!(f, "row {row}, column `{column}`: NaN value")
            }
            StreamIoError::NonMonotoneTimestamp { row } => {
                write!(f, "row {row}: timestamp not increasing")
            }
            StreamIoError::NonUniformInterval { row } => {
                write!(f, "row {row}: sample interval differs from the first interval")
            }
            StreamIoError::WrongFieldCount { row, expected, found } => {
                write!(f, "row {row}: expected {expected} fields, found {found}")
            }
        }
    }
}

impl std::error::Error for StreamIoError {}

impl From<std::io::Error> for StreamIoError {
    fn from(e: std::io::Error) -> Self {
        StreamIoError::Io(e)
    }
}

fn header_for(m: usize) -> String {
    let mut h = String::from("t_s,current_a,soc_true");
    for i in 1..=m {
        h.push_str(&format!(",v_true_{i}"));
    }
    for i in 1..=m {
        h.push_str(&format!(",v_meas_{i}"));
    }
    h
}

/// Writes a stream to `path` in the documented CSV schema.
pub fn write_stream(stream: &TelemetryStream, path: &Path) -> Result<(), StreamIoError> {
    let m = stream.module_count();
    let file = std::fs::File::create(path)?;
    let mut w = BufWriter::new(file);
    writeln!(w, "{}", header_for(m))?;
    for f in &stream.frames {
        write!(w, "{},{},{}", f.t_s, f.current_a, f.soc_true)?;
        for v in &f.v_true {
            write!(w, ",{v}")?;
        }
        for v in &f.v_meas {
            write!(w, ",{v}")?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a stream written by [`write_stream`], validating the header, value
/// finiteness, and timestamp uniformity.
pub fn read_stream(path: &Path) -> Result<TelemetryStream, StreamIoError> {
    let file = std::fs::File::open(path)?;
    let mut lines = BufReader::new(file).lines();

    let header = match lines.next() {
        Some(h) => h?,
        None => return Err(StreamIoError::EmptyFile),
    };
    let cols: Vec<&str> = header.trim().split(',').collect();
    for (idx, name) in ["t_s", "current_a", "soc_true"].iter().enumerate() {
        match cols.get(idx) {
            Some(c) if c == name => {}
            _ => return Err(StreamIoError::MissingColumn { name: name.to_string() }),
        }
    }
    let n_rest = cols.len().saturating_sub(3);
    if n_rest == 0 || n_rest % 2 != 0 {
        return Err(StreamIoError::UnexpectedHeader {
            detail: format!("expected paired v_true_i/v_meas_i columns, found {n_rest}"),
        });
    }
    let m = n_rest / 2;
    for i in 1..=m {
        let want = format!("v_true_{i}");
        if cols[2 + i] != want {
            return Err(StreamIoError::MissingColumn { name: want });
        }
        let want = format!("v_meas_{i}");
        if cols[2 + m + i] != want {
            return Err(StreamIoError::MissingColumn { name: want });
        }
    }

    let expected_fields = 3 + 2 * m;
    let mut frames = Vec::new();
    let mut dt = None;
    for (i, line) in lines.enumerate() {
        let row = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != expected_fields {
            return Err(StreamIoError::WrongFieldCount {
                row,
                expected: expected_fields,
                found: fields.len(),
            });
        }
        let parse = |idx: usize| -> Result<f64, StreamIoError> {
            let v: f64 = fields[idx].parse().map_err(|e| StreamIoError::BadField {
                row,
                column: cols[idx].to_string(),
                detail: format!("{e}"),
            })?;
            if v.is_nan() {
                return Err(StreamIoError::NanValue { row, column: cols[idx].to_string() });
            }
            Ok(v)
        };
        let t_s = parse(0)?;
        let current_a = parse(1)?;
        let soc_true = parse(2)?;
        let mut v_true = Vec::with_capacity(m);
        for j in 0..m {
            v_true.push(parse(3 + j)?);
        }
        let mut v_meas = Vec::with_capacity(m);
        for j in 0..m {
            v_meas.push(parse(3 + m + j)?);
        }
        if let Some(prev) = frames.last() {
            let prev: &TelemetryFrame = prev;
            if t_s <= prev.t_s {
                return Err(StreamIoError::NonMonotoneTimestamp { row });
            }
            let step = t_s - prev.t_s;
            match dt {
                None => dt = Some(step),
                Some(d) => {
                    if (step - d).abs() > 1e-6 * d.max(1.0) {
                        return Err(StreamIoError::NonUniformInterval { row });
                    }
                }
            }
        }
        frames.push(TelemetryFrame { t_s, current_a, v_meas, v_true, soc_true });
    }

    Ok(TelemetryStream { dt_s: dt.unwrap_or(1.0), frames })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_stream() -> TelemetryStream {
        let mut s = TelemetryStream::new(1.0);
        for k in 0..5 {
            s.frames.push(TelemetryFrame {
                t_s: k as f64,
                current_a: 25.0 + 1e-13 * k as f64,
                v_meas: vec![200.123456789012 + k as f64, 201.0],
                v_true: vec![200.123456789012 + k as f64, 201.0],
                soc_true: 0.5 - 1e-5 * k as f64,
            });
        }
        s
    }

    #[test]
    fn round_trip_is_lossless() {
        let dir = std::env::temp_dir().join("voltguard_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("rt.csv");
        let s = sample_stream();
        write_stream(&s, &path).unwrap();
        let back = read_stream(&path).unwrap();
        assert_eq!(s.frames.len(), back.frames.len());
        for (a, b) in s.frames.iter().zip(back.frames.iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn missing_column_is_named() {
        let dir = std::env::temp_dir().join("voltguard_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("missing.csv");
        std::fs::write(&path, "t_s,current_a,soc_true,v_true_1,v_true_2,v_meas_1,v_oops_2\n").unwrap();
        match read_stream(&path) {
            Err(StreamIoError::MissingColumn { name }) => assert_eq!(name, "v_meas_2"),
            other => panic!("expected MissingColumn, got {other:?}"),
        }
    }

    #[test]
    fn non_uniform_interval_cites_row() {
        let dir = std::env::temp_dir().join("voltguard_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("gap.csv");
        std::fs::write(
            &path,
            "t_s,current_a,soc_true,v_true_1,v_meas_1\n\
             0,1,0.5,3.7,3.7\n1,1,0.5,3.7,3.7\n3,1,0.5,3.7,3.7\n",
        )
        .unwrap();
        assert!(matches!(read_stream(&path), Err(StreamIoError::NonUniformInterval { row: 3 })));
    }

    #[test]
    fn nan_is_rejected_with_position() {
        let dir = std::env::temp_dir().join("voltguard_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("nan.csv");
        std::fs::write(
            &path,
            "t_s,current_a,soc_true,v_true_1,v_meas_1\n0,1,0.5,NaN,3.7\n",
        )
        .unwrap();
        match read_stream(&path) {
            Err(StreamIoError::NanValue { row: 1, column }) => assert_eq!(column, "v_true_1"),
            other => panic!("expected NanValue, got {other:?}"),
        }
    }
}
