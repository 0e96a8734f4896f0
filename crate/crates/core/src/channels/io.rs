//! File formats.
//!
//! Channel JSON:
//!
//! ```text
//! channel  := { "dim": <int >= 1>, "kraus": [ matrix, ... ] }     (nonempty)
//! matrix   := [ row, ... ]                                       (dim rows)
//! row      := [ entry, ... ]                                     (dim entries)
//! entry    := [ <real>, <imag> ]
//! ```
//!
//! Unknown fields are rejected, as is any matrix whose shape differs from
//! `dim x dim`.
//!
//! Matrix CSV: one row per line, comma-separated decimal reals. Blank lines
//! and lines starting with `#` are skipped. Every row must have the same
//! number of fields.

use serde::Deserialize;

use super::KrausChannel;
use crate::error::{Error, Result};
use crate::matcore::{c64, ComplexMatrix};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChannelFile {
    dim: usize,
    kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

fn json_error(e: serde_json::Error) -> Error {
    // serde_json appends " at line L column C"; the position is kept separately.
    let text = e.to_string();
    let message = match text.rfind(" at line ") {
        Some(i) => text[..i].to_string(),
        None => text,
    };
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message,
    }
}

/// Parses the Kraus operators of a channel file without requiring trace
/// preservation (used by validation).
pub fn parse_kraus_json(text: &str) -> Result<Vec<ComplexMatrix>> {
    let file: ChannelFile = serde_json::from_str(text).map_err(json_error)?;
    let dim = file.dim;
    if dim == 0 {
        return Err(Error::InvalidArgument("\"dim\" must be at least 1".into()));
    }
    if file.kraus.is_empty() {
        return Err(Error::EmptyKraus);
    }
    file.kraus
        .iter()
        .map(|rows| {
            if rows.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: rows.len(),
                });
            }
            let mut entries = Vec::with_capacity(dim * dim);
            for row in rows {
                if row.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: row.len(),
                    });
                }
                entries.extend(row.iter().map(|[re, im]| c64(*re, *im)));
            }
            ComplexMatrix::from_row_major(dim, dim, entries)
        })
        .collect()
}

/// Parses a channel file into a trace-preserving [`KrausChannel`].
pub fn parse_channel_json(text: &str) -> Result<KrausChannel> {
    KrausChannel::new(parse_kraus_json(text)?)
}

/// Writes a channel file with one matrix row per line.
pub fn channel_to_json(k: &KrausChannel) -> String {
    let d = k.dim();
    let ops: Vec<String> = k
        .kraus()
        .iter()
        .map(|a| {
            let rows: Vec<String> = (0..d)
                .map(|i| {
                    let row: Vec<[f64; 2]> = (0..d).map(|j| [a[(i, j)].re, a[(i, j)].im]).collect();
                    serde_json::to_string(&row).expect("row serializes")
                })
                .collect();
            format!("    [\n      {}\n    ]", rows.join(",\n      "))
        })
        .collect();
    format!(
        "{{\n  \"dim\": {d},\n  \"kraus\": [\n{}\n  ]\n}}",
        ops.join(",\n")
    )
}

/// Parses a real matrix from CSV text.
pub fn parse_matrix_csv(text: &str) -> Result<ComplexMatrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for field in line.split(',') {
            let value = field.trim().parse::<f64>().map_err(|e| Error::Parse {
                line: lineno + 1,
                column: column + (field.len() - field.trim_start().len()),
                message: format!("invalid number {:?}: {e}", field.trim()),
            })?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column,
                    message: format!("non-finite value {:?}", field.trim()),
                });
            }
            row.push(value);
            column += field.len() + 1;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: format!("expected {} fields, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no matrix rows".into(),
        });
    }
    let refs: Vec<&[f64]> = rows.iter().map(Vec::as_slice).collect();
    ComplexMatrix::from_real_rows(&refs)
}

pub fn matrix_to_csv(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].re.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
