//! Matrix CSV: one row per line, comma-separated rational literals
//! (integers, `p/q`, finite decimals). Fields are trimmed; blank lines are
//! skipped; there is no header.

use crate::error::{Error, Position, Result};
use crate::scalar::{Matrix, Rat};

pub fn parse_matrix_csv(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut offset = 0;
    for (line_no, raw) in text.split_inclusive('\n').enumerate() {
        let line_start = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut field_start = 0;
        for field in line.split(',') {
            let lead = field.len() - field.trim_start().len();
            let at = line_start + field_start + lead;
            let lit = field.trim();
            let value = lit.parse::<Rat>().map_err(|_| Error::Parse {
                position: Position::locate(text, at),
                message: if lit.is_empty() {
                    "empty field".to_string()
                } else {
                    format!("invalid number {lit:?}")
                },
            })?;
            row.push(value);
            field_start += field.len() + 1;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    position: Position::locate(text, line_start),
                    message: format!("row {} has {} fields, expected {}", line_no + 1, row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse_at(text, text.len(), "no matrix rows"));
    }
    Matrix::from_rows(rows)
}

/// Canonical form: reduced fractions, no spaces, trailing newline.
pub fn write_matrix_csv(a: &Matrix) -> String {
    a.to_string()
}
