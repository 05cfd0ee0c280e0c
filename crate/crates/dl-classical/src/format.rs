//! Matrix text I/O: row-major element tokens in the algebra digit format,
//! rows separated by `;` or newlines, entries by commas.

use crate::linalg::Matrix;
use crate::{ClassicalError, Result};
use dl_algebra::format::{format_elem, parse_elem};
use dl_algebra::FieldCtx;

pub fn format_matrix(m: &Matrix) -> String {
    let f = m.field();
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| format_elem(f, m.at(i, j)))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_matrix(field: &FieldCtx, s: &str) -> Result<Matrix> {
    let mut rows = vec![];
    for line in s.split(|c| c == ';' || c == '\n') {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = vec![];
        for tok in line.split(',') {
            let elem = parse_elem(field, tok.trim(), 0)
                .map_err(|e| ClassicalError::Parse(e.to_string()))?;
            row.push(elem);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ClassicalError::Parse("empty matrix".into()));
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err(ClassicalError::Parse("ragged matrix rows".into()));
    }
    Ok(Matrix::from_rows(field, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let f = FieldCtx::base(3, 1).unwrap();
        let m = Matrix::identity(&f, 2);
        let s = format_matrix(&m);
        assert_eq!(s, "1,0;0,1");
        assert_eq!(parse_matrix(&f, &s).unwrap(), m);
        assert_eq!(parse_matrix(&f, "1,0\n0,1").unwrap(), m);
    }
}
