//! The plain-text matrix format.
//!
//! A matrix is a header line `"m n"` (two decimals, one space) followed by
//! exactly `m` lines of exactly `n` characters from `{0, 1}`, each line
//! terminated by a single linefeed. Comment lines starting with `#` may
//! precede a header. Several matrices in one file are separated by exactly
//! one blank line.

use crate::error::{Error, Result};
use crate::grid::BitMatrix;

pub fn serialize_matrix(m: &BitMatrix) -> String {
    let mut out = String::with_capacity((m.cols() + 1) * (m.rows() + 1));
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        out.push_str(&m.row_string(i));
        out.push('\n');
    }
    out
}

pub fn serialize_matrices(ms: &[BitMatrix]) -> String {
    ms.iter()
        .map(serialize_matrix)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse a file holding exactly one matrix.
pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let ms = parse_matrices(text)?;
    if ms.len() != 1 {
        return Err(Error::parse(
            1,
            format!("expected exactly one matrix, found {}", ms.len()),
        ));
    }
    Ok(ms.into_iter().next().unwrap())
}

/// Parse a file holding one or more matrices.
pub fn parse_matrices(text: &str) -> Result<Vec<BitMatrix>> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    // A well-formed file ends with a linefeed; drop the empty tail it makes.
    if lines.last() == Some(&"") {
        lines.pop();
    }
    let mut out = Vec::new();
    let mut cursor = 0usize;
    loop {
        while cursor < lines.len() && lines[cursor].starts_with('#') {
            cursor += 1;
        }
        if cursor >= lines.len() {
            return Err(Error::parse(
                cursor + 1,
                if out.is_empty() {
                    "empty input, expected a matrix header"
                } else {
                    "expected a matrix after the blank separator"
                },
            ));
        }
        let header_line = cursor + 1;
        let (rows, cols) = parse_header(lines[cursor], header_line)?;
        cursor += 1;
        let mut row_strings = Vec::with_capacity(rows);
        for i in 0..rows {
            let line_no = cursor + 1;
            let Some(&line) = lines.get(cursor) else {
                return Err(Error::parse(
                    line_no,
                    format!("expected {rows} rows, found {i}"),
                ));
            };
            if line.len() != cols {
                return Err(Error::parse(
                    line_no,
                    format!("row has length {}, header says {cols}", line.len()),
                ));
            }
            if let Some(bad) = line.chars().find(|&c| c != '0' && c != '1') {
                return Err(Error::parse(
                    line_no,
                    format!("unexpected character {bad:?} in matrix row"),
                ));
            }
            row_strings.push(line);
            cursor += 1;
        }
        out.push(BitMatrix::from_rows(&row_strings).map_err(|e| match e {
            Error::InvalidParams { reason } => Error::parse(header_line, reason),
            other => other,
        })?);
        if cursor == lines.len() {
            return Ok(out);
        }
        if !lines[cursor].is_empty() {
            return Err(Error::parse(
                cursor + 1,
                "expected a blank line between matrices",
            ));
        }
        cursor += 1;
    }
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let bad = || {
        Error::parse(
            line_no,
            format!("malformed header {line:?}, expected \"m n\""),
        )
    };
    let (m_str, n_str) = line.split_once(' ').ok_or_else(bad)?;
    if m_str.is_empty() || n_str.is_empty() || n_str.contains(' ') {
        return Err(bad());
    }
    let rows: usize = m_str.parse().map_err(|_| bad())?;
    let cols: usize = n_str.parse().map_err(|_| bad())?;
    if rows == 0 || cols == 0 {
        return Err(Error::parse(line_no, "matrix dimensions must be positive"));
    }
    Ok((rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_single() {
        let text = "2 3\n101\n010\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        assert_eq!(serialize_matrix(&m), text);

        let tiny = parse_matrix("1 1\n0\n").unwrap();
        assert!(!tiny.get(0, 0));
        assert_eq!(serialize_matrix(&tiny), "1 1\n0\n");
    }

    #[test]
    fn ragged_row_is_an_error() {
        let err = parse_matrix("2 2\n10\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn bad_characters_and_headers() {
        assert!(matches!(
            parse_matrix("2 2\n10\n1x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_matrix("2\n10\n11\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("2  2\n10\n11\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("0 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix(""),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("2 2\n10\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn comments_before_header() {
        let m = parse_matrix("# generated fixture\n# two lines\n1 2\n10\n").unwrap();
        assert_eq!(m.row_string(0), "10");
    }

    #[test]
    fn multi_matrix_round_trip() {
        let a = BitMatrix::from_rows(&["10", "01"]).unwrap();
        let b = BitMatrix::from_rows(&["111"]).unwrap();
        let text = serialize_matrices(&[a.clone(), b.clone()]);
        assert_eq!(text, "2 2\n10\n01\n\n1 3\n111\n");
        let parsed = parse_matrices(&text).unwrap();
        assert_eq!(parsed, vec![a, b]);
    }

    #[test]
    fn separator_must_be_exactly_one_blank_line() {
        assert!(matches!(
            parse_matrices("1 1\n0\n\n\n1 1\n1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_matrices("1 1\n0\n\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_matrices("1 1\n0\n1 1\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn missing_final_newline_is_tolerated() {
        let m = parse_matrix("1 2\n01").unwrap();
        assert_eq!(m.row_string(0), "01");
    }
}
