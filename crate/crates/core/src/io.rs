//! Text formats for matrices and polynomials.
//!
//! Matrices are read either as JSON `{"n": 3, "rows": [[…], …]}` or as plain
//! text, one row per line with whitespace-separated entries. Entries are
//! integers, decimals, fractions `p/q`, or `inf` (also `ε`, `eps`). In the
//! plain format blank lines and lines starting with `#` are skipped.
//! Polynomials are JSON `{"degree": n, "coeffs": [c_0, …, c_n]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::MinPlusMatrix;
use crate::polynomial::MinPlusPolynomial;
use crate::semiring::MinPlus;

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    rows: Vec<Vec<MinPlus>>,
}

/// Anything the command line accepts as input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Matrix(MinPlusMatrix),
    Polynomial(MinPlusPolynomial),
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.column().max(1), e.to_string())
}

pub fn parse_matrix_json(text: &str) -> Result<MinPlusMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(json_error)?;
    if file.rows.len() != file.n {
        return Err(Error::parse(
            1,
            1,
            format!("\"n\" is {} but {} rows were given", file.n, file.rows.len()),
        ));
    }
    MinPlusMatrix::from_rows(file.rows).map_err(|e| Error::parse(1, 1, e.to_string()))
}

pub fn parse_matrix_text(text: &str) -> Result<MinPlusMatrix> {
    let mut rows: Vec<Vec<MinPlus>> = Vec::new();
    let mut first_line = 0;
    for (line_no, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if rows.is_empty() {
            first_line = line_no + 1;
        }
        let mut row = Vec::new();
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let token_len = rest[start..]
                .find(char::is_whitespace)
                .unwrap_or(rest.len() - start);
            let token = &rest[start..start + token_len];
            let column = line[..offset + start].chars().count() + 1;
            let value = token
                .parse::<MinPlus>()
                .map_err(|msg| Error::parse(line_no + 1, column, msg))?;
            row.push(value);
            offset += start + token_len;
            rest = &rest[start + token_len..];
        }
        if let Some(expected) = rows.first().map(Vec::len) {
            if row.len() != expected {
                return Err(Error::parse(
                    line_no + 1,
                    1,
                    format!("row has {} entries, expected {expected}", row.len()),
                ));
            }
        }
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(Error::parse(1, 1, "no matrix rows found"));
    }
    if rows[0].len() != n {
        return Err(Error::parse(
            first_line,
            1,
            format!("{n} rows of {} entries: matrix must be square", rows[0].len()),
        ));
    }
    MinPlusMatrix::from_rows(rows).map_err(|e| Error::parse(first_line, 1, e.to_string()))
}

/// JSON when the text starts with `{`, plain rows otherwise.
pub fn parse_matrix(text: &str) -> Result<MinPlusMatrix> {
    if text.trim_start().starts_with('{') {
        parse_matrix_json(text)
    } else {
        parse_matrix_text(text)
    }
}

pub fn parse_polynomial(text: &str) -> Result<MinPlusPolynomial> {
    serde_json::from_str(text).map_err(json_error)
}

/// Reads a polynomial when the JSON object has a `coeffs` key, a matrix
/// otherwise.
pub fn parse_input(text: &str) -> Result<Input> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
        if value.get("coeffs").is_some() {
            return parse_polynomial(text).map(Input::Polynomial);
        }
    }
    parse_matrix(text).map(Input::Matrix)
}

pub fn matrix_to_json(a: &MinPlusMatrix) -> serde_json::Value {
    let file = MatrixFile {
        n: a.order(),
        rows: a.rows().map(<[MinPlus]>::to_vec).collect(),
    };
    serde_json::to_value(file).expect("plain data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::worked_example_matrix;

    #[test]
    fn plain_text() {
        let a = parse_matrix("# comment\ninf inf 2\n 3  inf 1/2\n\n0 0.5 eps\n").unwrap();
        assert_eq!(a.order(), 3);
        assert_eq!(a.get(1, 2), &MinPlus::ratio(1, 2));
        assert_eq!(a.get(2, 1), &MinPlus::ratio(1, 2));
        assert!(a.get(0, 0).is_epsilon());
    }

    #[test]
    fn plain_text_errors_point_at_token() {
        let err = parse_matrix("1 2\n3 x4\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 2, column: 3, message: "invalid number \"x4\"".into() }
        );
        let err = parse_matrix("1 2\n3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_matrix("1 2\n3 4\n5 6\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_matrix("\n# nothing\n").is_err());
    }

    #[test]
    fn json_matrix() {
        let a = parse_matrix(r#"{"n": 2, "rows": [[1, "inf"], ["3/4", -2.5]]}"#).unwrap();
        assert_eq!(a.get(1, 0), &MinPlus::ratio(3, 4));
        assert_eq!(a.get(1, 1), &MinPlus::ratio(-5, 2));
        let err = parse_matrix("{\"n\": 2,\n \"rows\": [[1, \"zz\"]]}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse_matrix(r#"{"n": 3, "rows": [[1]]}"#).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = worked_example_matrix();
        let text = matrix_to_json(&a).to_string();
        assert_eq!(parse_matrix(&text).unwrap(), a);
    }

    #[test]
    fn input_detection() {
        let p = parse_input(r#"{"degree": 2, "coeffs": [0, 2, 6]}"#).unwrap();
        assert!(matches!(p, Input::Polynomial(_)));
        let m = parse_input("0 1\n1 0").unwrap();
        assert!(matches!(m, Input::Matrix(_)));
    }
}
