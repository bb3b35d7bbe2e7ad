//! Plain-text matrix files.
//!
//! ```text
//! # comment
//! 2 3
//! 1 0.5 -2e-3
//! 0 1+2i 3.5-1e-1i
//! ```
//!
//! A header `m n` is followed by `m` rows of `n` whitespace-separated entries.
//! An entry is a decimal real or `a+bi` / `a-bi` with no inner spaces. Blank
//! lines and lines whose first non-blank character is `#` are skipped.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use proper_split::{Matrix, C64};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum MatrixFileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

/// A parsed matrix together with the raw bytes it came from.
#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub path: PathBuf,
    pub matrix: Matrix,
    pub bytes: Vec<u8>,
}

impl MatrixFile {
    pub fn read(path: &Path) -> Result<Self, MatrixFileError> {
        let bytes = std::fs::read(path).map_err(|source| MatrixFileError::Io { path: path.into(), source })?;
        let text = String::from_utf8_lossy(&bytes);
        let matrix = parse(&text).map_err(|source| MatrixFileError::Parse { path: path.into(), source })?;
        Ok(Self { path: path.into(), matrix, bytes })
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Tokens of one line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn parse_real(text: &str) -> Option<f64> {
    let body = text.strip_prefix(['+', '-']).unwrap_or(text);
    let starts_ok = body.starts_with(|c: char| c.is_ascii_digit() || c == '.');
    let chars_ok = body.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'));
    if !(starts_ok && chars_ok) {
        return None;
    }
    text.parse().ok()
}

/// Parses one entry; `None` on a malformed token.
pub fn parse_entry(token: &str) -> Option<C64> {
    let Some(body) = token.strip_suffix('i') else {
        return parse_real(token).map(|re| C64::new(re, 0.0));
    };
    // the imaginary part begins at the last sign that is neither leading
    // nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))?;
    let re = parse_real(&body[..split])?;
    let im = parse_real(&body[split..])?;
    Some(C64::new(re, im))
}

pub fn parse(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let trimmed = l.trim_start();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or_else(|| err(1, 1, "missing header \"m n\""))?;
    let parts = tokens(header);
    if parts.len() != 2 {
        let column = parts.get(2).map_or(header.chars().count() + 1, |p| p.0);
        return Err(err(header_line, column, "header must be exactly \"m n\""));
    }
    let dim = |(column, tok): (usize, &str)| -> Result<usize, ParseError> {
        match tok.parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(err(header_line, column, format!("expected a positive dimension, found {tok:?}"))),
        }
    };
    let rows = dim(parts[0])?;
    let cols = dim(parts[1])?;

    let mut entries = Vec::with_capacity(rows * cols);
    let mut last_line = header_line;
    for row in 0..rows {
        let Some((line_no, line)) = lines.next() else {
            return Err(err(last_line + 1, 1, format!("expected {rows} rows, found {row}")));
        };
        last_line = line_no;
        let toks = tokens(line);
        if toks.len() != cols {
            let column = toks.get(cols).map_or(line.chars().count() + 1, |t| t.0);
            return Err(err(line_no, column, format!("expected {cols} entries, found {}", toks.len())));
        }
        for (column, tok) in toks {
            let z = parse_entry(tok).ok_or_else(|| err(line_no, column, format!("malformed entry {tok:?}")))?;
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(err(line_no, column, format!("non-finite entry {tok:?}")));
            }
            entries.push(z);
        }
    }
    if let Some((line_no, line)) = lines.next() {
        let column = tokens(line).first().map_or(1, |t| t.0);
        return Err(err(line_no, column, format!("unexpected content after {rows} rows")));
    }
    Ok(Matrix::new(rows, cols, entries).expect("dimensions checked above"))
}

/// One entry with 17 significant digits; real when the imaginary part is zero.
pub fn format_entry(z: C64) -> String {
    if z.im == 0.0 {
        format!("{:.16e}", z.re)
    } else {
        format!("{:.16e}{:+.16e}i", z.re, z.im)
    }
}

pub fn format(m: &Matrix) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", m.rows(), m.cols()).unwrap();
    for row in m.to_rows() {
        let line: Vec<String> = row.into_iter().map(format_entry).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn write(path: &Path, m: &Matrix) -> std::io::Result<()> {
    std::fs::write(path, format(m))
}
