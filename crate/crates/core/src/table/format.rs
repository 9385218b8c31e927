//! Plain-text table files.
//!
//! ```text
//! # optional comment lines
//! 3 2
//! 0 1 2 1 2 0 2 0 1
//! ```
//!
//! The header is `m k`, two decimal integers separated by a single space.
//! The `m^k` values follow in row-major order (last argument fastest),
//! separated by any whitespace.

use std::fmt;
use std::path::Path;

use super::{Budget, FiniteTable};
use crate::error::{Error, ParseError, Position, Result};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError::new(Position { line, column }, message))
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let malformed = || err(line_no, 1, format!("malformed header {line:?}, expected \"m k\""));
    let (m, k) = line.split_once(' ').ok_or_else(malformed)?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(m) || !digits(k) {
        return Err(malformed());
    }
    let m: usize = m.parse().map_err(|_| malformed())?;
    let k: usize = k.parse().map_err(|_| malformed())?;
    if m == 0 || k == 0 {
        return Err(err(line_no, 1, "m and k must be positive"));
    }
    Ok((m, k))
}

/// Parses the table text format under the default budget.
pub fn parse_table(text: &str) -> Result<FiniteTable> {
    parse_table_with_budget(text, Budget::default())
}

pub fn parse_table_with_budget(text: &str, budget: Budget) -> Result<FiniteTable> {
    let mut header = None;
    let mut entries = Vec::new();
    let mut expected = 0;
    let mut last_pos = (1, 1);
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim_start().starts_with('#') {
            continue;
        }
        let Some((m, _)) = header else {
            if line.trim().is_empty() {
                continue;
            }
            let (m, k) = parse_header(line_no, line)?;
            expected = budget.states(m, k)?;
            entries.reserve(expected);
            header = Some((m, k));
            continue;
        };
        let mut rest = line;
        let mut col = 1;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            col += start;
            rest = &rest[start..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            let token = &rest[..end];
            let value: usize = token
                .bytes()
                .all(|b| b.is_ascii_digit())
                .then(|| token.parse().ok())
                .flatten()
                .ok_or_else(|| err(line_no, col, format!("expected a decimal value, found {token:?}")))?;
            if value >= m {
                return Err(err(
                    line_no,
                    col,
                    format!("value {value} out of range 0..{m}"),
                ));
            }
            if entries.len() == expected {
                return Err(err(
                    line_no,
                    col,
                    format!("too many entries, expected {expected}"),
                ));
            }
            entries.push(value);
            last_pos = (line_no, col + end);
            col += end;
            rest = &rest[end..];
        }
    }
    let Some((m, k)) = header else {
        return Err(err(1, 1, "missing header \"m k\""));
    };
    if entries.len() != expected {
        return Err(err(
            last_pos.0,
            last_pos.1,
            format!("expected {expected} entries, found {}", entries.len()),
        ));
    }
    FiniteTable::new(m, k, entries)
}

pub fn load_table(path: impl AsRef<Path>) -> Result<FiniteTable> {
    let text = std::fs::read_to_string(path)?;
    parse_table(&text)
}

impl fmt::Display for FiniteTable {
    /// Header line, then all values on one line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.m(), self.k())?;
        for (i, v) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        writeln!(f)
    }
}
