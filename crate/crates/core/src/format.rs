//! Line-oriented text format for arrays.
//!
//! ```text
//! la v1
//! t 2
//! levels 2 2 3
//! 0 0 0
//! 1 1 2
//! ```
//!
//! Lines starting with `#` are comments. Blank lines are ignored on input.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{Array, LevelProfile};

const MAGIC: &str = "la v1";

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, line) in self.inner.by_ref() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }
}

fn header_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| header_err(line, format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

fn parse_header<'a>(lines: &mut Lines<'a>) -> Result<LevelProfile> {
    match lines.next() {
        Some((_, MAGIC)) => {}
        Some((n, other)) => return Err(header_err(n, format!("expected {MAGIC:?}, got {other:?}"))),
        None => return Err(header_err(0, "empty document")),
    }
    let (n, line) = lines.next().ok_or_else(|| header_err(0, "missing strength line"))?;
    let t = line
        .strip_prefix("t ")
        .and_then(|s| s.trim().parse::<usize>().ok())
        .ok_or_else(|| header_err(n, format!("expected `t <strength>`, got {line:?}")))?;
    let (n, line) = lines.next().ok_or_else(|| header_err(0, "missing levels line"))?;
    let levels = line
        .strip_prefix("levels ")
        .ok_or_else(|| header_err(n, format!("expected `levels ...`, got {line:?}")))?;
    let levels = parse_numbers(n, levels)?;
    if levels.is_empty() {
        return Err(header_err(n, "no levels given"));
    }
    LevelProfile::new(levels, t).map_err(|e| header_err(n, e.to_string()))
}

pub fn parse_array(text: &str) -> Result<Array> {
    let mut lines = Lines::new(text);
    let profile = parse_header(&mut lines)?;
    let k = profile.k();
    let mut cells = Vec::new();
    let mut n_rows = 0;
    for (n, line) in lines {
        let row = parse_numbers(n, line)?;
        if row.len() != k {
            return Err(header_err(
                n,
                format!("row has {} entries, expected {k}", row.len()),
            ));
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= profile.level(c) {
                return Err(Error::EntryOutOfRange {
                    row: n_rows + 1,
                    col: c + 1,
                    value: v,
                    size: profile.level(c),
                });
            }
        }
        cells.extend(row);
        n_rows += 1;
    }
    if n_rows == 0 {
        return Err(header_err(0, "array has no rows"));
    }
    Array::from_cells(profile, n_rows, cells)
}

/// Reads the same header followed by `k` lines, one per column.
///
/// Handy for arrays that are printed transposed.
pub fn parse_transposed(text: &str) -> Result<Array> {
    let mut lines = Lines::new(text);
    let profile = parse_header(&mut lines)?;
    let columns: Vec<Vec<u32>> = lines
        .map(|(n, line)| parse_numbers(n, line))
        .collect::<Result<_>>()?;
    if columns.len() != profile.k() {
        return Err(header_err(
            0,
            format!("{} column lines, expected {}", columns.len(), profile.k()),
        ));
    }
    let n_rows = columns[0].len();
    if let Some(c) = columns.iter().position(|c| c.len() != n_rows) {
        return Err(header_err(0, format!("column {} has a different length", c + 1)));
    }
    let rows = (0..n_rows)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    Array::new(profile, rows)
}

pub fn serialize_array(a: &Array) -> String {
    let mut out = String::with_capacity(16 + a.cells().len() * 3);
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(out, "t {}", a.strength());
    out.push_str("levels");
    for v in a.levels() {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    for row in a.rows() {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let a = parse_array("la v1\nt 1\nlevels 2 2\n0 0\n1 1\n").unwrap();
        assert_eq!(a.n_rows(), 2);
        assert_eq!(a.k(), 2);
        assert_eq!(a.row(1), &[1, 1]);
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let a = parse_array("# hi\nla v1\n\nt 1\n# more\nlevels 2 3\n0 2\n").unwrap();
        assert_eq!(a.row(0), &[0, 2]);
    }

    #[test]
    fn serialize_is_canonical() {
        let a = parse_array("la v1\nt   1\nlevels 2  2\n0   1\n").unwrap();
        assert_eq!(serialize_array(&a), "la v1\nt 1\nlevels 2 2\n0 1\n");
    }

    #[test]
    fn rejects_bad_inputs() {
        let cases = [
            "",
            "la v2\nt 1\nlevels 2 2\n0 0\n",
            "la v1\nstrength 1\nlevels 2 2\n0 0\n",
            "la v1\nt 1\nlevels\n0 0\n",
            "la v1\nt 1\nlevels 2 2\n0 0 0\n",
            "la v1\nt 2\nlevels 2 2\n0 0\n",
            "la v1\nt 3\nlevels 2 2\n0 0\n",
            "la v1\nt 1\nlevels 1 2\n0 0\n",
            "la v1\nt 1\nlevels 2 2\n",
            "la v1\nt 1\nlevels 2 2\n0 x\n",
        ];
        for text in cases {
            assert!(parse_array(text).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn out_of_range_entry() {
        let err = parse_array("la v1\nt 2\nlevels 2 2 2 2 3\n0 0 0 0 3\n").unwrap_err();
        assert!(matches!(
            err,
            Error::EntryOutOfRange {
                row: 1,
                col: 5,
                value: 3,
                size: 3
            }
        ));
    }

    #[test]
    fn transposed_input() {
        let a = parse_transposed("la v1\nt 1\nlevels 2 3\n0 1 1\n2 0 1\n").unwrap();
        assert_eq!(a.n_rows(), 3);
        assert_eq!(a.row(0), &[0, 2]);
        assert_eq!(a.row(2), &[1, 1]);
    }
}
