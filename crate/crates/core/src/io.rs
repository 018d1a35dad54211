//! Plain-text file formats.
//!
//! * Coloring: header `n r`, then one line `i j color` per pair `1 <= i < j <= n`,
//!   every pair exactly once.
//! * String: header `r n`, then `n` whitespace-separated letters.
//! * Permutation: header `n`, then `n` whitespace-separated values.
//! * Twins are JSON: `{"left": [..], "right": [..]}`.

use std::fmt::Write;

use crate::coloring::{edge_count, Color, EdgeColoring, TwinPair};
use crate::error::{Result, TwinError};
use crate::sequences::{LetterString, Permutation};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(TwinError::Parse { line, msg: msg.into() })
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| TwinError::Parse { line: line_no, msg: format!("not a number: {tok:?}") })
        })
        .collect()
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut out = format!("{} {}\n", c.n(), c.palette());
    let mut colors = c.colors().iter();
    for i in 1..=c.n() {
        for j in i + 1..=c.n() {
            writeln!(out, "{i} {j} {}", colors.next().expect("one color per edge")).unwrap();
        }
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing header");
    };
    let [n, r] = numbers(hl, header)?[..] else {
        return parse_err(hl, "header must be `n r`");
    };
    let (n, r) = (n as usize, r as Color);
    if r == 0 {
        return parse_err(hl, "palette size must be positive");
    }
    let mut colors: Vec<Option<Color>> = vec![None; edge_count(n)];
    for (ln, line) in lines {
        let [i, j, col] = numbers(ln, line)?[..] else {
            return parse_err(ln, "expected `i j color`");
        };
        let (i, j) = (i as usize, j as usize);
        if !(1 <= i && i < j && j <= n) {
            return parse_err(ln, format!("pair ({i}, {j}) is not 1 <= i < j <= {n}"));
        }
        if col == 0 || col > r as u64 {
            return parse_err(ln, format!("color {col} outside 1..={r}"));
        }
        let row = i - 1;
        let idx = row * n - row * (row + 1) / 2 + (j - i - 1);
        if colors[idx].replace(col as Color).is_some() {
            return parse_err(ln, format!("duplicate pair ({i}, {j})"));
        }
    }
    if let Some(missing) = colors.iter().position(Option::is_none) {
        let (i, j) = pair_at(n, missing);
        return parse_err(0, format!("missing pair ({i}, {j})"));
    }
    EdgeColoring::from_colors(n, r, colors.into_iter().map(Option::unwrap).collect())
}

fn pair_at(n: usize, mut idx: usize) -> (usize, usize) {
    for i in 1..n {
        if idx < n - i {
            return (i, i + 1 + idx);
        }
        idx -= n - i;
    }
    unreachable!("index within edge count")
}

/// Header line plus the remaining tokens.
fn header_and_body(text: &str, header_len: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing header");
    };
    let head = numbers(hl, header)?;
    if head.len() != header_len {
        return parse_err(hl, format!("header must have {header_len} fields"));
    }
    let mut body = Vec::new();
    for (ln, line) in lines {
        body.extend(numbers(ln, line)?);
    }
    Ok((head, body))
}

pub fn write_string(x: &LetterString) -> String {
    let letters: Vec<String> = x.letters().iter().map(|l| l.to_string()).collect();
    format!("{} {}\n{}\n", x.palette(), x.len(), letters.join(" "))
}

pub fn parse_string(text: &str) -> Result<LetterString> {
    let (head, body) = header_and_body(text, 2)?;
    let (r, n) = (head[0] as Color, head[1] as usize);
    if body.len() != n {
        return parse_err(2, format!("expected {n} letters, found {}", body.len()));
    }
    LetterString::new(r, body.into_iter().map(|v| v as Color).collect())
}

pub fn write_permutation(pi: &Permutation) -> String {
    let values: Vec<String> = pi.values().iter().map(|v| v.to_string()).collect();
    format!("{}\n{}\n", pi.len(), values.join(" "))
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let (head, body) = header_and_body(text, 1)?;
    let n = head[0] as usize;
    if body.len() != n {
        return parse_err(2, format!("expected {n} values, found {}", body.len()));
    }
    Permutation::new(body.into_iter().map(|v| v as usize).collect())
}

pub fn twin_to_json(t: &TwinPair) -> String {
    serde_json::to_string(t).expect("twin serializes")
}

pub fn twin_from_json(text: &str) -> Result<TwinPair> {
    serde_json::from_str(text).map_err(|e| TwinError::Parse { line: e.line(), msg: e.to_string() })
}
