//! Plain-text graph format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 1-based vertices)
//! ```
//!
//! Edge `i` is the `i`-th edge line.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn line_err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let mut num = || -> Result<usize, ParseError> {
        let tok = it
            .next()
            .ok_or_else(|| line_err(line, "expected two integers"))?;
        tok.parse()
            .map_err(|_| line_err(line, format!("`{tok}` is not a nonnegative integer")))
    };
    let a = num()?;
    let b = num()?;
    if it.next().is_some() {
        return Err(line_err(line, "trailing tokens"));
    }
    Ok((a, b))
}

impl Graph {
    pub fn parse_text(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let (n, m) = two_numbers(hline, header)?;
        if n == 0 {
            return Err(line_err(hline, "graph needs at least one vertex"));
        }
        if n > super::MAX_VERTICES {
            return Err(line_err(
                hline,
                format!("{n} vertices, at most {} supported", super::MAX_VERTICES),
            ));
        }
        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::new();
        for (line, text) in lines {
            let (u, v) = two_numbers(line, text)?;
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(line_err(line, format!("vertex {w} outside 1..={n}")));
                }
            }
            if u == v {
                return Err(line_err(line, format!("loop {{{u}, {v}}}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(line_err(line, format!("duplicate edge {{{u}, {v}}}")));
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != m {
            return Err(ParseError::EdgeCount {
                expected: m,
                found: edges.len(),
            });
        }
        Ok(Graph::new(n, edges).expect("validated above"))
    }

    /// Serialises in the text format, 1-based, edges in index order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for &(u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}
