//! Arrangement files.
//!
//! ```text
//! # optional comment
//! vars: x,y,z,w
//! x - 5*w
//! y + z - 3*w
//! ```
//!
//! Instead of linear forms, every line may hold the coefficients of one
//! form (`1 0 -5` or `1, 0, -5`). Without a `vars:` header, forms infer the
//! ring from their variable names and coefficient rows use `x1..xl`.

use std::sync::Arc;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::ring::parse::{identifiers, parse_polynomial};
use crate::ring::RingContext;
use crate::scalar::Scalar;

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn parse_number<C: Scalar>(token: &str) -> Option<C> {
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let value = match body.split_once('/') {
        Some((p, q)) => {
            let q = C::from_decimal(q)?;
            if q.is_zero() {
                return None;
            }
            C::from_decimal(p)? / q
        }
        None => C::from_decimal(body)?,
    };
    Some(if negative { -value } else { value })
}

fn numeric_row<C: Scalar>(text: &str) -> Option<Vec<C>> {
    text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).map(parse_number).collect()
}

fn shift_line(err: Error, line: usize) -> Error {
    match err {
        Error::Parse { column, message, .. } => Error::Parse { line, column, message },
        other => other,
    }
}

fn parse_header(text: &str, line: usize) -> Result<Option<RingContext>> {
    let Some(rest) = text.strip_prefix("vars:") else { return Ok(None) };
    let names: Vec<&str> = rest.split(',').map(str::trim).collect();
    RingContext::new(names).map(Some).map_err(|e| match e {
        Error::InvalidRing(message) => Error::Parse { line, column: 1, message },
        other => other,
    })
}

impl<C: Scalar> Arrangement<C> {
    /// Reads the arrangement file format (see the module docs of
    /// `arrangement::file`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines: Vec<Line<'_>> = text
            .lines()
            .enumerate()
            .map(|(i, raw)| Line { number: i + 1, text: raw.split('#').next().unwrap_or("").trim() })
            .filter(|l| !l.text.is_empty())
            .collect();
        let mut ring = None;
        if let Some(first) = lines.first() {
            if let Some(r) = parse_header(first.text, first.number)? {
                ring = Some(r);
                lines.remove(0);
            }
        }
        if lines.is_empty() {
            return Err(Error::Parse { line: 1, column: 1, message: "no hyperplanes given".into() });
        }

        let rows: Vec<Option<Vec<C>>> = lines.iter().map(|l| numeric_row(l.text)).collect();
        if rows.iter().all(Option::is_some) {
            let rows: Vec<Vec<C>> = rows.into_iter().map(Option::unwrap).collect();
            let width = rows[0].len();
            if let Some(bad) = rows.iter().position(|r| r.len() != width) {
                return Err(Error::Parse {
                    line: lines[bad].number,
                    column: 1,
                    message: format!("expected {width} coefficients, found {}", rows[bad].len()),
                });
            }
            let ring = match ring {
                Some(r) => r,
                None => RingContext::standard(width)?,
            };
            return Self::from_matrix(Arc::new(ring), rows);
        }

        let ring = match ring {
            Some(r) => r,
            None => {
                let mut names: Vec<String> = Vec::new();
                for l in &lines {
                    for name in identifiers(l.text).map_err(|e| shift_line(e, l.number))? {
                        if !names.contains(&name) {
                            names.push(name);
                        }
                    }
                }
                RingContext::infer(names.iter().map(String::as_str))?
            }
        };
        let forms = lines
            .iter()
            .map(|l| parse_polynomial(l.text, &ring).map_err(|e| shift_line(e, l.number)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Arc::new(ring), forms)
    }
}
