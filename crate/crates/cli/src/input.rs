//! Reading ideals and arrangements from a path or inline text.

use std::path::Path;
use std::sync::Arc;

use klp_core::ring::parse::{identifiers, parse_polynomial_list};
use klp_core::{Error, QArrangement, QIdeal, QPolynomial, RingContext};

/// File contents when `source` names an existing file, otherwise `source`
/// itself.
pub fn read_source(source: &str) -> Result<String, Error> {
    let path = Path::new(source);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, column: 0, message: format!("cannot read {source}: {e}") })
    } else {
        Ok(source.to_string())
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn ring_from_names(list: &str, line: usize) -> Result<RingContext, Error> {
    RingContext::new(list.split(',').map(str::trim)).map_err(|e| match e {
        Error::InvalidRing(message) => Error::Parse { line, column: 1, message },
        other => other,
    })
}

/// An ideal given as generators separated by commas or newlines, with an
/// optional `vars: x,y,z` first line. `vars` overrides the header.
pub fn parse_ideal(text: &str, vars: Option<&str>) -> Result<QIdeal, Error> {
    let mut lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty()).collect();
    let mut ring = match vars {
        Some(v) => Some(ring_from_names(v, 0)?),
        None => None,
    };
    if let Some(&(number, first)) = lines.first() {
        if let Some(rest) = first.strip_prefix("vars:") {
            if ring.is_none() {
                ring = Some(ring_from_names(rest, number)?);
            }
            lines.remove(0);
        }
    }
    let ring = match ring {
        Some(r) => r,
        None => {
            let mut names: Vec<String> = Vec::new();
            for &(number, line) in &lines {
                for name in identifiers(line).map_err(|e| at_line(e, number))? {
                    if !names.contains(&name) {
                        names.push(name);
                    }
                }
            }
            if names.is_empty() {
                return Err(Error::InvalidRing("no variables in the input; pass --vars".into()));
            }
            RingContext::infer(names.iter().map(String::as_str))?
        }
    };
    let mut gens: Vec<QPolynomial> = Vec::new();
    for (number, line) in lines {
        let line = line.trim_end_matches(',');
        gens.extend(parse_polynomial_list(line, &ring).map_err(|e| at_line(e, number))?);
    }
    QIdeal::new(Arc::new(ring), gens)
}

pub fn parse_arrangement(text: &str) -> Result<QArrangement, Error> {
    QArrangement::parse(text)
}

fn at_line(err: Error, line: usize) -> Error {
    match err {
        Error::Parse { column, message, .. } => Error::Parse { line, column, message },
        other => other,
    }
}
