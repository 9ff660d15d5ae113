//! Reading and writing complexes.
//!
//! JSON: `{"m": 4, "facets": [[1, 2, 3], [3, 4]]}`.
//!
//! Text: the first line holds `m` (optionally written `m 4` or `m = 4`),
//! then one facet per line with labels separated by spaces or commas.
//! Blank lines and anything after `#` are ignored.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    m: usize,
    facets: Vec<Vec<usize>>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

pub fn from_json(input: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile =
        serde_json::from_str(input).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    SimplicialComplex::new(file.m, &file.facets)
}

pub fn from_text(input: &str) -> Result<SimplicialComplex> {
    let mut m: Option<usize> = None;
    let mut facets = Vec::new();
    for (ln, raw) in input.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let tokens = tokens(line);
        if tokens.is_empty() {
            continue;
        }
        let Some(m) = m else {
            let mut rest = tokens.as_slice();
            if rest[0].1 == "m" {
                rest = &rest[1..];
            }
            if rest.first().is_some_and(|t| t.1 == "=") {
                rest = &rest[1..];
            }
            let [(col, tok)] = rest else {
                return Err(parse_error(line_no, 1, "expected the vertex count on the first line"));
            };
            let n = tok.parse::<usize>().map_err(|_| parse_error(line_no, *col, format!("invalid vertex count {tok:?}")))?;
            if n == 0 {
                return Err(parse_error(line_no, *col, "vertex count must be positive"));
            }
            m = Some(n);
            continue;
        };
        let mut facet = Vec::with_capacity(tokens.len());
        for (col, tok) in tokens {
            let v = tok.parse::<usize>().map_err(|_| parse_error(line_no, col, format!("invalid vertex label {tok:?}")))?;
            if v == 0 || v > m {
                return Err(parse_error(line_no, col, format!("vertex {v} out of range 1..={m}")));
            }
            if facet.contains(&v) {
                return Err(parse_error(line_no, col, format!("vertex {v} repeated")));
            }
            facet.push(v);
        }
        facets.push(facet);
    }
    let m = m.ok_or_else(|| parse_error(1, 1, "missing vertex count"))?;
    SimplicialComplex::new(m, &facets)
}

/// `(1-based column, token)` for each token, splitting on whitespace, commas
/// and around `=`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        let sep = c.is_whitespace() || c == ',';
        if sep || c == '=' {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
            if c == '=' {
                out.push((i + 1, "="));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// JSON if the first non-blank character is `{`, text otherwise.
pub fn parse(input: &str) -> Result<SimplicialComplex> {
    if input.trim_start().starts_with('{') {
        from_json(input)
    } else {
        from_text(input)
    }
}

/// Canonical JSON: facets sorted colexicographically, labels ascending.
pub fn to_json(k: &SimplicialComplex) -> String {
    let file = ComplexFile { name: None, m: k.m(), facets: k.facet_lists() };
    serde_json::to_string(&file).expect("serializable")
}

pub fn to_json_named(k: &SimplicialComplex, name: &str) -> String {
    let file = ComplexFile { name: Some(name.to_string()), m: k.m(), facets: k.facet_lists() };
    serde_json::to_string(&file).expect("serializable")
}

pub fn to_text(k: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", k.m());
    for f in k.facet_lists() {
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out += &labels.join(" ");
        out += "\n";
    }
    out
}

/// A canonical byte string for hashing: `m`, then each facet on its own line.
pub fn normalized_bytes(k: &SimplicialComplex) -> Vec<u8> {
    to_text(k).into_bytes()
}
