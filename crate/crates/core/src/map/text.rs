//! The `map v1` text format.
//!
//! ```text
//! map v1
//! flags=4
//! alpha: (0 1)(2 3)
//! beta: (0 2)(1 3)
//! P: ...
//! ```
//!
//! Cycles start at their least element and are sorted by it; fixed points are
//! omitted. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::{validate_map, FlagSet, Map};
use crate::error::ParseError;
use crate::perm::Permutation;

pub fn write_map(m: &Map) -> String {
    let mut s = String::new();
    writeln!(s, "map v1").unwrap();
    writeln!(s, "flags={}", m.len()).unwrap();
    for (name, p) in [("alpha", m.alpha()), ("beta", m.beta()), ("P", m.rotation())] {
        writeln!(s, "{name}: {p}").unwrap();
    }
    s
}

fn parse_cycles(text: &str, m: usize, line: usize) -> Result<Permutation, ParseError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(ParseError::syntax(line, format!("expected '(' at {rest:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(ParseError::syntax(line, "unclosed cycle"));
        };
        let cycle = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| ParseError::syntax(line, format!("bad flag index {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(&cycles, m).map_err(|source| ParseError::Perm { line, source })
}

#[derive(Default)]
struct Record {
    start: usize,
    flags: Option<usize>,
    alpha: Option<(usize, String)>,
    beta: Option<(usize, String)>,
    rotation: Option<(usize, String)>,
}

impl Record {
    fn finish(self) -> Result<Map, ParseError> {
        let m = self
            .flags
            .ok_or_else(|| ParseError::syntax(self.start, "missing flags= line"))?;
        let get = |field: Option<(usize, String)>, name: &str| -> Result<Permutation, ParseError> {
            let (line, text) =
                field.ok_or_else(|| ParseError::syntax(self.start, format!("missing {name}: line")))?;
            parse_cycles(&text, m, line)
        };
        let alpha = get(self.alpha, "alpha")?;
        let beta = get(self.beta, "beta")?;
        let rotation = get(self.rotation, "P")?;
        let flags = FlagSet::new(alpha, beta)?;
        Ok(validate_map(flags, rotation)?)
    }
}

/// Parses every record in `text`.
pub fn parse_maps(text: &str) -> Result<Vec<Map>, ParseError> {
    let mut out = Vec::new();
    let mut current: Option<Record> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if body == "map v1" {
            if let Some(rec) = current.take() {
                out.push(rec.finish()?);
            }
            current = Some(Record {
                start: line,
                ..Record::default()
            });
            continue;
        }
        let Some(rec) = current.as_mut() else {
            return Err(ParseError::syntax(line, "expected 'map v1' header"));
        };
        if let Some(v) = body.strip_prefix("flags=") {
            let m = v
                .trim()
                .parse::<usize>()
                .map_err(|_| ParseError::syntax(line, format!("bad flag count {v:?}")))?;
            rec.flags = Some(m);
            continue;
        }
        let Some((key, value)) = body.split_once(':') else {
            return Err(ParseError::syntax(line, format!("unrecognised line {body:?}")));
        };
        let slot = match key.trim() {
            "alpha" => &mut rec.alpha,
            "beta" => &mut rec.beta,
            "P" => &mut rec.rotation,
            other => return Err(ParseError::syntax(line, format!("unknown field {other:?}"))),
        };
        if slot.is_some() {
            return Err(ParseError::syntax(line, format!("duplicate field {}", key.trim())));
        }
        *slot = Some((line, value.to_string()));
    }
    if let Some(rec) = current {
        out.push(rec.finish()?);
    }
    Ok(out)
}

/// Parses a text holding exactly one record.
pub fn parse_map(text: &str) -> Result<Map, ParseError> {
    let mut maps = parse_maps(text)?;
    match maps.len() {
        1 => Ok(maps.pop().unwrap()),
        0 => Err(ParseError::syntax(1, "no map record")),
        k => Err(ParseError::syntax(1, format!("expected one map record, found {k}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::MapError;
    use crate::map::fixtures::*;

    #[test]
    fn round_trip() {
        let m = torus_k4();
        let text = write_map(&m);
        assert!(text.starts_with("map v1\nflags=24\nalpha: (0 1)(2 3)"));
        assert_eq!(parse_map(&text).unwrap(), m);
        let two = format!("# two records\n{text}\n{}", write_map(&m.mirror()));
        assert_eq!(parse_maps(&two).unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "map v1\nflags=4\nalpha: (0 1)(2 3)\nbeta: (0 2)(1 x)\nP: ()\n";
        assert!(matches!(parse_map(text), Err(ParseError::Syntax { line: 4, .. })));
        let text = "map v1\nflags=4\nalpha: (0 1)(2 3)\nbeta: (0 2)(1 3)\nP: (0 7)\n";
        assert!(matches!(parse_map(text), Err(ParseError::Perm { line: 5, .. })));
        let text = "flags=4\n";
        assert!(matches!(parse_map(text), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn axiom_violations_surface() {
        let text = "map v1\nflags=4\nalpha: (0 1)(2 3)\nbeta: (0 2)(1 3)\nP: (0 1)\n";
        assert_eq!(parse_map(text), Err(ParseError::Map(MapError::AxiomI(0))));
    }
}
