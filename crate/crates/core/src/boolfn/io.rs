//! Truth-table files.
//!
//! `.bf`: line 1 `n=<k>`, line 2 the `2^k` table characters in index order.
//! `.pbf`: line 1 `n=<k>`, then one `<point> <value>` line per domain point,
//! the point written as `k` bits with `x1` first.

use std::collections::BTreeMap;
use std::path::Path;

use super::{BooleanFunction, PartialBooleanFunction};
use crate::cube;
use crate::error::{Error, Result};
use crate::limits::MAX_ARITY;

fn parse_header(line: Option<&str>) -> Result<usize> {
    let line = line.ok_or_else(|| Error::Parse("missing header line".into()))?;
    let rest = line
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse(format!("expected 'n=<k>', got '{}'", line.trim())))?;
    let n: usize = rest
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad arity '{rest}'")))?;
    if n > MAX_ARITY {
        return Err(Error::Parse(format!("arity {n} too large")));
    }
    Ok(n)
}

fn parse_bit(c: char) -> Result<bool> {
    match c {
        '0' => Ok(false),
        '1' => Ok(true),
        _ => Err(Error::Parse(format!("bad table character '{c}'"))),
    }
}

pub fn parse_bf(text: &str) -> Result<BooleanFunction> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n = parse_header(lines.next())?;
    let table_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing table line".into()))?
        .trim();
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after table".into()));
    }
    let table = table_line.chars().map(parse_bit).collect::<Result<Vec<_>>>()?;
    BooleanFunction::new(n, table)
}

pub fn format_bf(f: &BooleanFunction) -> String {
    format!("n={}\n{}\n", f.arity(), f.table_string())
}

pub fn parse_pbf(text: &str) -> Result<PartialBooleanFunction> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n = parse_header(lines.next())?;
    let mut values = BTreeMap::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let (point, value) = match (parts.next(), parts.next(), parts.next()) {
            (Some(p), Some(v), None) => (p, v),
            _ => return Err(Error::Parse(format!("bad line '{line}'"))),
        };
        let (x, len) = cube::parse(point)?;
        if len != n {
            return Err(Error::Parse(format!("point '{point}' has {len} bits, expected {n}")));
        }
        let mut chars = value.chars();
        let v = match (chars.next(), chars.next()) {
            (Some(c), None) => parse_bit(c)?,
            _ => return Err(Error::Parse(format!("bad value '{value}'"))),
        };
        if values.insert(x, v).is_some() {
            return Err(Error::Parse(format!("point '{point}' listed twice")));
        }
    }
    PartialBooleanFunction::new(n, values)
}

pub fn format_pbf(f: &PartialBooleanFunction) -> String {
    let mut s = format!("n={}\n", f.arity());
    for (x, v) in f.entries() {
        s.push_str(&format!("{} {}\n", cube::format(x, f.arity()), v as u8));
    }
    s
}

pub fn read_bf(path: &Path) -> Result<BooleanFunction> {
    parse_bf(&std::fs::read_to_string(path)?)
}

pub fn read_pbf(path: &Path) -> Result<PartialBooleanFunction> {
    parse_pbf(&std::fs::read_to_string(path)?)
}
