//! Parsing of the comma-separated command-line values.

use std::str::FromStr;

use polygon_duality::{Error, GeeParams, IndexSet, LengthVector, Rational};

/// Lengths as `p` or `p/q` tokens. Decimals are rejected.
pub fn parse_lengths(s: &str) -> Result<LengthVector, String> {
    let raw = split(s)
        .map(|tok| {
            Rational::from_str(tok).map_err(|_| format!("invalid length {tok:?} (expected p or p/q)"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    LengthVector::normalize(&raw).map_err(|e| e.to_string())
}

pub fn parse_gee(s: &str) -> Result<GeeParams, String> {
    let a = split(s)
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| format!("invalid gee increment {tok:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    GeeParams::new(a).map_err(|e| e.to_string())
}

/// `""` is the empty set.
pub fn parse_index_set(s: &str) -> Result<IndexSet, String> {
    let elems = split(s)
        .map(|tok| tok.parse::<i64>().map_err(|_| format!("invalid subscript {tok:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    IndexSet::from_signed(elems).map_err(|e: Error| e.to_string())
}

fn split(s: &str) -> impl Iterator<Item = &str> {
    let s = s.trim();
    s.split(',')
        .map(str::trim)
        .filter(move |_| !s.is_empty())
}
