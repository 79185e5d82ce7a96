//! Text, JSON and CSV renderings.
//!
//! JSON polynomials follow
//! `{"family": str, "n": int, "terms": [{"x": int, "s": int, "c": decimal-string}, ...]}`
//! with terms in canonical order. Coefficients are strings because they outgrow
//! 64-bit integers quickly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use spreadpoly_core::sequences::Triangle;
use spreadpoly_core::{BiPoly, BigRat, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Rational(String),
    Integer { line: usize, field: String },
    Json(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Rational(s) => write!(f, "malformed rational literal `{s}` (expected `p/q` or an integer)"),
            FormatError::Integer { line, field } => write!(f, "line {line}: `{field}` is not an integer"),
            FormatError::Json(e) => write!(f, "invalid polynomial JSON: {e}"),
        }
    }
}

impl std::error::Error for FormatError {}

/// Parses `p/q` or an integer into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<BigRat, FormatError> {
    let err = || FormatError::Rational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let parse_int = |t: &str| {
        if !t.trim_start_matches(['+', '-']).bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        BigInt::from_str(t).map_err(|_| err())
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::from(1),
    };
    if d == BigInt::from(0) {
        return Err(err());
    }
    Ok(BigRat::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: u32,
    pub s: u32,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub family: String,
    pub n: u32,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_bipoly(family: &str, n: u32, p: &BiPoly) -> Self {
        let terms = p
            .terms()
            .map(|(x, s, c)| TermJson { x, s, c: c.to_string() })
            .collect();
        Self { family: family.to_string(), n, terms }
    }

    pub fn from_unipoly(family: &str, n: u32, p: &UniPoly) -> Self {
        Self::from_bipoly(family, n, &p.to_bipoly())
    }

    pub fn to_bipoly(&self) -> Result<BiPoly, FormatError> {
        let terms = self
            .terms
            .iter()
            .map(|t| parse_rational(&t.c).map(|c| (t.x, t.s, c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BiPoly::from_terms(terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, FormatError> {
        serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))
    }
}

/// One row per line, comma-separated, no header.
pub fn triangle_csv(t: &Triangle) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// The full square matrix (zeros above the diagonal), right-aligned per column.
pub fn triangle_text(t: &Triangle) -> String {
    let size = t.len();
    let cell = |i: usize, j: usize| t.rows()[i].get(j).map_or_else(|| "0".to_string(), ToString::to_string);
    let widths: Vec<usize> = (0..size).map(|j| (0..size).map(|i| cell(i, j).len()).max().unwrap_or(1)).collect();
    let mut out = String::new();
    for i in 0..size {
        let line: Vec<String> = (0..size).map(|j| format!("{:>w$}", cell(i, j), w = widths[j])).collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

pub fn triangle_json(t: &Triangle) -> String {
    let rows: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    serde_json::to_string(&rows).expect("plain data serializes")
}

pub fn parse_triangle_csv(s: &str) -> Result<Vec<Vec<BigInt>>, FormatError> {
    s.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            line.split(',')
                .map(|f| {
                    BigInt::from_str(f.trim())
                        .map_err(|_| FormatError::Integer { line: i + 1, field: f.to_string() })
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use spreadpoly_core::sequences::{triangle, z_polynomial, ZMethod};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("49").unwrap(), BigRat::from_integer(49.into()));
        assert_eq!(parse_rational("-6/4").unwrap(), BigRat::new((-3).into(), 2.into()));
        for bad in ["", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "+"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_golden_and_round_trip() {
        let z2 = z_polynomial(2, ZMethod::ViaFib);
        let j = PolyJson::from_bipoly("Z", 2, &z2);
        assert_eq!(
            j.to_json(),
            r#"{"family":"Z","n":2,"terms":[{"x":2,"s":0,"c":"1"},{"x":1,"s":1,"c":"4"}]}"#
        );
        let back = PolyJson::from_json(&j.to_json()).unwrap();
        assert_eq!(back.to_bipoly().unwrap(), z2);
        assert!(PolyJson::from_json("{").is_err());
    }

    #[test]
    fn triangle_renderings() {
        let t = triangle(3).unwrap();
        assert_eq!(triangle_csv(&t), "1\n4,1\n9,6,1\n");
        assert_eq!(triangle_text(&t), "1  0  0\n4  1  0\n9  6  1\n");
        assert_eq!(triangle_json(&t), r#"[["1"],["4","1"],["9","6","1"]]"#);
        assert_eq!(parse_triangle_csv(&triangle_csv(&t)).unwrap(), t.rows());
        assert!(parse_triangle_csv("1\n4,x\n").is_err());
    }
}
