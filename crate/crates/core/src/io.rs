//! JSON and inline text formats for polynomials and search configuration.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, C64};
use crate::search::SearchConfig;

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffIn {
    Real(f64),
    Pair([f64; 2]),
}

impl From<CoeffIn> for C64 {
    fn from(c: CoeffIn) -> C64 {
        match c {
            CoeffIn::Real(re) => C64::new(re, 0.0),
            CoeffIn::Pair([re, im]) => C64::new(re, im),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyIn {
    coeffs: Vec<CoeffIn>,
}

#[derive(Serialize)]
struct PolyOut {
    coeffs: Vec<[f64; 2]>,
}

/// Parses `{"coeffs": [[re, im], ...]}`; plain numbers are real coefficients.
pub fn parse_polynomial_json(text: &str) -> Result<Polynomial> {
    let raw: PolyIn = serde_json::from_str(text)?;
    Polynomial::new(raw.coeffs.into_iter().map(C64::from).collect())
}

pub fn polynomial_to_json(p: &Polynomial) -> String {
    let out = PolyOut {
        coeffs: p.coeffs().iter().map(|c| [c.re, c.im]).collect(),
    };
    serde_json::to_string(&out).expect("finite coefficients serialize")
}

/// Parses `"re,im;re,im;..."`, where a lone number is a real coefficient.
pub fn parse_inline_coeffs(text: &str) -> Result<Polynomial> {
    let mut coeffs = Vec::new();
    for (i, item) in text.split(';').map(str::trim).enumerate() {
        if item.is_empty() {
            return Err(Error::Parse(format!("empty coefficient at position {i}")));
        }
        let parts: Vec<&str> = item.split(',').map(str::trim).collect();
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad number {s:?} at position {i}")))
        };
        let c = match parts.as_slice() {
            [re] => C64::new(num(re)?, 0.0),
            [re, im] => C64::new(num(re)?, num(im)?),
            _ => {
                return Err(Error::Parse(format!(
                    "expected `re` or `re,im` at position {i}, got {item:?}"
                )))
            }
        };
        coeffs.push(c);
    }
    Polynomial::new(coeffs)
}

pub fn read_polynomial(path: &Path) -> Result<Polynomial> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_polynomial_json(&text)
}

pub fn parse_config(text: &str) -> Result<SearchConfig> {
    let cfg: SearchConfig = serde_json::from_str(text)?;
    cfg.validate()?;
    Ok(cfg)
}

pub fn read_config(path: &Path) -> Result<SearchConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}
