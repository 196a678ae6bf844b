use std::fmt::Write;

use super::MPoly;
use crate::error::{Error, Result};
use crate::scalar::parse_scalar;

pub(super) fn dump(p: &MPoly) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        write!(out, "{c}").unwrap();
        for e in m.exponents() {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses the output of [`MPoly::dump`]. Blank lines are ignored, so an
/// empty text is the zero polynomial.
pub fn parse_dump(text: &str, nvars: usize) -> Result<MPoly> {
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut fields = line.split_whitespace();
        let Some(coeff) = fields.next() else { continue };
        let c = parse_scalar(coeff)?;
        let exps = fields
            .map(|f| f.parse::<u16>().map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1))))
            .collect::<Result<Vec<_>>>()?;
        if exps.len() != nvars {
            return Err(Error::Parse(format!(
                "line {}: {} exponents, expected {nvars}",
                lineno + 1,
                exps.len()
            )));
        }
        terms.push((exps, c));
    }
    MPoly::from_terms(nvars, terms)
}
