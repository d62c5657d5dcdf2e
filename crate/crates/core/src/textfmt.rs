//! Plain-text vectors of field elements.
//!
//! One element per line, coefficient of `x^0` (or value `h_0`) first.
//! Elements are unsigned decimal or `0x`-prefixed hex. Blank lines and
//! everything after `#` are ignored; several whitespace-separated elements
//! may share a line.

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldParams};

pub fn parse_element(field: &FieldParams, token: &str) -> std::result::Result<Fe, String> {
    let value = match token
        .strip_prefix("0x")
        .or_else(|| token.strip_prefix("0X"))
    {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => token.parse::<u64>(),
    }
    .map_err(|_| format!("{token:?} is not an unsigned integer"))?;
    field.element(value).map_err(|_| {
        format!(
            "{value} is not an element of GF(2^{}) (must be < {})",
            field.m(),
            field.q()
        )
    })
}

pub fn parse_elements(field: &FieldParams, text: &str) -> Result<Vec<Fe>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            let fe =
                parse_element(field, token).map_err(|msg| Error::Parse { line: idx + 1, msg })?;
            out.push(fe);
        }
    }
    Ok(out)
}

/// Canonical form: decimal, one element per line, trailing newline.
pub fn format_elements(values: &[Fe]) -> String {
    let mut s = String::with_capacity(values.len() * 4);
    for v in values {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}
