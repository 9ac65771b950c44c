//! Text forms accepted on the command line.

use std::path::Path;

use serde::de::DeserializeOwned;
use symprod_core::arith::parse_bigint;
use symprod_core::{Divisor3, Error, HomogeneousForm, ProjectivePoint, Result};

/// `1,2,3`, `1:2:3` or `(1:2:3)`.
pub fn point(text: &str) -> Result<ProjectivePoint> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = inner
        .split([',', ':'])
        .map(|c| parse_bigint(c.trim()))
        .collect::<Result<Vec<_>>>()?;
    ProjectivePoint::from_integers(coords)
}

/// Points separated by `;`.
pub fn points(text: &str) -> Result<Vec<ProjectivePoint>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(point).collect()
}

/// `xi,theta` pairs separated by `;`.
pub fn class_pairs(text: &str) -> Result<Vec<(i64, i64)>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
            let [a, b] = parts.as_slice() else {
                return Err(Error::Parse(format!("expected `xi,theta`, got `{pair}`")));
            };
            let num = |s: &str| s.parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: `{s}`")));
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

/// Reads `arg` as a file if one exists at that path, else treats it as the
/// content itself.
fn file_or_inline(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed {what}: {e}")))
}

/// A JSON divisor `{"points": [[..], [..], [..]]}` (file or inline), or
/// three inline points.
pub fn divisor(arg: &str) -> Result<Divisor3> {
    let text = file_or_inline(arg)?;
    if text.trim_start().starts_with('{') {
        return json(&text, "divisor");
    }
    let pts = points(&text)?;
    let [a, b, c]: [ProjectivePoint; 3] = pts
        .try_into()
        .map_err(|v: Vec<_>| Error::Parse(format!("a divisor needs 3 points, got {}", v.len())))?;
    Divisor3::new(a, b, c)
}

/// A form in the `{"degree": k, "terms": [...]}` schema, file or inline.
pub fn form(arg: &str) -> Result<HomogeneousForm> {
    json(&file_or_inline(arg)?, "form")
}
