//! Reading tabulated potentials from text or JSON.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::grid::{Grid, RealFunctionSamples};

/// Allowed deviation of a tabulated abscissa from the uniform grid, in units
/// of the spacing.
pub const GRID_ALIGN_TOL: f64 = 1e-9;

#[derive(Deserialize)]
struct Columns {
    x: Vec<f64>,
    #[serde(rename = "V")]
    v: Vec<f64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonInput {
    Flat(Columns),
    Report { arrays: Columns },
}

/// Two whitespace-separated columns `x V` per line; `#` starts a comment.
pub fn parse_text(text: &str) -> Result<RealFunctionSamples> {
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!("line {}: expected 2 columns, found {}", lineno + 1, fields.len())));
        }
        let mut parsed = [0.0; 2];
        for (slot, field) in parsed.iter_mut().zip(&fields) {
            let value: f64 = field
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: cannot read '{field}' as a number", lineno + 1)))?;
            if !value.is_finite() {
                return Err(Error::Parse(format!("line {}: non-finite value '{field}'", lineno + 1)));
            }
            *slot = value;
        }
        xs.push(parsed[0]);
        vs.push(parsed[1]);
    }
    from_columns(&xs, &vs)
}

/// `{"x": [...], "V": [...]}`, either at top level or under `arrays`.
pub fn parse_json(text: &str) -> Result<RealFunctionSamples> {
    // NaN is not valid JSON, so serde_json rejects it here as well
    let input: JsonInput = serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?;
    let cols = match input {
        JsonInput::Flat(c) | JsonInput::Report { arrays: c } => c,
    };
    from_columns(&cols.x, &cols.v)
}

/// Dispatches on the first non-blank character.
pub fn parse(text: &str) -> Result<RealFunctionSamples> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn from_columns(xs: &[f64], vs: &[f64]) -> Result<RealFunctionSamples> {
    if xs.len() != vs.len() {
        return Err(Error::Parse(format!("{} abscissae but {} values", xs.len(), vs.len())));
    }
    if let Some(i) = xs.iter().chain(vs).position(|v| !v.is_finite()) {
        return Err(Error::Parse(format!("non-finite entry at position {i}")));
    }
    let n = xs.len();
    if n < 2 {
        return Err(Error::Parse(format!("{n} rows is too few")));
    }
    let grid = Grid::new(xs[0], xs[n - 1], n).map_err(|e| Error::Parse(format!("grid: {e}")))?;
    let h = grid.h();
    for (i, &x) in xs.iter().enumerate() {
        if (x - grid.x(i)).abs() > GRID_ALIGN_TOL * h {
            return Err(Error::Parse(format!("x[{i}] = {x} is off the uniform grid (expected {})", grid.x(i))));
        }
    }
    RealFunctionSamples::new(grid, vs.to_vec())
}
