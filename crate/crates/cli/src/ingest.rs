//! Reading and writing curves as CSV or JSON.
//!
//! CSV: one point per line, comma-separated coordinates. Lines starting
//! with `#` are ignored. JSON: an array of points, each an array of numbers.

use std::path::Path;

use frechet_gap_core::Curve;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `json` for `*.json`, CSV otherwise.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Curve> {
    match format {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

pub fn read_curve(path: &Path, format: Option<Format>) -> Result<Curve> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text, format.unwrap_or_else(|| Format::from_path(path)))
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_csv(text: &str) -> Result<Curve> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut points: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Input(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let point = record
            .iter()
            .map(|tok| {
                tok.parse::<f64>().map_err(|_| CliError::Line {
                    line,
                    message: format!("not a number: {tok:?}"),
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        check_point(&points, &point, line)?;
        points.push(point);
    }
    finish(points)
}

pub fn parse_json(text: &str) -> Result<Curve> {
    let points: Vec<Vec<f64>> = serde_json::from_str(text).map_err(|e| CliError::Line {
        line: e.line() as u64,
        message: format!("expected an array of number arrays ({e})"),
    })?;
    for (k, p) in points.iter().enumerate() {
        check_point(&points[..k], p, 0).map_err(|_| {
            CliError::Input(format!(
                "point {} has {} coordinates, expected {}",
                k + 1,
                p.len(),
                points[0].len()
            ))
        })?;
    }
    finish(points)
}

fn check_point(before: &[Vec<f64>], point: &[f64], line: u64) -> Result<()> {
    if point.iter().any(|c| !c.is_finite()) {
        return Err(CliError::Line {
            line,
            message: "coordinates must be finite".into(),
        });
    }
    match before.first() {
        Some(first) if first.len() != point.len() => Err(CliError::Line {
            line,
            message: format!("{} coordinates, expected {}", point.len(), first.len()),
        }),
        _ => Ok(()),
    }
}

fn finish(points: Vec<Vec<f64>>) -> Result<Curve> {
    if points.is_empty() {
        return Err(CliError::Input("the curve has no points".into()));
    }
    Ok(Curve::new(&points)?)
}

pub fn to_csv(curve: &Curve) -> String {
    let mut out = String::new();
    for p in curve.points() {
        let row: Vec<String> = p.iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(curve: &Curve) -> String {
    let points: Vec<&[f64]> = curve.points().collect();
    let mut out = serde_json::to_string(&points).expect("finite coordinates serialize");
    out.push('\n');
    out
}

pub fn write_curve(path: &Path, curve: &Curve) -> Result<()> {
    let text = match Format::from_path(path) {
        Format::Csv => to_csv(curve),
        Format::Json => to_json(curve),
    };
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
