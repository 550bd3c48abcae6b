//! `delta,R,source` files: curves in the given order, samples by `δ`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::bounds::{BoundCurve, Sample, Source};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct Row {
    delta: f64,
    #[serde(rename = "R")]
    r: f64,
    source: String,
}

fn csv_err(e: csv::Error) -> Error {
    Error::Artifact(e.to_string())
}

pub fn emit_csv(curves: &[BoundCurve]) -> Result<String> {
    if curves.is_empty() || curves.iter().all(|c| c.samples.is_empty()) {
        return Err(Error::InvalidParameter("no samples to write".into()));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for c in curves {
        let source = c.source.to_string();
        for s in &c.samples {
            w.serialize(Row {
                delta: s.delta,
                r: s.r,
                source: source.clone(),
            })
            .map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Artifact(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Consecutive rows with the same source form one curve.
pub fn parse_csv(text: &str) -> Result<Vec<BoundCurve>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(csv_err)?;
    if header.iter().collect::<Vec<_>>() != ["delta", "R", "source"] {
        return Err(Error::Artifact(format!("unexpected header {header:?}")));
    }
    let mut groups: Vec<(Source, Vec<Sample>)> = Vec::new();
    for row in r.deserialize::<Row>() {
        let row = row.map_err(csv_err)?;
        let source: Source = row.source.parse()?;
        let sample = Sample {
            delta: row.delta,
            r: row.r,
        };
        match groups.last_mut() {
            Some((s, v)) if *s == source => v.push(sample),
            _ => groups.push((source, vec![sample])),
        }
    }
    groups
        .into_iter()
        .map(|(s, v)| BoundCurve::new(s, v))
        .collect()
}

pub fn write_csv(curves: &[BoundCurve], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, emit_csv(curves)?)?;
    Ok(())
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<BoundCurve>> {
    parse_csv(&std::fs::read_to_string(path)?)
}
