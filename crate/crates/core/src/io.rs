// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON and CSV formats for sampled curves and polylines.
//!
//! Numbers are written in the shortest decimal form that parses back to the
//! same `f64`, so a write followed by a read is bit-exact.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::geometry::{Point, Space};
use crate::polyline::{Partition, PiecewiseGeodesic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceTag {
    Euclidean,
    Sphere,
}

/// On-disk form shared by curves (`times` are sample times) and polylines
/// (`times` are partition times, `points` the nodes).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub space: SpaceTag,
    pub dim: usize,
    pub closed: bool,
    pub times: Vec<f64>,
    pub points: Vec<Vec<f64>>,
    /// Free-form provenance such as the tolerance an interpolation was built for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl CurveFile {
    fn new(space: Space, closed: bool, times: &[f64], points: &[Point]) -> Self {
        CurveFile {
            space: match space {
                Space::Euclidean(_) => SpaceTag::Euclidean,
                Space::UnitSphere => SpaceTag::Sphere,
            },
            dim: space.dim(),
            closed,
            times: times.to_vec(),
            points: points.iter().map(|p| p.coords().to_vec()).collect(),
            meta: None,
        }
    }

    pub fn from_curve(c: &SampledCurve) -> Self {
        CurveFile::new(c.space(), c.is_closed(), c.times(), c.points())
    }

    pub fn from_polyline(p: &PiecewiseGeodesic) -> Self {
        CurveFile::new(p.space(), p.is_closed(), p.times(), p.nodes())
    }

    pub fn with_meta(mut self, meta: serde_json::Value) -> Self {
        self.meta = Some(meta);
        self
    }

    fn space_and_points(&self) -> Result<(Space, Vec<Point>)> {
        let space = match self.space {
            SpaceTag::Euclidean => Space::Euclidean(self.dim),
            SpaceTag::Sphere if self.dim == 3 => Space::UnitSphere,
            SpaceTag::Sphere => return Err(Error::Parse(format!("sphere points need dim 3, got {}", self.dim))),
        };
        if self.dim == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(k, p)| {
                if p.len() != self.dim {
                    Err(Error::Parse(format!("point {k} has {} coordinates, expected {}", p.len(), self.dim)))
                } else {
                    Ok(Point::raw(p))
                }
            })
            .collect::<Result<_>>()?;
        Ok((space, points))
    }

    pub fn to_curve(&self) -> Result<SampledCurve> {
        let (space, points) = self.space_and_points()?;
        SampledCurve::new(space, self.times.clone(), points, self.closed)
    }

    /// Like [`CurveFile::to_curve`] but tolerates repeated points.
    pub fn to_path(&self) -> Result<SampledCurve> {
        let (space, points) = self.space_and_points()?;
        SampledCurve::path(space, self.times.clone(), points, self.closed)
    }

    pub fn to_polyline(&self) -> Result<PiecewiseGeodesic> {
        let (space, points) = self.space_and_points()?;
        PiecewiseGeodesic::new(space, Partition::new(self.times.clone())?, points, self.closed)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            return Ok(CurveFile::from_curve(&curve_from_csv(&text)?));
        }
        CurveFile::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }
}

pub fn read_curve(path: &Path) -> Result<SampledCurve> {
    CurveFile::read(path)?.to_curve()
}

pub fn read_polyline(path: &Path) -> Result<PiecewiseGeodesic> {
    CurveFile::read(path)?.to_polyline()
}

pub fn write_curve(curve: &SampledCurve, path: &Path) -> Result<()> {
    CurveFile::from_curve(curve).write(path)
}

pub fn write_polyline(polyline: &PiecewiseGeodesic, path: &Path) -> Result<()> {
    CurveFile::from_polyline(polyline).write(path)
}

/// Euclidean curve from CSV rows of coordinates, with uniform times.
///
/// A first row that does not parse as numbers is taken as a header. The curve
/// is closed when the last row repeats the first.
pub fn curve_from_csv(text: &str) -> Result<SampledCurve> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (k, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let parsed: std::result::Result<Vec<f64>, _> = rec.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(r) => rows.push(r),
            Err(_) if k == 0 => continue,
            Err(e) => return Err(Error::Parse(format!("row {}: {e}", k + 1))),
        }
    }
    let dim = rows.first().map_or(0, Vec::len);
    if dim == 0 {
        return Err(Error::Parse("no coordinate rows".into()));
    }
    if let Some(k) = rows.iter().position(|r| r.len() != dim) {
        return Err(Error::Parse(format!("row {} has {} columns, expected {dim}", k + 1, rows[k].len())));
    }
    let closed = rows.len() > 2 && rows[0] == rows[rows.len() - 1];
    SampledCurve::uniform(Space::Euclidean(dim), rows.iter().map(|r| Point::raw(r)).collect(), closed)
}
