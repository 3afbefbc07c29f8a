// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Distances and unique minimizing geodesics on the two supported spaces:
//! Euclidean space `R^d` and the unit sphere `S^2` in `R^3`.
//!
//! Every space carries a *uniqueness radius*: any two points closer than it
//! are joined by exactly one minimizing geodesic, and balls of that radius are
//! geodesically convex. Euclidean space has an infinite radius. On the sphere
//! the radius is fixed at `pi/2`, well inside the cut locus at `pi`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Absolute tolerance used for geometric comparisons.
pub const TOL: f64 = 1e-10;

/// Tolerance on `| |x| - 1 |` accepted (and corrected) for sphere points.
pub const SPHERE_NORM_TOL: f64 = 1e-12;

#[derive(Clone, PartialEq)]
pub struct Point(SmallVec<[f64; 3]>);

impl Point {
    /// Builds a point without any validation. Use [`Space::point`] to check it.
    pub fn raw(coords: &[f64]) -> Self {
        Point(SmallVec::from_slice(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn y(&self) -> f64 {
        self.0[1]
    }

    pub(crate) fn xy(&self) -> [f64; 2] {
        [self.0[0], self.0[1]]
    }

    pub(crate) fn dot(&self, other: &Point) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Point").field(&self.0.as_slice()).finish()
    }
}

impl From<[f64; 2]> for Point {
    fn from(c: [f64; 2]) -> Self {
        Point::raw(&c)
    }
}

impl From<[f64; 3]> for Point {
    fn from(c: [f64; 3]) -> Self {
        Point::raw(&c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Space {
    Euclidean(usize),
    UnitSphere,
}

impl Space {
    pub const PLANE: Space = Space::Euclidean(2);

    /// Ambient coordinate count of points in this space.
    pub fn dim(&self) -> usize {
        match self {
            Space::Euclidean(d) => *d,
            Space::UnitSphere => 3,
        }
    }

    pub fn uniqueness_radius(&self) -> f64 {
        match self {
            Space::Euclidean(_) => f64::INFINITY,
            Space::UnitSphere => FRAC_PI_2,
        }
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self, Space::Euclidean(_))
    }

    /// Validates coordinates as a point of this space. Sphere points within
    /// [`SPHERE_NORM_TOL`] of unit norm are renormalized; others are rejected.
    pub fn point(&self, coords: &[f64]) -> Result<Point> {
        if coords.len() != self.dim() {
            return Err(Error::InvalidPoint(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint("non-finite coordinate".into()));
        }
        match self {
            Space::Euclidean(d) if *d == 0 => {
                Err(Error::InvalidPoint("zero-dimensional space".into()))
            }
            Space::Euclidean(_) => Ok(Point::raw(coords)),
            Space::UnitSphere => {
                let n = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
                if (n - 1.0).abs() > SPHERE_NORM_TOL {
                    return Err(Error::InvalidPoint(format!(
                        "sphere point has norm {n}, off by more than {SPHERE_NORM_TOL}"
                    )));
                }
                Ok(Point(coords.iter().map(|c| c / n).collect()))
            }
        }
    }

    pub(crate) fn check(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(Error::InvalidPoint(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                p.dim()
            )));
        }
        Ok(())
    }

    /// Distance between two points of this space.
    pub fn distance(&self, a: &Point, b: &Point) -> Result<f64> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.dist(a, b))
    }

    /// Unchecked distance for hot loops; both points must already be valid.
    #[inline]
    pub(crate) fn dist(&self, a: &Point, b: &Point) -> f64 {
        match self {
            Space::Euclidean(_) => a
                .0
                .iter()
                .zip(b.0.iter())
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            // atan2 form keeps full precision for nearby and near-antipodal pairs.
            Space::UnitSphere => {
                let c = cross3(a, b);
                let s = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
                s.atan2(a.dot(b))
            }
        }
    }
}

pub(crate) fn cross3(a: &Point, b: &Point) -> [f64; 3] {
    let (a, b) = (a.coords(), b.coords());
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// A minimizing geodesic between two points, parametrized at constant speed
/// on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicSegment {
    space: Space,
    a: Point,
    b: Point,
    length: f64,
}

impl GeodesicSegment {
    pub fn space(&self) -> Space {
        self.space
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Point at parameter `t`, checked to lie in `[0, 1]`.
    pub fn eval(&self, t: f64) -> Result<Point> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfRange(format!("geodesic parameter {t} not in [0,1]")));
        }
        Ok(self.at(t))
    }

    pub(crate) fn at(&self, t: f64) -> Point {
        if t == 0.0 {
            return self.a.clone();
        }
        if t == 1.0 {
            return self.b.clone();
        }
        interpolate(self.space, &self.a, &self.b, self.length, t)
    }

    /// The same geodesic traversed from `b` to `a`.
    pub fn reversed(&self) -> GeodesicSegment {
        GeodesicSegment {
            space: self.space,
            a: self.b.clone(),
            b: self.a.clone(),
            length: self.length,
        }
    }

    pub(crate) fn new_unchecked(space: Space, a: Point, b: Point) -> Self {
        let length = space.dist(&a, &b);
        GeodesicSegment { space, a, b, length }
    }
}

/// Constant-speed point on the geodesic from `a` to `b`, with `len = d(a, b)`.
#[inline]
pub(crate) fn interpolate(space: Space, a: &Point, b: &Point, len: f64, t: f64) -> Point {
    match space {
        Space::Euclidean(_) => Point(
            a.0.iter()
                .zip(b.0.iter())
                .map(|(x, y)| x + t * (y - x))
                .collect(),
        ),
        Space::UnitSphere => {
            let coords: SmallVec<[f64; 3]> = if len < 1e-15 {
                a.0.iter().zip(b.0.iter()).map(|(x, y)| x + t * (y - x)).collect()
            } else {
                let s = len.sin();
                let wa = ((1.0 - t) * len).sin() / s;
                let wb = (t * len).sin() / s;
                a.0.iter().zip(b.0.iter()).map(|(x, y)| wa * x + wb * y).collect()
            };
            let n = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
            Point(coords.into_iter().map(|c| c / n).collect())
        }
    }
}

/// Distance between two points; see [`Space::distance`].
pub fn distance(space: Space, a: &Point, b: &Point) -> Result<f64> {
    space.distance(a, b)
}

/// The unique minimizing geodesic from `a` to `b`.
///
/// Fails with [`Error::NotUnique`] when `d(a, b)` exceeds the space's
/// uniqueness radius. A pair at exactly the radius (within [`TOL`]) is
/// accepted: the closed ball of radius `pi/2` on the sphere is still convex.
pub fn geodesic(space: Space, a: &Point, b: &Point) -> Result<GeodesicSegment> {
    let length = space.distance(a, b)?;
    let radius = space.uniqueness_radius();
    if length > radius + TOL {
        return Err(Error::NotUnique {
            distance: length,
            radius,
        });
    }
    Ok(GeodesicSegment {
        space,
        a: a.clone(),
        b: b.clone(),
        length,
    })
}

/// Constant-speed evaluation of a geodesic segment.
pub fn geodesic_eval(seg: &GeodesicSegment, t: f64) -> Result<Point> {
    seg.eval(t)
}
