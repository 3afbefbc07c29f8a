// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic test curves.
//!
//! Closed generators sample `m` distinct vertices counterclockwise and repeat
//! the first one at time 1; times are uniform in the vertex index.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::geometry::{Point, Space};
use crate::simplicity::check_nodes;

/// Attempts allowed before a randomized generator gives up.
pub const MAX_ATTEMPTS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveSpec {
    Circle {
        samples: usize,
        #[serde(default = "one")]
        radius: f64,
    },
    Ellipse { a: f64, b: f64, samples: usize },
    /// Regular `m`-gon inscribed in the unit circle, each edge split into
    /// `subdivisions` pieces.
    RegularPolygon {
        m: usize,
        #[serde(default = "default_subdivisions")]
        subdivisions: usize,
    },
    /// Star with `m` outer vertices on the unit circle alternating with inner
    /// vertices at radius `inner_ratio`.
    StarPolygon {
        m: usize,
        inner_ratio: f64,
        #[serde(default = "default_subdivisions")]
        subdivisions: usize,
    },
    /// Koch snowflake after `level` refinements of a unit-side triangle.
    Koch {
        level: u32,
        #[serde(default = "single")]
        subdivisions: usize,
    },
    /// Star-shaped curve `r(theta) = 1 + sum_k c_k k^(-decay) (a_k cos k theta + b_k sin k theta)`
    /// with random coefficients drawn from `seed`.
    PerturbedCircle {
        modes: usize,
        decay: f64,
        seed: u64,
        samples: usize,
    },
    /// Open circular arc between two angles (radians).
    Arc {
        samples: usize,
        #[serde(default = "one")]
        radius: f64,
        start_angle: f64,
        end_angle: f64,
    },
    /// Open Archimedean spiral from radius `r0` to `r1` over `turns` turns.
    Spiral {
        samples: usize,
        turns: f64,
        r0: f64,
        r1: f64,
    },
    /// Circle of constant latitude (radians) on the unit sphere.
    SphericalCircle { samples: usize, latitude: f64 },
}

fn one() -> f64 {
    1.0
}

fn single() -> usize {
    1
}

fn default_subdivisions() -> usize {
    8
}

/// Amplitude of the first perturbation mode.
const PERTURBATION_SCALE: f64 = 0.25;

fn closed_planar(mut pts: Vec<[f64; 2]>) -> Result<SampledCurve> {
    pts.push(pts[0]);
    SampledCurve::planar(&pts, true)
}

fn polygon_with_subdivisions(vertices: &[[f64; 2]], subdivisions: usize) -> Vec<[f64; 2]> {
    let m = vertices.len();
    let mut out = Vec::with_capacity(m * subdivisions);
    for i in 0..m {
        let (a, b) = (vertices[i], vertices[(i + 1) % m]);
        for j in 0..subdivisions {
            let t = j as f64 / subdivisions as f64;
            out.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
        }
    }
    out
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(msg.into()))
    }
}

pub fn generate(spec: &CurveSpec) -> Result<SampledCurve> {
    match *spec {
        CurveSpec::Circle { samples, radius } => {
            need(samples >= 3, "circle needs at least 3 samples")?;
            need(radius > 0.0, "radius must be positive")?;
            closed_planar(
                (0..samples)
                    .map(|j| {
                        let a = TAU * j as f64 / samples as f64;
                        [radius * a.cos(), radius * a.sin()]
                    })
                    .collect(),
            )
        }
        CurveSpec::Ellipse { a, b, samples } => {
            need(samples >= 3, "ellipse needs at least 3 samples")?;
            need(a > 0.0 && b > 0.0, "semi-axes must be positive")?;
            closed_planar(
                (0..samples)
                    .map(|j| {
                        let t = TAU * j as f64 / samples as f64;
                        [a * t.cos(), b * t.sin()]
                    })
                    .collect(),
            )
        }
        CurveSpec::RegularPolygon { m, subdivisions } => {
            need(m >= 3, "polygon needs at least 3 vertices")?;
            need(subdivisions >= 1, "subdivisions must be positive")?;
            let vertices: Vec<[f64; 2]> = (0..m)
                .map(|j| {
                    let a = TAU * j as f64 / m as f64;
                    [a.cos(), a.sin()]
                })
                .collect();
            closed_planar(polygon_with_subdivisions(&vertices, subdivisions))
        }
        CurveSpec::StarPolygon {
            m,
            inner_ratio,
            subdivisions,
        } => {
            need(m >= 2, "star needs at least 2 points")?;
            need(inner_ratio > 0.0 && inner_ratio < 1.0, "inner_ratio must be in (0,1)")?;
            need(subdivisions >= 1, "subdivisions must be positive")?;
            let vertices: Vec<[f64; 2]> = (0..2 * m)
                .map(|j| {
                    let a = TAU * j as f64 / (2 * m) as f64;
                    let r = if j % 2 == 0 { 1.0 } else { inner_ratio };
                    [r * a.cos(), r * a.sin()]
                })
                .collect();
            closed_planar(polygon_with_subdivisions(&vertices, subdivisions))
        }
        CurveSpec::Koch { level, subdivisions } => {
            need(level <= 8, "koch level above 8 is too large")?;
            need(subdivisions >= 1, "subdivisions must be positive")?;
            closed_planar(polygon_with_subdivisions(&koch_vertices(level), subdivisions))
        }
        CurveSpec::PerturbedCircle {
            modes,
            decay,
            seed,
            samples,
        } => perturbed_circle(modes, decay, seed, samples),
        CurveSpec::Arc {
            samples,
            radius,
            start_angle,
            end_angle,
        } => {
            need(samples >= 2, "arc needs at least 2 samples")?;
            need(radius > 0.0, "radius must be positive")?;
            let sweep = end_angle - start_angle;
            need(sweep != 0.0 && sweep.abs() < TAU, "arc must sweep less than a full turn")?;
            let pts: Vec<[f64; 2]> = (0..samples)
                .map(|j| {
                    let a = start_angle + sweep * j as f64 / (samples - 1) as f64;
                    [radius * a.cos(), radius * a.sin()]
                })
                .collect();
            SampledCurve::planar(&pts, false)
        }
        CurveSpec::Spiral { samples, turns, r0, r1 } => {
            need(samples >= 2, "spiral needs at least 2 samples")?;
            need(turns > 0.0, "turns must be positive")?;
            need(r0 >= 0.0 && r1 > r0, "need 0 <= r0 < r1")?;
            let pts: Vec<[f64; 2]> = (0..samples)
                .map(|j| {
                    let t = j as f64 / (samples - 1) as f64;
                    let r = r0 + (r1 - r0) * t;
                    let a = TAU * turns * t;
                    [r * a.cos(), r * a.sin()]
                })
                .collect();
            SampledCurve::planar(&pts, false)
        }
        CurveSpec::SphericalCircle { samples, latitude } => {
            need(samples >= 3, "circle needs at least 3 samples")?;
            need(latitude.abs() < std::f64::consts::FRAC_PI_2, "latitude must avoid the poles")?;
            let (z, rho) = (latitude.sin(), latitude.cos());
            let mut pts: Vec<Point> = (0..samples)
                .map(|j| {
                    let a = TAU * j as f64 / samples as f64;
                    Space::UnitSphere.point(&[rho * a.cos(), rho * a.sin(), z])
                })
                .collect::<Result<_>>()?;
            pts.push(pts[0].clone());
            SampledCurve::uniform(Space::UnitSphere, pts, true)
        }
    }
}

/// Vertices of the Koch snowflake, counterclockwise, starting at a corner of
/// the base triangle.
pub fn koch_vertices(level: u32) -> Vec<[f64; 2]> {
    let h = 3f64.sqrt() / 2.0;
    let mut v = vec![[0.0, 0.0], [1.0, 0.0], [0.5, h]];
    for _ in 0..level {
        let m = v.len();
        let mut next = Vec::with_capacity(4 * m);
        for i in 0..m {
            let (a, b) = (v[i], v[(i + 1) % m]);
            let d = [(b[0] - a[0]) / 3.0, (b[1] - a[1]) / 3.0];
            let p = [a[0] + d[0], a[1] + d[1]];
            let q = [a[0] + 2.0 * d[0], a[1] + 2.0 * d[1]];
            // the bump points to the right of a ccw edge, i.e. outward
            let apex = [
                p[0] + 0.5 * d[0] + h * d[1],
                p[1] + 0.5 * d[1] - h * d[0],
            ];
            next.extend([a, p, apex, q]);
        }
        v = next;
    }
    v
}

fn perturbed_circle(modes: usize, decay: f64, seed: u64, samples: usize) -> Result<SampledCurve> {
    need(samples >= 3, "perturbed circle needs at least 3 samples")?;
    need(decay >= 0.0, "decay must be nonnegative")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let coeffs: Vec<(f64, f64)> = (1..=modes)
            .map(|k| {
                let s = PERTURBATION_SCALE * (k as f64).powf(-decay);
                (s * rng.random_range(-1.0..1.0), s * rng.random_range(-1.0..1.0))
            })
            .collect();
        let radius = |a: f64| {
            1.0 + coeffs
                .iter()
                .enumerate()
                .map(|(k, (c, s))| {
                    let kk = (k + 1) as f64;
                    c * (kk * a).cos() + s * (kk * a).sin()
                })
                .sum::<f64>()
        };
        let pts: Vec<[f64; 2]> = (0..samples)
            .map(|j| {
                let a = TAU * j as f64 / samples as f64;
                let r = radius(a);
                [r * a.cos(), r * a.sin()]
            })
            .collect();
        if (0..samples).any(|j| radius(TAU * j as f64 / samples as f64) <= 0.0) {
            continue;
        }
        let nodes: Vec<Point> = pts.iter().chain(std::iter::once(&pts[0])).map(|&c| c.into()).collect();
        if check_nodes(Space::PLANE, &nodes, true, false).ok {
            return closed_planar(pts);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no simple perturbed circle after {MAX_ATTEMPTS} attempts"
    )))
}

/// The open curve that starts at sample `vertex` of a closed curve and runs
/// once around, stopping one sample short of coming back.
pub fn open_at_vertex(curve: &SampledCurve, vertex: usize) -> Result<SampledCurve> {
    if !curve.is_closed() {
        return Err(Error::InvalidCurve("open_at_vertex needs a closed curve".into()));
    }
    let m = curve.len() - 1;
    if vertex >= m {
        return Err(Error::OutOfRange(format!("vertex {vertex} out of range")));
    }
    let pts: Vec<Point> = (0..m).map(|j| curve.points()[(vertex + j) % m].clone()).collect();
    SampledCurve::uniform(curve.space(), pts, false)
}
