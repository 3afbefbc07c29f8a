// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! SVG 1.1 drawings of a curve (dotted) and its interpolation (solid).
//!
//! Sphere curves are drawn by orthographic projection onto the `xy` plane.

use std::fmt::Write;

use crate::curve::SampledCurve;
use crate::geometry::Point;
use crate::polyline::PiecewiseGeodesic;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;

/// Points sampled along each geodesic piece, so sphere arcs render curved.
const ARC_STEPS: usize = 8;

struct Frame {
    lo: [f64; 2],
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(sets: &[&[[f64; 2]]]) -> Self {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in sets.iter().flat_map(|s| s.iter()) {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        if !lo[0].is_finite() {
            lo = [0.0, 0.0];
            hi = [1.0, 1.0];
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        Frame {
            lo,
            scale,
            height: (hi[1] - lo[1]) * scale + 2.0 * MARGIN,
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            MARGIN + (p[0] - self.lo[0]) * self.scale,
            self.height - MARGIN - (p[1] - self.lo[1]) * self.scale,
        )
    }

    fn path(&self, pts: &[[f64; 2]]) -> String {
        let mut d = String::new();
        for (k, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{x:.3},{y:.3} ", if k == 0 { "M" } else { "L" });
        }
        d.trim_end().to_string()
    }
}

fn xy(p: &Point) -> [f64; 2] {
    [p.coords()[0], p.coords().get(1).copied().unwrap_or(0.0)]
}

fn polyline_trace(pg: &PiecewiseGeodesic) -> Vec<[f64; 2]> {
    if pg.space().is_euclidean() {
        return pg.nodes().iter().map(xy).collect();
    }
    let mut out = vec![xy(&pg.nodes()[0])];
    for seg in pg.segments() {
        for j in 1..=ARC_STEPS {
            out.push(xy(&seg.at(j as f64 / ARC_STEPS as f64)));
        }
    }
    out
}

/// Renders `curve` dotted and `interpolation` solid with its nodes marked.
pub fn render(curve: Option<&SampledCurve>, interpolation: Option<&PiecewiseGeodesic>) -> String {
    let curve_pts: Vec<[f64; 2]> = curve.map(|c| c.points().iter().map(xy).collect()).unwrap_or_default();
    let poly_pts: Vec<[f64; 2]> = interpolation.map(polyline_trace).unwrap_or_default();
    let frame = Frame::fit(&[&curve_pts, &poly_pts]);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{h:.0}" viewBox="0 0 {SIZE} {h:.3}">"#,
        h = frame.height
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if !curve_pts.is_empty() {
        let _ = writeln!(
            s,
            r#"<path d="{}" fill="none" stroke="black" stroke-width="1" stroke-dasharray="2,3"/>"#,
            frame.path(&curve_pts)
        );
    }
    if let Some(pg) = interpolation {
        let _ = writeln!(
            s,
            r#"<path d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            frame.path(&poly_pts)
        );
        for p in pg.nodes() {
            let (x, y) = frame.map(xy(p));
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="black"/>"#);
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, CurveSpec};
    use crate::interpolation::jordan_interpolate;

    #[test]
    fn draws_both_layers() {
        let c = generate(&CurveSpec::Circle { samples: 64, radius: 1.0 }).unwrap();
        let j = jordan_interpolate(&c, 0.2, &[]).unwrap();
        let svg = render(Some(&c), Some(&j.polyline));
        assert!(svg.contains(r#"version="1.1""#));
        assert!(svg.contains("stroke-dasharray"));
        assert_eq!(svg.matches("<circle").count(), j.polyline.nodes().len());
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn sphere_projection() {
        let c = generate(&CurveSpec::SphericalCircle { samples: 64, latitude: 0.5 }).unwrap();
        let svg = render(Some(&c), None);
        assert!(svg.contains("<path") && !svg.contains("NaN"));
    }
}
