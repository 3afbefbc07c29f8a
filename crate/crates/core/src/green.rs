// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Interior moments of planar polygons, Green's theorem checks, and tools for
//! comparing closed curves through their signatures.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::geometry::{Point, Space};
use crate::interpolation::jordan_interpolate;
use crate::poly::{integrate_unit, linear_power, poly_mul, BivariatePoly};
use crate::signature::{area_moment_coefficient, points_signature, TruncatedTensor, Word};
use crate::simplicity::check_nodes;

/// Shoelace area of the closed polygon through `vertices` (last vertex not repeated).
pub fn signed_area(vertices: &[[f64; 2]]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            a[0] * b[1] - b[0] * a[1]
        })
        .sum::<f64>()
        / 2.0
}

fn edges(vertices: &[[f64; 2]]) -> impl Iterator<Item = ([f64; 2], [f64; 2])> + '_ {
    let n = vertices.len();
    (0..n).map(move |i| (vertices[i], vertices[(i + 1) % n]))
}

/// `int int_interior (x - x0)^k (y1 - y)^n dx dy`, evaluated exactly as the
/// boundary integral `(1 / (k+1)) * oint (x - x0)^(k+1) (y1 - y)^n dy`.
pub fn polygon_moment(vertices: &[[f64; 2]], k: u32, n: u32, x0: f64, y1: f64) -> Result<f64> {
    let area = signed_area(vertices);
    if !(area > 0.0) {
        return Err(Error::OrientationError { signed_area: area });
    }
    Ok(oriented_moment(vertices, k, n, x0, y1))
}

fn oriented_moment(vertices: &[[f64; 2]], k: u32, n: u32, x0: f64, y1: f64) -> f64 {
    let total: f64 = edges(vertices)
        .map(|(a, b)| {
            let dy = b[1] - a[1];
            if dy == 0.0 {
                return 0.0;
            }
            let px = linear_power(a[0] - x0, b[0] - a[0], k + 1);
            let py = linear_power(y1 - a[1], -dy, n);
            dy * integrate_unit(&poly_mul(&px, &py))
        })
        .sum();
    total / (k + 1) as f64
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreenReport {
    /// Tolerance the interpolation was built for; `None` for a polygon taken as is.
    pub epsilon: Option<f64>,
    pub nodes: usize,
    /// `oint f dy - g dx` over the polygon.
    pub line_integral: f64,
    /// `int int (df/dx + dg/dy)` over the polygon interior.
    pub area_integral: f64,
    pub residual: f64,
    pub line_method: &'static str,
    pub area_method: &'static str,
    /// `oint f dy - g dx` over the full sample polygon of the input curve, for
    /// judging how far the interpolation's area side is from the curve's.
    pub curve_line_integral: Option<f64>,
}

/// `oint f dy - g dx`, integrated exactly edge by edge.
pub fn line_integral(f: &BivariatePoly, g: &BivariatePoly, vertices: &[[f64; 2]]) -> f64 {
    edges(vertices)
        .map(|(a, b)| {
            (b[1] - a[1]) * integrate_unit(&f.along(a, b)) - (b[0] - a[0]) * integrate_unit(&g.along(a, b))
        })
        .sum()
}

/// `int int_interior h` for polynomial `h` by monomial moments.
pub fn area_integral(h: &BivariatePoly, vertices: &[[f64; 2]]) -> Result<f64> {
    let area = signed_area(vertices);
    if !(area > 0.0) {
        return Err(Error::OrientationError { signed_area: area });
    }
    Ok(h.terms()
        .iter()
        .map(|(&(i, j), c)| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            c * sign * oriented_moment(vertices, i, j, 0.0, 0.0)
        })
        .sum())
}

/// Both sides of Green's theorem on a positively oriented polygon.
pub fn greens_check_polygon(f: &BivariatePoly, g: &BivariatePoly, vertices: &[[f64; 2]]) -> Result<GreenReport> {
    let line = line_integral(f, g, vertices);
    let area = area_integral(&f.d_dx().add(&g.d_dy()), vertices)?;
    Ok(GreenReport {
        epsilon: None,
        nodes: vertices.len(),
        line_integral: line,
        area_integral: area,
        residual: (line - area).abs(),
        line_method: "exact-edge-polynomial",
        area_method: "moment-expansion",
        curve_line_integral: None,
    })
}

/// Green's theorem on the Jordan interpolations of `curve` for each tolerance.
pub fn greens_check(
    f: &BivariatePoly,
    g: &BivariatePoly,
    curve: &SampledCurve,
    epsilons: &[f64],
) -> Result<Vec<GreenReport>> {
    if curve.space() != Space::PLANE {
        return Err(Error::Unsupported("Green's theorem needs a planar curve".into()));
    }
    if !curve.is_closed() {
        return Err(Error::NotJordan("curve is not closed".into()));
    }
    if let Some(v) = check_nodes(curve.space(), curve.points(), true, false).violation {
        return Err(Error::NotJordan(v.to_string()));
    }
    let samples = closed_vertices(curve.points());
    let curve_line = line_integral(f, g, &samples);
    epsilons
        .iter()
        .map(|&eps| {
            let interp = jordan_interpolate(curve, eps, &[])?;
            let verts = interp.polyline.vertices_xy()?;
            let mut rep = greens_check_polygon(f, g, &verts)?;
            rep.epsilon = Some(eps);
            rep.curve_line_integral = Some(curve_line);
            Ok(rep)
        })
        .collect()
}

fn closed_vertices(points: &[Point]) -> Vec<[f64; 2]> {
    let n = if points.len() > 1 && points[0] == points[points.len() - 1] {
        points.len() - 1
    } else {
        points.len()
    };
    points[..n].iter().map(Point::xy).collect()
}

/// `int int_interior h` by even-odd rasterization on a `resolution^2` grid
/// over the bounding box. Intended for non-polynomial integrands; the error is
/// of order the boundary length times the cell size.
pub fn raster_area_integral<H: Fn(f64, f64) -> f64>(vertices: &[[f64; 2]], h: H, resolution: usize) -> f64 {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for v in vertices {
        for k in 0..2 {
            lo[k] = lo[k].min(v[k]);
            hi[k] = hi[k].max(v[k]);
        }
    }
    let (dx, dy) = ((hi[0] - lo[0]) / resolution as f64, (hi[1] - lo[1]) / resolution as f64);
    let mut total = 0.0;
    let mut xs = Vec::new();
    for row in 0..resolution {
        let y = lo[1] + (row as f64 + 0.5) * dy;
        xs.clear();
        for (a, b) in edges(vertices) {
            if (a[1] > y) != (b[1] > y) {
                xs.push(a[0] + (y - a[1]) / (b[1] - a[1]) * (b[0] - a[0]));
            }
        }
        xs.sort_by(f64::total_cmp);
        for span in xs.chunks_exact(2) {
            let first = ((span[0] - lo[0]) / dx - 0.5).ceil().max(0.0) as usize;
            let mut col = first;
            loop {
                let x = lo[0] + (col as f64 + 0.5) * dx;
                if x > span[1] || col >= resolution {
                    break;
                }
                total += h(x, y);
                col += 1;
            }
        }
    }
    total * dx * dy
}

/// Whether `q` lies inside the polygon, by even-odd ray casting with exact
/// orientation tests.
pub fn interior_indicator(vertices: &[[f64; 2]], q: [f64; 2]) -> Result<bool> {
    let qc = robust::Coord { x: q[0], y: q[1] };
    let mut inside = false;
    for (a, b) in edges(vertices) {
        let o = robust::orient2d(
            robust::Coord { x: a[0], y: a[1] },
            robust::Coord { x: b[0], y: b[1] },
            qc,
        );
        if o == 0.0
            && q[0] >= a[0].min(b[0])
            && q[0] <= a[0].max(b[0])
            && q[1] >= a[1].min(b[1])
            && q[1] <= a[1].max(b[1])
        {
            return Err(Error::OnBoundary);
        }
        // half-open rule on y; the ray runs towards +x
        let upward = a[1] <= q[1] && q[1] < b[1] && o > 0.0;
        let downward = b[1] <= q[1] && q[1] < a[1] && o < 0.0;
        if upward || downward {
            inside = !inside;
        }
    }
    Ok(inside)
}

/// Centered interior moments `int int (x - x0)^k (y1 - y)^n` for `k + n <= order`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentVector {
    pub x0: f64,
    pub y1: f64,
    pub order: usize,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: BTreeMap<(usize, usize), f64>,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(usize, usize), f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(entries.len()))?;
    for (&(k, n), &v) in entries {
        seq.serialize_element(&(k, n, v))?;
    }
    seq.end()
}

impl MomentVector {
    pub fn get(&self, k: usize, n: usize) -> Option<f64> {
        self.entries.get(&(k, n)).copied()
    }

    /// Largest entrywise difference, or `None` when the index sets differ.
    pub fn max_abs_diff(&self, other: &MomentVector) -> Option<f64> {
        if self.entries.len() != other.entries.len() {
            return None;
        }
        self.entries
            .iter()
            .map(|(key, a)| other.entries.get(key).map(|b| (a - b).abs()))
            .try_fold(0.0f64, |m, d| d.map(|d| m.max(d)))
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Moments read off the signature: entry `(k, n)` is `k! n!` times the
/// coefficient of `k + 1` ones followed by `n + 1` twos.
pub fn moments_from_signature(sig: &TruncatedTensor, order: usize, x0: f64, y1: f64) -> Result<MomentVector> {
    if order + 2 > sig.level() {
        return Err(Error::TruncationTooSmall {
            have: sig.level(),
            need: order + 2,
        });
    }
    let mut entries = BTreeMap::new();
    for k in 0..=order {
        for n in 0..=order - k {
            entries.insert((k, n), factorial(k) * factorial(n) * area_moment_coefficient(sig, k, n)?);
        }
    }
    Ok(MomentVector { x0, y1, order, entries })
}

/// Moments computed from the polygon itself.
pub fn moments_from_geometry(vertices: &[[f64; 2]], order: usize, x0: f64, y1: f64) -> Result<MomentVector> {
    let mut entries = BTreeMap::new();
    for k in 0..=order {
        for n in 0..=order - k {
            entries.insert((k, n), polygon_moment(vertices, k as u32, n as u32, x0, y1)?);
        }
    }
    Ok(MomentVector { x0, y1, order, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Positive,
    Negative,
}

/// Sign of the `(1,2)` coefficient, which is the signed area for closed curves.
pub fn orientation_from_signature(sig: &TruncatedTensor) -> Result<Orientation> {
    let a = sig.coeff(&Word(vec![1, 2]))?;
    if a.abs() <= 1e-12 {
        return Err(Error::Indeterminate(a));
    }
    Ok(if a > 0.0 { Orientation::Positive } else { Orientation::Negative })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReparamResult {
    pub matched: bool,
    /// `r(s_j)` at the sample times `s_j` of the second curve, when it is monotone.
    pub r_samples: Option<Vec<f64>>,
    /// Largest distance from a sample of the second curve to its projection on the first.
    pub max_deviation: f64,
    pub orientation_flip: bool,
    /// Symmetric Hausdorff distance between the two normalized sample sets.
    pub hausdorff: f64,
}

/// Sample points shifted so the curve starts at the origin.
fn normalized(c: &SampledCurve) -> Vec<[f64; 2]> {
    let o = c.points()[0].xy();
    c.points().iter().map(|p| [p.x() - o[0], p.y() - o[1]]).collect()
}

fn sq(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)
}

fn hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    let one_way = |a: &[[f64; 2]], b: &[[f64; 2]]| {
        a.iter()
            .map(|&p| b.iter().map(|&q| sq(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a)).sqrt()
}

/// Recovers the time change `r` with `gamma_tilde = gamma o r`, after moving
/// both curves to start at the origin. Each sample of `gamma_tilde` is projected
/// onto the polyline of `gamma`; ties go to the smaller parameter. `tol`
/// defaults to three times the largest sample spacing of `gamma`.
pub fn reparam_recover(gamma: &SampledCurve, gamma_tilde: &SampledCurve, tol: Option<f64>) -> Result<ReparamResult> {
    if gamma.space() != Space::PLANE || gamma_tilde.space() != Space::PLANE {
        return Err(Error::Unsupported("reparametrization recovery needs planar curves".into()));
    }
    let a = normalized(gamma);
    let b = normalized(gamma_tilde);
    let tol = tol.unwrap_or_else(|| 3.0 * gamma.max_spacing());
    let distance = hausdorff(&a, &b);
    if !(distance <= tol) {
        return Err(Error::ImageMismatch { distance, tol });
    }
    let times = gamma.times();
    let m = b.len();
    let mut r = Vec::with_capacity(m);
    let mut max_deviation = 0.0f64;
    for (j, &q) in b.iter().enumerate() {
        let (mut best, mut best_t) = (f64::INFINITY, 0.0);
        for i in 0..a.len() - 1 {
            let (p0, p1) = (a[i], a[i + 1]);
            let d = [p1[0] - p0[0], p1[1] - p0[1]];
            let len2 = d[0] * d[0] + d[1] * d[1];
            let lambda = if len2 > 0.0 {
                (((q[0] - p0[0]) * d[0] + (q[1] - p0[1]) * d[1]) / len2).clamp(0.0, 1.0)
            } else {
                0.0
            };
            let dist = sq(q, [p0[0] + lambda * d[0], p0[1] + lambda * d[1]]);
            if dist < best {
                best = dist;
                best_t = times[i] + lambda * (times[i + 1] - times[i]);
            }
        }
        max_deviation = max_deviation.max(best.sqrt());
        r.push(match j {
            0 => 0.0,
            _ if j == m - 1 => 1.0,
            _ => best_t,
        });
    }
    let interior = &r[1..m - 1];
    let increasing = r.windows(2).all(|w| w[1] > w[0]);
    let decreasing = interior.len() >= 2 && interior.windows(2).all(|w| w[1] < w[0]);
    Ok(ReparamResult {
        matched: increasing,
        r_samples: (increasing || decreasing).then_some(r),
        max_deviation,
        orientation_flip: decreasing,
        hausdorff: distance,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub orientation_a: Orientation,
    pub orientation_b: Orientation,
    pub moments_a: MomentVector,
    pub moments_b: MomentVector,
    pub max_moment_difference: f64,
    /// `None` when the images differ.
    pub reparam: Option<ReparamResult>,
}

/// Compares two closed planar curves by orientation, signature moments of
/// order `order` (both curves moved to start at the origin) and recovered time change.
pub fn compare_curves(a: &SampledCurve, b: &SampledCurve, order: usize) -> Result<CompareReport> {
    let level = order + 2;
    let sig = |c: &SampledCurve| points_signature(c.points(), level);
    let (sa, sb) = (sig(a)?, sig(b)?);
    let moments_a = moments_from_signature(&sa, order, 0.0, 0.0)?;
    let moments_b = moments_from_signature(&sb, order, 0.0, 0.0)?;
    let max_moment_difference = moments_a.max_abs_diff(&moments_b).unwrap_or(f64::INFINITY);
    let reparam = match reparam_recover(a, b, None) {
        Ok(r) => Some(r),
        Err(Error::ImageMismatch { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CompareReport {
        orientation_a: orientation_from_signature(&sa)?,
        orientation_b: orientation_from_signature(&sb)?,
        moments_a,
        moments_b,
        max_moment_difference,
        reparam,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, CurveSpec};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    const SQUARE: [[f64; 2]; 4] = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];

    fn p(s: &str) -> BivariatePoly {
        s.parse().unwrap()
    }

    /// Winding number by summing signed angles.
    fn winding(vertices: &[[f64; 2]], q: [f64; 2]) -> i64 {
        let total: f64 = edges(vertices)
            .map(|(a, b)| {
                let (u, v) = ([a[0] - q[0], a[1] - q[1]], [b[0] - q[0], b[1] - q[1]]);
                (u[0] * v[1] - u[1] * v[0]).atan2(u[0] * v[0] + u[1] * v[1])
            })
            .sum();
        (total / (2.0 * PI)).round() as i64
    }

    #[test]
    fn area_examples() {
        assert_eq!(signed_area(&SQUARE), 1.0);
        let mut cw = SQUARE;
        cw.reverse();
        assert_eq!(signed_area(&cw), -1.0);
        assert_eq!(signed_area(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), 0.5);
    }

    #[test]
    fn moment_examples() {
        for (x0, y1) in [(0.0, 0.0), (3.0, -2.0)] {
            assert!((polygon_moment(&SQUARE, 0, 0, x0, y1).unwrap() - 1.0).abs() < 1e-14);
        }
        assert!((polygon_moment(&SQUARE, 1, 0, 0.0, 0.0).unwrap() - 0.5).abs() < 1e-15);
        // int int (1 - y)^2 over the unit square = 1/3
        assert!((polygon_moment(&SQUARE, 0, 2, 0.0, 1.0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        let mut cw = SQUARE;
        cw.reverse();
        assert!(matches!(polygon_moment(&cw, 0, 0, 0.0, 0.0), Err(Error::OrientationError { .. })));
        let circle = generate(&CurveSpec::Circle { samples: 4096, radius: 1.0 }).unwrap();
        let v = closed_vertices(circle.points());
        let inscribed = 2048.0 * (2.0 * PI / 4096.0).sin();
        assert!((polygon_moment(&v, 0, 0, 0.0, 0.0).unwrap() - inscribed).abs() < 1e-12);
        assert!((polygon_moment(&v, 0, 0, 0.0, 0.0).unwrap() - PI).abs() < 1e-5);
    }

    #[test]
    fn green_examples() {
        for (f, g, both) in [("x", "0", 1.0), ("0", "y", 1.0), ("x^2", "y^2", 2.0)] {
            let r = greens_check_polygon(&p(f), &p(g), &SQUARE).unwrap();
            assert!((r.line_integral - both).abs() < 1e-12 && (r.area_integral - both).abs() < 1e-12);
            assert!(r.residual <= 1e-12);
        }
    }

    #[test]
    fn green_rejects_open_and_crossing() {
        let open = generate(&CurveSpec::Arc {
            samples: 64,
            radius: 1.0,
            start_angle: 0.0,
            end_angle: 3.0,
        })
        .unwrap();
        assert!(matches!(greens_check(&p("x"), &p("0"), &open, &[0.1]), Err(Error::NotJordan(_))));
        let bowtie =
            SampledCurve::planar(&[[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0], [0.0, 0.0]], true).unwrap();
        assert!(matches!(greens_check(&p("x"), &p("0"), &bowtie, &[0.1]), Err(Error::NotJordan(_))));
    }

    #[test]
    fn raster_fallback_is_close() {
        let star = generate(&CurveSpec::StarPolygon { m: 5, inner_ratio: 0.45, subdivisions: 1 }).unwrap();
        let v = closed_vertices(star.points());
        let exact = area_integral(&p("2*x + 2*y + 1"), &v).unwrap();
        let approx = raster_area_integral(&v, |x, y| 2.0 * x + 2.0 * y + 1.0, 1000);
        assert!((exact - approx).abs() < 1e-2, "{exact} {approx}");
    }

    #[test]
    fn indicator_examples() {
        assert!(interior_indicator(&SQUARE, [0.5, 0.5]).unwrap());
        assert!(!interior_indicator(&SQUARE, [2.0, 2.0]).unwrap());
        assert!(matches!(interior_indicator(&SQUARE, [1.0, 0.3]), Err(Error::OnBoundary)));
        assert!(matches!(interior_indicator(&SQUARE, [0.0, 0.0]), Err(Error::OnBoundary)));
        let star = generate(&CurveSpec::StarPolygon { m: 5, inner_ratio: 0.4, subdivisions: 1 }).unwrap();
        let v = closed_vertices(star.points());
        assert_eq!(interior_indicator(&v, [0.0, 0.0]).unwrap(), winding(&v, [0.0, 0.0]) != 0);
    }

    #[test]
    fn moments_agree_on_square() {
        let closed: Vec<Point> = SQUARE.iter().chain(&SQUARE[..1]).map(|&c| Point::from(c)).collect();
        let sig = points_signature(&closed, 4).unwrap();
        let a = moments_from_signature(&sig, 2, 0.0, 0.0).unwrap();
        let b = moments_from_geometry(&SQUARE, 2, 0.0, 0.0).unwrap();
        assert!(a.max_abs_diff(&b).unwrap() < 1e-9);
        let shifted: Vec<[f64; 2]> = SQUARE.iter().map(|v| [v[0] + 4.0, v[1] - 7.0]).collect();
        let c = moments_from_geometry(&shifted, 2, 4.0, -7.0).unwrap();
        assert!(c.entries.iter().zip(&b.entries).all(|(x, y)| (x.1 - y.1).abs() < 1e-12));
        assert!(matches!(moments_from_signature(&sig, 3, 0.0, 0.0), Err(Error::TruncationTooSmall { .. })));
    }

    #[test]
    fn orientation_examples() {
        let circle = generate(&CurveSpec::Circle { samples: 256, radius: 1.0 }).unwrap();
        let sig = points_signature(circle.points(), 2).unwrap();
        assert_eq!(orientation_from_signature(&sig).unwrap(), Orientation::Positive);
        let rev = points_signature(circle.reverse().points(), 2).unwrap();
        assert_eq!(orientation_from_signature(&rev).unwrap(), Orientation::Negative);
        let line: Vec<Point> = [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]].iter().map(|&c| Point::from(c)).collect();
        assert!(matches!(
            orientation_from_signature(&points_signature(&line, 2).unwrap()),
            Err(Error::Indeterminate(_))
        ));
    }

    #[test]
    fn reparam_examples() {
        let circle = generate(&CurveSpec::Circle { samples: 512, radius: 1.0 }).unwrap();
        let slow = circle.time_change(|t| t * t, 0).unwrap();
        let r = reparam_recover(&circle, &slow, None).unwrap();
        assert!(r.matched && !r.orientation_flip);
        let spacing = circle.grid_resolution();
        for (s, rv) in slow.times().iter().zip(r.r_samples.as_ref().unwrap()) {
            assert!((rv - s * s).abs() <= 2.0 * spacing);
        }
        let back = reparam_recover(&circle, &circle.reverse(), None).unwrap();
        assert!(back.orientation_flip && !back.matched);
        let square = generate(&CurveSpec::RegularPolygon { m: 4, subdivisions: 8 }).unwrap();
        assert!(matches!(reparam_recover(&circle, &square, None), Err(Error::ImageMismatch { .. })));
    }

    proptest! {
        #[test]
        fn indicator_matches_winding(qx in -1.2f64..1.2, qy in -1.2f64..1.2) {
            let star = generate(&CurveSpec::StarPolygon { m: 7, inner_ratio: 0.3, subdivisions: 1 }).unwrap();
            let v = closed_vertices(star.points());
            match interior_indicator(&v, [qx, qy]) {
                Ok(inside) => prop_assert_eq!(inside, winding(&v, [qx, qy]) != 0),
                Err(e) => prop_assert!(matches!(e, Error::OnBoundary)),
            }
        }

        #[test]
        fn green_holds_for_cubics(c in prop::collection::vec(-2.0f64..2.0, 20)) {
            let mut f = BivariatePoly::zero();
            let mut g = BivariatePoly::zero();
            let mut k = 0;
            for i in 0..=3u32 {
                for j in 0..=(3 - i) {
                    f = f.add(&BivariatePoly::monomial(c[k], i, j));
                    g = g.add(&BivariatePoly::monomial(c[k + 10], i, j));
                    k += 1;
                }
            }
            let tri = [[0.0, 0.0], [1.0, 0.2], [0.3, 0.9]];
            prop_assert!(greens_check_polygon(&f, &g, &tri).unwrap().residual <= 1e-12);
        }
    }
}
