// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Segment intersection and simplicity tests for piecewise-geodesic curves.
//!
//! In the plane every decision goes through the exact orientation predicate,
//! so touching endpoints and collinear overlaps are never misclassified.
//! Segments in `R^d` for `d >= 3` and great-circle arcs on the sphere are
//! classified in floating point with absolute tolerance [`TOL`].

use robust::{orient2d, Coord};

use crate::error::{Error, Result, Violation, ViolationKind};
use crate::geometry::{cross3, interpolate, GeodesicSegment, Point, Space, TOL};
use crate::polyline::PiecewiseGeodesic;

#[derive(Debug, Clone, PartialEq)]
pub enum SegmentRelation {
    Disjoint,
    /// The segments meet in exactly one point, which is an endpoint of both.
    SharedEndpointOnly,
    /// The segments meet in exactly one point that is interior to at least one of them.
    Crossing(Point),
    /// The segments share a stretch of positive length.
    Overlapping,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplicityVerdict {
    pub ok: bool,
    pub violation: Option<Violation>,
}

impl SimplicityVerdict {
    fn pass() -> Self {
        SimplicityVerdict {
            ok: true,
            violation: None,
        }
    }

    fn fail(v: Violation) -> Self {
        SimplicityVerdict {
            ok: false,
            violation: Some(v),
        }
    }
}

pub fn segments_intersect(s1: &GeodesicSegment, s2: &GeodesicSegment) -> Result<SegmentRelation> {
    if s1.space() != s2.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(classify(s1.space(), s1.a(), s1.b(), s2.a(), s2.b()).0)
}

/// Relation between segments `p1 p2` and `q1 q2`, plus a point of contact.
pub(crate) fn classify(space: Space, p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> (SegmentRelation, Option<Point>) {
    match space {
        Space::Euclidean(2) => classify_planar(p1.xy(), p2.xy(), q1.xy(), q2.xy()),
        Space::Euclidean(_) => classify_euclidean(p1, p2, q1, q2),
        Space::UnitSphere => classify_sphere(p1, p2, q1, q2),
    }
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    orient2d(Coord { x: a[0], y: a[1] }, Coord { x: b[0], y: b[1] }, Coord { x: c[0], y: c[1] })
}

fn same_side(a: f64, b: f64) -> bool {
    (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0)
}

fn on_closed_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    orient(a, b, p) == 0.0
        && p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

fn classify_planar(
    p1: [f64; 2],
    p2: [f64; 2],
    q1: [f64; 2],
    q2: [f64; 2],
) -> (SegmentRelation, Option<Point>) {
    let pt = |c: [f64; 2]| Some(Point::from(c));
    match (p1 == p2, q1 == q2) {
        (true, true) => {
            return if p1 == q1 {
                (SegmentRelation::SharedEndpointOnly, pt(p1))
            } else {
                (SegmentRelation::Disjoint, None)
            };
        }
        (true, false) | (false, true) => {
            let (p, a, b) = if p1 == p2 { (p1, q1, q2) } else { (q1, p1, p2) };
            return if p == a || p == b {
                (SegmentRelation::SharedEndpointOnly, pt(p))
            } else if on_closed_segment(p, a, b) {
                (SegmentRelation::Crossing(Point::from(p)), pt(p))
            } else {
                (SegmentRelation::Disjoint, None)
            };
        }
        (false, false) => {}
    }
    let o1 = orient(p1, p2, q1);
    let o2 = orient(p1, p2, q2);
    if o1 == 0.0 && o2 == 0.0 {
        return classify_collinear(p1, p2, q1, q2);
    }
    let o3 = orient(q1, q2, p1);
    let o4 = orient(q1, q2, p2);
    if same_side(o1, o2) || same_side(o3, o4) {
        return (SegmentRelation::Disjoint, None);
    }
    if (o1 == 0.0 || o2 == 0.0) && (o3 == 0.0 || o4 == 0.0) {
        let w = if o3 == 0.0 { p1 } else { p2 };
        return (SegmentRelation::SharedEndpointOnly, pt(w));
    }
    // exactly one contact point; its location is the only float step
    let w = if o1 == 0.0 {
        q1
    } else if o2 == 0.0 {
        q2
    } else if o3 == 0.0 {
        p1
    } else if o4 == 0.0 {
        p2
    } else {
        let r = [p2[0] - p1[0], p2[1] - p1[1]];
        let s = [q2[0] - q1[0], q2[1] - q1[1]];
        let qp = [q1[0] - p1[0], q1[1] - p1[1]];
        let t = (qp[0] * s[1] - qp[1] * s[0]) / (r[0] * s[1] - r[1] * s[0]);
        [p1[0] + t * r[0], p1[1] + t * r[1]]
    };
    (SegmentRelation::Crossing(Point::from(w)), pt(w))
}

fn classify_collinear(
    p1: [f64; 2],
    p2: [f64; 2],
    q1: [f64; 2],
    q2: [f64; 2],
) -> (SegmentRelation, Option<Point>) {
    // order along the dominant axis of p is exact for collinear points
    let axis = if (p2[0] - p1[0]).abs() >= (p2[1] - p1[1]).abs() { 0 } else { 1 };
    let span = |a: [f64; 2], b: [f64; 2]| if a[axis] <= b[axis] { (a, b) } else { (b, a) };
    let (plo, phi) = span(p1, p2);
    let (qlo, qhi) = span(q1, q2);
    let lo = if plo[axis] >= qlo[axis] { plo } else { qlo };
    let hi = if phi[axis] <= qhi[axis] { phi } else { qhi };
    if lo[axis] > hi[axis] {
        (SegmentRelation::Disjoint, None)
    } else if lo[axis] == hi[axis] {
        (SegmentRelation::SharedEndpointOnly, Some(Point::from(lo)))
    } else {
        (SegmentRelation::Overlapping, Some(Point::from(lo)))
    }
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn lerp(a: &[f64], b: &[f64], t: f64) -> Point {
    Point::raw(&a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect::<Vec<_>>())
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    let d = sub(a, b);
    dot(&d, &d).sqrt()
}

fn endpoint_contact(
    w: &Point,
    ends1: [&Point; 2],
    ends2: [&Point; 2],
    dist: impl Fn(&Point, &Point) -> f64,
) -> SegmentRelation {
    let near = |ends: [&Point; 2]| ends.iter().any(|e| dist(w, e) <= TOL);
    if near(ends1) && near(ends2) {
        SegmentRelation::SharedEndpointOnly
    } else {
        SegmentRelation::Crossing(w.clone())
    }
}

fn classify_euclidean(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> (SegmentRelation, Option<Point>) {
    let (a, b, c, d) = (p1.coords(), p2.coords(), q1.coords(), q2.coords());
    let u = sub(b, a);
    let v = sub(d, c);
    let w0 = sub(a, c);
    let (uu, uv, vv) = (dot(&u, &u), dot(&u, &v), dot(&v, &v));
    let (uw, vw) = (dot(&u, &w0), dot(&v, &w0));
    let denom = uu * vv - uv * uv;
    let parallel = denom <= 1e-14 * uu.max(1e-300) * vv.max(1e-300);
    if parallel && uu > 0.0 && vv > 0.0 {
        // distance from c to the line through a, b
        let t = -uw / uu;
        let foot: Vec<f64> = a.iter().zip(&u).map(|(x, y)| x + t * y).collect();
        if euclid(&foot, c) > TOL {
            return (SegmentRelation::Disjoint, None);
        }
        let len = uu.sqrt();
        let proj = |x: &[f64]| dot(&sub(x, a), &u) / len;
        let (s0, s1) = (proj(c), proj(d));
        let (qlo, qhi) = (s0.min(s1), s0.max(s1));
        let lo = qlo.max(0.0);
        let hi = qhi.min(len);
        if lo > hi + TOL {
            return (SegmentRelation::Disjoint, None);
        }
        let w = lerp(a, b, (lo / len).clamp(0.0, 1.0));
        if hi - lo > TOL {
            return (SegmentRelation::Overlapping, Some(w));
        }
        let rel = endpoint_contact(&w, [p1, p2], [q1, q2], |x, y| euclid(x.coords(), y.coords()));
        return (rel, Some(w));
    }
    // closest points, clamped to both segments
    let (mut s, mut t) = if denom > 0.0 {
        (((uv * vw - vv * uw) / denom).clamp(0.0, 1.0), 0.0)
    } else {
        (0.0, 0.0)
    };
    if vv > 0.0 {
        t = ((uv * s + vw) / vv).clamp(0.0, 1.0);
    }
    if uu > 0.0 {
        s = ((uv * t - uw) / uu).clamp(0.0, 1.0);
    }
    let x = lerp(a, b, s);
    let y = lerp(c, d, t);
    if euclid(x.coords(), y.coords()) > TOL {
        return (SegmentRelation::Disjoint, None);
    }
    let rel = endpoint_contact(&x, [p1, p2], [q1, q2], |x, y| euclid(x.coords(), y.coords()));
    (rel, Some(x))
}

fn normalize3(v: [f64; 3]) -> Option<[f64; 3]> {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    (n > 1e-15).then(|| [v[0] / n, v[1] / n, v[2] / n])
}

fn on_arc(p: &Point, a: &Point, b: &Point) -> bool {
    let s = Space::UnitSphere;
    s.dist(a, p) + s.dist(p, b) - s.dist(a, b) <= TOL
}

fn classify_sphere(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> (SegmentRelation, Option<Point>) {
    let s = Space::UnitSphere;
    let dist = |x: &Point, y: &Point| s.dist(x, y);
    let (n1, n2) = (normalize3(cross3(p1, p2)), normalize3(cross3(q1, q2)));
    let (n1, n2) = match (n1, n2) {
        (Some(n1), Some(n2)) => (n1, n2),
        // a degenerate arc is a point
        (None, _) | (_, None) => {
            let (p, a, b) = if n1.is_none() { (p1, q1, q2) } else { (q1, p1, p2) };
            if !on_arc(p, a, b) {
                return (SegmentRelation::Disjoint, None);
            }
            let rel = if dist(p, a) <= TOL || dist(p, b) <= TOL {
                SegmentRelation::SharedEndpointOnly
            } else {
                SegmentRelation::Crossing(p.clone())
            };
            return (rel, Some(p.clone()));
        }
    };
    let l = [
        n1[1] * n2[2] - n1[2] * n2[1],
        n1[2] * n2[0] - n1[0] * n2[2],
        n1[0] * n2[1] - n1[1] * n2[0],
    ];
    match normalize3(l).filter(|_| (l[0] * l[0] + l[1] * l[1] + l[2] * l[2]).sqrt() > TOL) {
        None => classify_cocircular(p1, p2, q1, q2, n1),
        Some(l) => {
            for sign in [1.0, -1.0] {
                let c = Point::raw(&[sign * l[0], sign * l[1], sign * l[2]]);
                if on_arc(&c, p1, p2) && on_arc(&c, q1, q2) {
                    let rel = endpoint_contact(&c, [p1, p2], [q1, q2], dist);
                    return (rel, Some(c));
                }
            }
            (SegmentRelation::Disjoint, None)
        }
    }
}

fn classify_cocircular(
    p1: &Point,
    p2: &Point,
    q1: &Point,
    q2: &Point,
    n1: [f64; 3],
) -> (SegmentRelation, Option<Point>) {
    let e1 = p1.coords();
    let e2 = [
        n1[1] * e1[2] - n1[2] * e1[1],
        n1[2] * e1[0] - n1[0] * e1[2],
        n1[0] * e1[1] - n1[1] * e1[0],
    ];
    let angle = |p: &Point| dot(p.coords(), &e2).atan2(dot(p.coords(), e1));
    let len1 = angle(p2);
    let (a, b) = (angle(q1), angle(q2));
    let mut diff = b - a;
    if diff > std::f64::consts::PI {
        diff -= std::f64::consts::TAU;
    } else if diff < -std::f64::consts::PI {
        diff += std::f64::consts::TAU;
    }
    let (start, len2) = if diff >= 0.0 { (a, diff) } else { (b, -diff) };
    let mut best: Option<(f64, f64)> = None;
    for shift in [-std::f64::consts::TAU, 0.0, std::f64::consts::TAU] {
        let lo = (start + shift).max(0.0);
        let hi = (start + shift + len2).min(len1);
        if hi >= lo - TOL && best.is_none_or(|(l, h)| hi - lo > h - l) {
            best = Some((lo, hi));
        }
    }
    let Some((lo, hi)) = best else {
        return (SegmentRelation::Disjoint, None);
    };
    let lo = lo.clamp(0.0, len1);
    let w = if len1 > 0.0 {
        interpolate(Space::UnitSphere, p1, p2, len1, lo / len1)
    } else {
        p1.clone()
    };
    if hi - lo > TOL {
        (SegmentRelation::Overlapping, Some(w))
    } else {
        let rel = endpoint_contact(&w, [p1, p2], [q1, q2], |x, y| Space::UnitSphere.dist(x, y));
        (rel, Some(w))
    }
}

/// Decides whether `pg` is simple (open) or a Jordan curve (closed).
///
/// Adjacent segments may only meet at their shared node; every other pair must
/// be disjoint. For closed curves the first and last segments are adjacent. On
/// failure the lexicographically smallest violating pair is reported.
pub fn is_simple(pg: &PiecewiseGeodesic) -> SimplicityVerdict {
    check_nodes(pg.space(), pg.nodes(), pg.is_closed(), false)
}

/// All-pairs reference implementation of [`is_simple`], without prefiltering.
pub fn is_simple_brute_force(pg: &PiecewiseGeodesic) -> SimplicityVerdict {
    check_nodes(pg.space(), pg.nodes(), pg.is_closed(), true)
}

pub(crate) fn check_nodes(space: Space, nodes: &[Point], closed: bool, brute: bool) -> SimplicityVerdict {
    let m = nodes.len().saturating_sub(1);
    for i in 0..m {
        if nodes[i] == nodes[i + 1] {
            return SimplicityVerdict::fail(Violation {
                first: i,
                second: i,
                witness: nodes[i].clone(),
                kind: ViolationKind::RepeatedNode,
            });
        }
    }
    let pair = |i: usize, j: usize| -> Option<Violation> { check_pair(space, nodes, closed, i, j) };
    if brute {
        for i in 0..m {
            for j in i + 1..m {
                if let Some(v) = pair(i, j) {
                    return SimplicityVerdict::fail(v);
                }
            }
        }
        return SimplicityVerdict::pass();
    }
    let boxes: Vec<Bbox> = (0..m).map(|i| Bbox::of(space, &nodes[i], &nodes[i + 1])).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| boxes[i].lo[0].total_cmp(&boxes[j].lo[0]));
    let mut found: Option<Violation> = None;
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[oi + 1..] {
            if boxes[j].lo[0] > boxes[i].hi[0] {
                break;
            }
            if !boxes[i].overlaps(&boxes[j]) {
                continue;
            }
            let (a, b) = (i.min(j), i.max(j));
            if let Some(f) = &found {
                if (a, b) >= (f.first, f.second) {
                    continue;
                }
            }
            if let Some(v) = pair(a, b) {
                found = Some(v);
            }
        }
    }
    match found {
        Some(v) => SimplicityVerdict::fail(v),
        None => SimplicityVerdict::pass(),
    }
}

fn check_pair(space: Space, nodes: &[Point], closed: bool, i: usize, j: usize) -> Option<Violation> {
    let m = nodes.len() - 1;
    let adjacent = j == i + 1 || (closed && i == 0 && j == m - 1);
    let (rel, w) = classify(space, &nodes[i], &nodes[i + 1], &nodes[j], &nodes[j + 1]);
    let violation = |kind, witness: Option<Point>| {
        Some(Violation {
            first: i,
            second: j,
            witness: witness.unwrap_or_else(|| nodes[j].clone()),
            kind,
        })
    };
    match rel {
        SegmentRelation::Disjoint => None,
        // adjacent segments already share a node, so a single contact is that node
        SegmentRelation::SharedEndpointOnly if adjacent => None,
        SegmentRelation::SharedEndpointOnly => violation(ViolationKind::RepeatedNode, w),
        SegmentRelation::Crossing(p) => violation(ViolationKind::Crossing, Some(p)),
        SegmentRelation::Overlapping => violation(ViolationKind::Overlapping, w),
    }
}

#[derive(Debug, Clone)]
struct Bbox {
    lo: [f64; 3],
    hi: [f64; 3],
}

impl Bbox {
    fn of(space: Space, a: &Point, b: &Point) -> Bbox {
        let pad = match space {
            Space::Euclidean(2) => 0.0,
            Space::Euclidean(_) => TOL,
            Space::UnitSphere => 1.0 - (space.dist(a, b) / 2.0).cos() + TOL,
        };
        let mut lo = [0.0; 3];
        let mut hi = [0.0; 3];
        for k in 0..a.dim().min(3) {
            lo[k] = a.coords()[k].min(b.coords()[k]) - pad;
            hi[k] = a.coords()[k].max(b.coords()[k]) + pad;
        }
        Bbox { lo, hi }
    }

    fn overlaps(&self, other: &Bbox) -> bool {
        (0..3).all(|k| self.lo[k] <= other.hi[k] && other.lo[k] <= self.hi[k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seg(a: [f64; 2], b: [f64; 2]) -> GeodesicSegment {
        GeodesicSegment::new_unchecked(Space::PLANE, a.into(), b.into())
    }

    fn sph(c: [f64; 3]) -> Point {
        let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        Point::raw(&[c[0] / n, c[1] / n, c[2] / n])
    }

    #[test]
    fn planar_examples() {
        let r = segments_intersect(&seg([0.0, 0.0], [1.0, 1.0]), &seg([1.0, 0.0], [0.0, 1.0])).unwrap();
        assert_eq!(r, SegmentRelation::Crossing([0.5, 0.5].into()));
        let r = segments_intersect(&seg([0.0, 0.0], [1.0, 0.0]), &seg([1.0, 0.0], [1.0, 1.0])).unwrap();
        assert_eq!(r, SegmentRelation::SharedEndpointOnly);
        let r = segments_intersect(&seg([0.0, 0.0], [1.0, 0.0]), &seg([0.5, 0.0], [2.0, 0.0])).unwrap();
        assert_eq!(r, SegmentRelation::Overlapping);
        let r = segments_intersect(&seg([0.0, 0.0], [1.0, 0.0]), &seg([1.0, 0.0], [2.0, 0.0])).unwrap();
        assert_eq!(r, SegmentRelation::SharedEndpointOnly);
        // T-junction
        let r = segments_intersect(&seg([0.0, 0.0], [2.0, 0.0]), &seg([1.0, 0.0], [1.0, 1.0])).unwrap();
        assert_eq!(r, SegmentRelation::Crossing([1.0, 0.0].into()));
        let r = segments_intersect(&seg([0.0, 0.0], [1.0, 0.0]), &seg([0.0, 1e-300], [1.0, 1e-300])).unwrap();
        assert_eq!(r, SegmentRelation::Disjoint);
        let s3 = GeodesicSegment::new_unchecked(Space::Euclidean(3), [0.0, 0.0, 0.0].into(), [1.0, 0.0, 0.0].into());
        assert!(matches!(segments_intersect(&seg([0.0, 0.0], [1.0, 0.0]), &s3), Err(Error::SpaceMismatch)));
    }

    #[test]
    fn near_degenerate_is_exact() {
        // q1 sits just above the line through p; a float determinant would call it collinear
        let p1 = [0.1, 0.1];
        let p2 = [0.3, 0.3];
        let q1 = [0.2, 0.2 + f64::EPSILON / 8.0];
        assert!(orient(p1, p2, q1) > 0.0);
        let r = classify_planar(p1, p2, q1, [0.2, 1.0]).0;
        assert_eq!(r, SegmentRelation::Disjoint);
    }

    #[test]
    fn euclidean_3d() {
        let s = Space::Euclidean(3);
        let a = |c: [f64; 3]| Point::from(c);
        let r = classify(s, &a([0.0, 0.0, 0.0]), &a([1.0, 1.0, 0.0]), &a([1.0, 0.0, 0.0]), &a([0.0, 1.0, 0.0])).0;
        assert!(matches!(r, SegmentRelation::Crossing(_)));
        let r = classify(s, &a([0.0, 0.0, 0.0]), &a([1.0, 1.0, 0.0]), &a([1.0, 0.0, 1.0]), &a([0.0, 1.0, 1.0])).0;
        assert_eq!(r, SegmentRelation::Disjoint);
        let r = classify(s, &a([0.0, 0.0, 0.0]), &a([1.0, 0.0, 0.0]), &a([0.5, 0.0, 0.0]), &a([2.0, 0.0, 0.0])).0;
        assert_eq!(r, SegmentRelation::Overlapping);
        let r = classify(s, &a([0.0, 0.0, 0.0]), &a([1.0, 0.0, 0.0]), &a([1.0, 0.0, 0.0]), &a([1.0, 1.0, 1.0])).0;
        assert_eq!(r, SegmentRelation::SharedEndpointOnly);
    }

    #[test]
    fn sphere_arcs() {
        let s = Space::UnitSphere;
        let h = 0.5f64.sqrt();
        // equator arc vs meridian arc through (h,h,0)
        let r = classify(s, &sph([1.0, 0.0, 0.0]), &sph([0.0, 1.0, 0.0]), &sph([h, h, -0.5]), &sph([h, h, 0.5])).0;
        match r {
            SegmentRelation::Crossing(w) => assert!(s.dist(&w, &sph([h, h, 0.0])) < 1e-12),
            other => panic!("{other:?}"),
        }
        let r = classify(s, &sph([1.0, 0.0, 0.0]), &sph([0.0, 1.0, 0.0]), &sph([0.0, 1.0, 0.0]), &sph([0.0, 0.0, 1.0])).0;
        assert_eq!(r, SegmentRelation::SharedEndpointOnly);
        let r = classify(s, &sph([1.0, 0.0, 0.0]), &sph([0.0, 1.0, 0.0]), &sph([h, h, 0.0]), &sph([-h, h, 0.0])).0;
        assert_eq!(r, SegmentRelation::Overlapping);
        let r = classify(s, &sph([1.0, 0.0, 0.0]), &sph([h, h, 0.0]), &sph([0.0, 1.0, 0.0]), &sph([-h, h, 0.0])).0;
        assert_eq!(r, SegmentRelation::Disjoint);
        // arcs on the same circle seen from the far side
        let r = classify(s, &sph([1.0, 0.0, 0.0]), &sph([h, h, 0.0]), &sph([-1.0, 0.0, 0.0]), &sph([-h, -h, 0.0])).0;
        assert_eq!(r, SegmentRelation::Disjoint);
        // the great circles meet at (+-h, +-h, 0), outside both arcs
        let r = classify(s, &sph([1.0, 0.0, 0.0]), &sph([0.0, 1.0, 0.0]), &sph([0.0, 0.0, 1.0]), &sph([-h, -h, 0.2])).0;
        assert_eq!(r, SegmentRelation::Disjoint);
    }

    #[test]
    fn square_and_bowtie() {
        let sq = PiecewiseGeodesic::planar(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.0, 0.0]], true).unwrap();
        assert!(is_simple(&sq).ok);
        let bow = PiecewiseGeodesic::planar(&[[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0], [0.0, 0.0]], true).unwrap();
        let v = is_simple(&bow);
        assert!(!v.ok);
        let v = v.violation.unwrap();
        assert_eq!((v.first, v.second), (0, 2));
        assert_eq!(v.witness.coords(), &[0.5, 0.5]);
        assert_eq!(v.kind, ViolationKind::Crossing);
    }

    #[test]
    fn backtracking_and_repeats() {
        let back = PiecewiseGeodesic::planar(&[[0.0, 0.0], [1.0, 0.0], [0.5, 0.0]], false).unwrap();
        let v = is_simple(&back).violation.unwrap();
        assert_eq!(v.kind, ViolationKind::Overlapping);
        let rep = PiecewiseGeodesic::planar(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0], [2.0, -1.0]], false).unwrap();
        let v = is_simple(&rep).violation.unwrap();
        assert_eq!((v.first, v.second), (0, 3));
        let dup = PiecewiseGeodesic::planar(&[[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]], false).unwrap();
        assert_eq!(is_simple(&dup).violation.unwrap().kind, ViolationKind::RepeatedNode);
        // open curve whose ends meet is not simple
        let loopy = PiecewiseGeodesic::planar(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 0.0]], false).unwrap();
        assert!(!is_simple(&loopy).ok);
        assert!(is_simple(&PiecewiseGeodesic::planar(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 0.0]], true).unwrap()).ok);
    }

    fn polyline() -> impl Strategy<Value = (Vec<[f64; 2]>, bool)> {
        // coarse integer grid makes touching and collinear cases common
        (prop::collection::vec((0i32..6, 0i32..6), 3..=65), any::<bool>()).prop_map(|(v, closed)| {
            let mut pts: Vec<[f64; 2]> = v.into_iter().map(|(x, y)| [x as f64 * 0.5, y as f64 * 0.25]).collect();
            if closed {
                pts.push(pts[0]);
            }
            (pts, closed)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn prefilter_matches_brute_force((pts, closed) in polyline()) {
            let pg = PiecewiseGeodesic::planar(&pts, closed).unwrap();
            prop_assert_eq!(is_simple(&pg), is_simple_brute_force(&pg));
        }
    }

    proptest! {
        #[test]
        fn invariant_under_reversal_and_rotation(
            (pts, closed) in polyline(),
            shift in 0usize..64,
        ) {
            let pg = PiecewiseGeodesic::planar(&pts, closed).unwrap();
            let ok = is_simple(&pg).ok;
            prop_assert_eq!(is_simple(&pg.reverse()).ok, ok);
            if closed {
                let n = pts.len() - 1;
                let mut rot: Vec<[f64; 2]> = (0..n).map(|k| pts[(k + shift) % n]).collect();
                rot.push(rot[0]);
                let r = PiecewiseGeodesic::planar(&rot, true).unwrap();
                prop_assert_eq!(is_simple(&r).ok, ok);
            }
        }

        #[test]
        fn random_reals_match_brute_force(
            v in prop::collection::vec(prop::array::uniform2(-1.0f64..1.0), 3..40),
        ) {
            let pg = PiecewiseGeodesic::planar(&v, false).unwrap();
            prop_assert_eq!(is_simple(&pg), is_simple_brute_force(&pg));
        }
    }
}
