// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Simple piecewise-geodesic interpolation.
//!
//! [`simple_interpolate`] handles open simple curves: starting from `t_0 = 0`,
//! each partition time is the last time the curve is still inside the closed
//! ball of radius `delta_epsilon / 2` around the previous node. Consecutive
//! nodes are then exactly `delta_epsilon / 2` apart and non-adjacent nodes are
//! strictly further apart, which rules out crossings.
//!
//! [`jordan_interpolate`] handles Jordan curves with prescribed partition
//! times `tau_1 < ... < tau_k`. Disjoint balls are placed around every
//! `x(tau_i)` and the basepoint; each prescribed node is joined radially to the
//! first entry into and the last exit from its ball, and the arcs in between
//! are interpolated stage by stage with the open-curve construction, shrinking
//! the stage radius whenever the partial polyline stops being simple.

use crate::curve::{separation_radius, time_modulus, ContinuityReport, SampledCurve};
use crate::error::{Error, Result, Violation};
use crate::geometry::{interpolate, Point, Space, TOL};
use crate::polyline::{Partition, PiecewiseGeodesic};
use crate::simplicity::{check_nodes, classify, SegmentRelation};

/// Retry cap for a single Jordan stage.
pub const MAX_STAGE_RETRIES: usize = 20;

/// Fraction of the smallest distance between ball centers used as the ball
/// radius cap, so the closed balls stay disjoint with margin.
pub const DISJOINT_FRACTION: f64 = 0.45;

const BISECTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SimpleInterpolation {
    pub polyline: PiecewiseGeodesic,
    pub report: ContinuityReport,
}

impl SimpleInterpolation {
    pub fn partition(&self) -> &Partition {
        self.polyline.partition()
    }
}

/// Intermediate quantities of the Jordan construction.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanStageReport {
    /// Auxiliary basepoint time, half of the first prescribed time.
    pub tau: f64,
    /// The epsilon actually used; smaller than requested when the requested
    /// value is too coarse for the spacing of the prescribed times.
    pub epsilon: f64,
    /// Radius of the balls around the prescribed nodes.
    pub ball_radius: f64,
    /// Radius cap that keeps the balls disjoint.
    pub disjoint_radius: f64,
    /// First-entry times `u_1, ..., u_{k+1}`.
    pub entries: Vec<f64>,
    /// Last-exit times `v_0, ..., v_k`.
    pub exits: Vec<f64>,
    /// Final node spacing used on each arc.
    pub stage_radii: Vec<f64>,
    /// Number of times each stage radius was halved.
    pub retries: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct JordanInterpolation {
    pub polyline: PiecewiseGeodesic,
    pub report: JordanStageReport,
}

impl JordanInterpolation {
    pub fn partition(&self) -> &Partition {
        self.polyline.partition()
    }
}

/// Largest `lambda` in `[lo, hi]` with `x(lambda)` in the closed ball, where
/// `x` runs along the geodesic from `a` to `b` at constant speed.
fn last_inside(space: Space, a: &Point, b: &Point, c: &Point, r: f64, lo: f64, hi: f64) -> Option<f64> {
    let len = space.dist(a, b);
    let at = |lam: f64| interpolate(space, a, b, len, lam);
    if space.dist(&at(hi), c) <= r {
        return Some(hi);
    }
    match space {
        Space::Euclidean(_) => {
            let (pa, pb, pc) = (a.coords(), b.coords(), c.coords());
            let mut qa = 0.0;
            let mut qb = 0.0;
            let mut qc = -r * r;
            for k in 0..pa.len() {
                let v = pb[k] - pa[k];
                let w = pa[k] - pc[k];
                qa += v * v;
                qb += v * w;
                qc += w * w;
            }
            let disc = qb * qb - qa * qc;
            if qa == 0.0 || disc < 0.0 {
                return None;
            }
            let root = disc.sqrt();
            let plus = if qb <= 0.0 { (-qb + root) / qa } else { qc / (-qb - root) };
            if plus >= lo && plus <= hi {
                Some(plus)
            } else if space.dist(&at(lo), c) <= r {
                // rounding pushed the crossing just below `lo`
                Some(lo)
            } else {
                None
            }
        }
        Space::UnitSphere => {
            if len < 1e-15 {
                return None;
            }
            // along the arc, x . c = rho cos(phi - phi0) with phi = lambda * len
            let tangent: Vec<f64> = {
                let (a, b) = (a.coords(), b.coords());
                let ab: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                let t: Vec<f64> = a.iter().zip(b).map(|(x, y)| y - ab * x).collect();
                let n = t.iter().map(|x| x * x).sum::<f64>().sqrt();
                t.into_iter().map(|x| x / n).collect()
            };
            let ca: f64 = a.coords().iter().zip(c.coords()).map(|(x, y)| x * y).sum();
            let ct: f64 = tangent.iter().zip(c.coords()).map(|(x, y)| x * y).sum();
            let peak = (ct.atan2(ca) / len).clamp(lo, hi);
            if space.dist(&at(peak), c) > r {
                return None;
            }
            let (mut inside, mut outside) = (peak, hi);
            while outside - inside > BISECTION_TOL {
                let mid = 0.5 * (inside + outside);
                if space.dist(&at(mid), c) <= r {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            Some(inside)
        }
    }
}

/// Largest `t` in `[t_lo, t_hi]` with `d(x_t, center) <= radius`, if any.
fn last_exit_between(curve: &SampledCurve, t_lo: f64, t_hi: f64, center: &Point, radius: f64) -> Option<f64> {
    let space = curve.space();
    let times = curve.times();
    let points = curve.points();
    let k_lo = curve.segment_index(t_lo);
    let k_hi = curve.segment_index(t_hi);
    for k in (k_lo..=k_hi).rev() {
        let (t0, t1) = (times[k], times[k + 1]);
        let span = t1 - t0;
        let lo = ((t_lo.max(t0) - t0) / span).clamp(0.0, 1.0);
        let hi = ((t_hi.min(t1) - t0) / span).clamp(0.0, 1.0);
        if hi < lo {
            continue;
        }
        if let Some(lam) = last_inside(space, &points[k], &points[k + 1], center, radius, lo, hi) {
            let t = if lam == hi { t_hi.min(t1) } else { t0 + lam * span };
            return Some(t.clamp(t_lo, t_hi));
        }
    }
    None
}

/// Smallest `t` in `[t_lo, t_hi]` with `d(x_t, center) <= radius`, if any.
fn first_entry_between(curve: &SampledCurve, t_lo: f64, t_hi: f64, center: &Point, radius: f64) -> Option<f64> {
    let space = curve.space();
    let times = curve.times();
    let points = curve.points();
    let k_lo = curve.segment_index(t_lo);
    let k_hi = curve.segment_index(t_hi);
    for k in k_lo..=k_hi {
        let (t0, t1) = (times[k], times[k + 1]);
        let span = t1 - t0;
        // walk the segment backwards so the first entry becomes a last exit
        let lo = ((t1 - t_hi.min(t1)) / span).clamp(0.0, 1.0);
        let hi = ((t1 - t_lo.max(t0)) / span).clamp(0.0, 1.0);
        if hi < lo {
            continue;
        }
        if let Some(lam) = last_inside(space, &points[k + 1], &points[k], center, radius, lo, hi) {
            let t = if lam == hi { t_lo.max(t0) } else { t1 - lam * span };
            return Some(t.clamp(t_lo, t_hi));
        }
    }
    None
}

/// The last time at or after `t_start` that the curve lies in the closed ball
/// `B(center, radius)`; `1` if the curve ends inside the ball.
pub fn last_exit_time(curve: &SampledCurve, t_start: f64, center: &Point, radius: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&t_start) {
        return Err(Error::OutOfRange(format!("start time {t_start} not in [0,1)")));
    }
    if !(radius > 0.0) {
        return Err(Error::OutOfRange(format!("radius {radius} must be positive")));
    }
    curve.space().check(center)?;
    let distance = curve.space().dist(&curve.at(t_start), center);
    if distance > radius {
        return Err(Error::InvalidStart { distance, radius });
    }
    Ok(last_exit_between(curve, t_start, 1.0, center, radius).unwrap_or(t_start))
}

/// Partition times of the last-exit recursion on `[start, end]` with node
/// spacing `radius`, including both ends.
fn exit_sequence(curve: &SampledCurve, start: f64, end: f64, radius: f64, max_steps: usize) -> Result<Vec<f64>> {
    let mut times = vec![start];
    let mut t = start;
    while t < end {
        if times.len() > max_steps {
            return Err(Error::AlgorithmStalled { steps: times.len() - 1 });
        }
        let center = curve.at(t);
        let next = last_exit_between(curve, t, end, &center, radius).unwrap_or(t);
        if next <= t {
            return Err(Error::AlgorithmStalled { steps: times.len() - 1 });
        }
        times.push(next);
        t = next;
    }
    Ok(times)
}

/// Moduli are first estimated at `epsilon` itself. Nodes fall between
/// samples, so on a coarse grid the mesh can overshoot by up to two sample
/// gaps; the fallback estimates at `epsilon - 2h` instead, `h` being the
/// largest gap between sample times. Two nodes at least `epsilon` apart in
/// time sit next to samples at least `epsilon - 2h` apart.
fn modulus_margins(curve: &SampledCurve) -> [f64; 2] {
    [0.0, 2.0 * curve.grid_resolution()]
}

fn mesh_failure(mesh: f64, epsilon: f64) -> Error {
    Error::ConstructionFailed {
        reason: format!("mesh {mesh} is not below epsilon {epsilon}"),
        violation: None,
    }
}

fn step_guard(eta: f64) -> usize {
    10 * (2.0 / eta).ceil().min(1e9) as usize
}

/// Simple piecewise-geodesic interpolation of an open simple curve with mesh
/// below `epsilon`.
pub fn simple_interpolate(curve: &SampledCurve, epsilon: f64) -> Result<SimpleInterpolation> {
    if curve.is_closed() {
        return Err(Error::InvalidCurve(
            "closed curve given; use the Jordan construction".into(),
        ));
    }
    let mut mesh = f64::INFINITY;
    for margin in modulus_margins(curve) {
        if margin >= epsilon {
            break;
        }
        let report = curve.continuity_report(epsilon - margin)?;
        let radius = report.delta_epsilon / 2.0;
        let times = exit_sequence(curve, 0.0, 1.0, radius, step_guard(report.eta_epsilon))?;
        let polyline = PiecewiseGeodesic::interpolating(curve, Partition::new(times)?)?;
        mesh = polyline.partition().mesh();
        if mesh >= epsilon {
            continue;
        }
        let verdict = check_nodes(polyline.space(), polyline.nodes(), false, false);
        if let Some(v) = verdict.violation {
            return Err(Error::ConstructionFailed {
                reason: "interpolation is not simple".into(),
                violation: Some(Box::new(v)),
            });
        }
        return Ok(SimpleInterpolation { polyline, report });
    }
    Err(mesh_failure(mesh, epsilon))
}

/// Jordan piecewise-geodesic interpolation of a closed curve whose partition
/// contains every time in `required`, with mesh below `epsilon`.
pub fn jordan_interpolate(curve: &SampledCurve, epsilon: f64, required: &[f64]) -> Result<JordanInterpolation> {
    let mut mesh = f64::INFINITY;
    for margin in modulus_margins(curve) {
        let out = jordan_attempt(curve, epsilon, required, margin)?;
        mesh = out.polyline.partition().mesh();
        if mesh < epsilon {
            return Ok(out);
        }
    }
    Err(mesh_failure(mesh, epsilon))
}

fn jordan_attempt(curve: &SampledCurve, epsilon: f64, required: &[f64], margin: f64) -> Result<JordanInterpolation> {
    if !curve.is_closed() {
        return Err(Error::InvalidCurve("the Jordan construction needs a closed curve".into()));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::OutOfRange(format!("epsilon {epsilon} not in (0,1)")));
    }
    curve.require_min_samples()?;
    if let Some(&t) = required.iter().find(|t| !(**t > 0.0 && **t < 1.0)) {
        return Err(Error::OutOfRange(format!("required time {t} not in (0,1)")));
    }
    if required.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InfeasibleRequiredPoints(
            "required times must be distinct and increasing".into(),
        ));
    }
    let space = curve.space();
    let mut taus: Vec<f64> = required.to_vec();
    taus.push(1.0);
    let k1 = taus.len();
    let tau = taus[0] / 2.0;

    let mut bound = tau.min(taus[0] - tau);
    for w in taus.windows(2) {
        bound = bound.min((w[1] - w[0]) / 2.0);
    }
    let eps = if epsilon < bound { epsilon } else { 0.99 * bound };
    let eps_grid = eps - margin;
    if !(eps_grid > 0.0) {
        return Err(Error::InvalidCurve(format!(
            "samples too coarse for epsilon {eps} (largest time gap {})",
            curve.grid_resolution()
        )));
    }

    let centers: Vec<Point> = taus.iter().map(|&t| curve.at(t)).collect();
    let mut min_gap = f64::INFINITY;
    let mut all = vec![curve.at(tau)];
    all.extend(centers.iter().cloned());
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            min_gap = min_gap.min(space.dist(&all[i], &all[j]));
        }
    }
    if min_gap == 0.0 {
        return Err(Error::InfeasibleRequiredPoints(
            "two required nodes coincide in space".into(),
        ));
    }
    let disjoint_radius = DISJOINT_FRACTION * min_gap;

    // the curve seen from x(tau): one open arc on either side of each center
    let rotated = curve.rotate_basepoint(tau)?;
    let sigmas: Vec<f64> = taus.iter().map(|&t| rotated.snap(t - tau)).collect();
    let mut ball_radius = disjoint_radius;
    if space == Space::UnitSphere {
        ball_radius = ball_radius.min(0.49 * space.uniqueness_radius());
    }
    for &s in &sigmas {
        for (a, b) in [(0.0, s), (s, 1.0)] {
            let (t, p) = rotated.window(a, b);
            ball_radius = ball_radius.min(separation_radius(space, &t, &p, eps_grid)?);
        }
    }

    let mut entries = Vec::with_capacity(k1);
    let mut exits = vec![0.0; k1];
    for (i, (&s, c)) in sigmas.iter().zip(&centers).enumerate() {
        let u = first_entry_between(&rotated, 0.0, s, c, ball_radius).unwrap_or(s);
        let v = last_exit_between(&rotated, s, 1.0, c, ball_radius).unwrap_or(s);
        entries.push(tau + u);
        if i + 1 == k1 {
            exits[0] = tau + v - 1.0;
        } else {
            exits[i + 1] = tau + v;
        }
    }
    let mut order = vec![0.0, exits[0]];
    for i in 0..k1 {
        order.push(entries[i]);
        order.push(taus[i]);
        if i + 1 < k1 {
            order.push(exits[i + 1]);
        }
    }
    if order.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::ConstructionFailed {
            reason: format!("entry and exit times are out of order: {order:?}"),
            violation: None,
        });
    }

    let mut times: Vec<f64> = vec![0.0];
    let mut stage_radii = Vec::with_capacity(k1);
    let mut retries = Vec::with_capacity(k1);
    for i in 0..k1 {
        let (start, end) = (exits[i], entries[i]);
        let (wt, wp) = curve.window(start, end);
        let arc_radius = separation_radius(space, &wt, &wp, eps_grid)?;
        let mut rho = (arc_radius / 2.0).min(0.5 * ball_radius);
        let mut attempt = 0;
        let accepted = loop {
            let guard = step_guard(time_modulus(space, &wt, &wp, 2.0 * rho));
            let mut trial = times.clone();
            let stage = exit_sequence(curve, start, end, rho, guard)?;
            trial.extend(stage);
            trial.push(taus[i]);
            let last = i + 1 == k1;
            let nodes: Vec<Point> = trial.iter().map(|&t| curve.at(t)).collect();
            let verdict = if last {
                let mut closed = nodes.clone();
                closed.pop();
                closed.push(nodes[0].clone());
                check_nodes(space, &closed, true, false)
            } else {
                check_nodes(space, &nodes, false, false)
            };
            match verdict.violation {
                None => break trial,
                Some(v) if attempt >= MAX_STAGE_RETRIES => {
                    return Err(stage_failure(i, attempt, v));
                }
                Some(_) => {
                    attempt += 1;
                    rho /= 2.0;
                }
            }
        };
        times = accepted;
        stage_radii.push(rho);
        retries.push(attempt);
    }

    let partition = Partition::new(times)?;
    let mut nodes: Vec<Point> = partition.times().iter().map(|&t| curve.at(t)).collect();
    let n = nodes.len();
    nodes[n - 1] = nodes[0].clone();
    let polyline = PiecewiseGeodesic::new(space, partition, nodes, true)?;
    Ok(JordanInterpolation {
        polyline,
        report: JordanStageReport {
            tau,
            epsilon: eps,
            ball_radius,
            disjoint_radius,
            entries,
            exits,
            stage_radii,
            retries,
        },
    })
}

fn stage_failure(stage: usize, attempts: usize, v: Violation) -> Error {
    Error::ConstructionFailed {
        reason: format!("stage {} still not simple after {attempts} radius halvings", stage + 1),
        violation: Some(Box::new(v)),
    }
}

/// Checks, for two intersecting geodesic segments `xy` and `zw` of length at
/// most `r`, that some cross distance among `x, y` and `z, w` is below `r`.
pub fn check_crossing_lemma(space: Space, x: &Point, y: &Point, z: &Point, w: &Point, r: f64) -> Result<bool> {
    for p in [x, y, z, w] {
        space.check(p)?;
    }
    if space.dist(x, y) > r || space.dist(z, w) > r {
        return Err(Error::HypothesisNotMet("a segment is longer than r".into()));
    }
    if classify(space, x, y, z, w).0 == SegmentRelation::Disjoint {
        return Err(Error::HypothesisNotMet("segments do not intersect".into()));
    }
    let closest = [(x, z), (x, w), (y, z), (y, w)]
        .iter()
        .map(|(a, b)| space.dist(a, b))
        .fold(f64::INFINITY, f64::min);
    Ok(closest < r)
}

/// Checks, for a geodesic `xy` of length at most `r < big_r` with both ends
/// outside the closed ball `B(p, big_r)` that meets the radius from `p` to the
/// boundary point `q`, that both ends lie within `r` of `q`.
pub fn check_radial_lemma(
    space: Space,
    p: &Point,
    big_r: f64,
    q: &Point,
    x: &Point,
    y: &Point,
    r: f64,
) -> Result<bool> {
    for a in [p, q, x, y] {
        space.check(a)?;
    }
    if !(r > 0.0 && r < big_r) || big_r >= space.uniqueness_radius() {
        return Err(Error::HypothesisNotMet("need 0 < r < R below the uniqueness radius".into()));
    }
    if (space.dist(p, q) - big_r).abs() > TOL {
        return Err(Error::HypothesisNotMet("q is not on the ball boundary".into()));
    }
    if space.dist(p, x) <= big_r || space.dist(p, y) <= big_r {
        return Err(Error::HypothesisNotMet("an endpoint lies in the closed ball".into()));
    }
    if space.dist(x, y) > r {
        return Err(Error::HypothesisNotMet("segment is longer than r".into()));
    }
    if classify(space, x, y, p, q).0 == SegmentRelation::Disjoint {
        return Err(Error::HypothesisNotMet("segment misses the radius".into()));
    }
    Ok(space.dist(x, q) < r && space.dist(y, q) < r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, CurveSpec};
    use crate::simplicity::is_simple;
    use std::f64::consts::PI;

    fn line(n: usize) -> SampledCurve {
        let pts: Vec<[f64; 2]> = (0..n).map(|j| [j as f64 / (n - 1) as f64, 0.0]).collect();
        SampledCurve::planar(&pts, false).unwrap()
    }

    #[test]
    fn last_exit_examples() {
        let l = line(101);
        let t = last_exit_time(&l, 0.0, &[0.0, 0.0].into(), 0.15).unwrap();
        assert!((t - 0.15).abs() < 1e-15);

        let zig = SampledCurve::new(
            Space::PLANE,
            vec![0.0, 0.25, 0.5, 1.0],
            vec![[0.0, 0.0].into(), [0.2, 0.0].into(), [0.05, 0.0].into(), [0.3, 0.0].into()],
            false,
        )
        .unwrap();
        // x(t) = 0.05 + 0.5 (t - 0.5) on the last segment reaches 0.1 at t = 0.6
        let t = last_exit_time(&zig, 0.0, &[0.0, 0.0].into(), 0.1).unwrap();
        assert!((t - 0.6).abs() < 1e-15, "{t}");

        assert_eq!(last_exit_time(&l, 0.2, &[0.5, 0.0].into(), 2.0).unwrap(), 1.0);
        assert!(matches!(
            last_exit_time(&l, 0.0, &[0.5, 0.0].into(), 0.1),
            Err(Error::InvalidStart { .. })
        ));
    }

    #[test]
    fn last_exit_on_sphere() {
        let c = generate(&CurveSpec::SphericalCircle { samples: 64, latitude: 0.0 }).unwrap();
        let open = c.restrict(0.0, 0.45).unwrap();
        let center = open.at(0.0);
        let t = last_exit_time(&open, 0.0, &center, 0.5).unwrap();
        let d = Space::UnitSphere.dist(&open.at(t), &center);
        assert!((d - 0.5).abs() < 1e-11, "{d}");
        // the equator is traversed at 0.45 * 2 pi per unit time
        assert!((t - 0.5 / (0.45 * 2.0 * PI)).abs() < 1e-10);
    }

    #[test]
    fn coarse_grid_falls_back_to_margin() {
        // nodes between samples overshoot the mesh on this grid at the first try
        let c = generate(&CurveSpec::Circle { samples: 256, radius: 1.0 }).unwrap();
        let out = jordan_interpolate(&c, 0.1, &[]).unwrap();
        assert!(out.polyline.partition().mesh() < 0.1);
        assert!(is_simple(&out.polyline).ok);
    }

    #[test]
    fn straight_line_partition() {
        let l = line(101);
        let out = simple_interpolate(&l, 0.3).unwrap();
        assert!((out.report.delta_epsilon - 0.297).abs() < 1e-12);
        let t = out.partition().times();
        assert_eq!(t.len(), 8);
        for (j, &s) in t[..7].iter().enumerate() {
            assert!((s - 0.1485 * j as f64).abs() < 1e-12, "{s}");
        }
        assert_eq!(t[7], 1.0);
        assert!(out.partition().mesh() < 0.3);
    }

    #[test]
    fn one_segment_case() {
        let tiny: Vec<[f64; 2]> = (0..20).map(|j| [j as f64 * 0.01, (j as f64 * 0.3).sin() * 0.001]).collect();
        let c = SampledCurve::planar(&tiny, false).unwrap();
        // a ball containing the whole curve ends the recursion in one step
        assert_eq!(exit_sequence(&c, 0.0, 1.0, 1.0, 10).unwrap(), vec![0.0, 1.0]);
        let out = simple_interpolate(&c, 0.95).unwrap();
        assert_eq!(out.partition().len(), 4);
    }

    fn check_open(curve: &SampledCurve, eps: f64) {
        let out = simple_interpolate(curve, eps).unwrap();
        let pg = &out.polyline;
        let half = out.report.delta_epsilon / 2.0;
        assert!(is_simple(pg).ok);
        assert!(pg.partition().mesh() < eps);
        let nodes = pg.nodes();
        let n = nodes.len();
        for i in 0..n {
            assert_eq!(nodes[i], curve.at(pg.times()[i]));
            if i + 2 < n {
                let d = curve.space().dist(&nodes[i], &nodes[i + 1]);
                assert!((d - half).abs() < 1e-9, "{d} vs {half}");
            }
            for j in i + 2..n {
                assert!(curve.space().dist(&nodes[i], &nodes[j]) > half);
            }
        }
        assert!(curve.space().dist(&nodes[n - 2], &nodes[n - 1]) <= half + 1e-12);
    }

    #[test]
    fn semicircle_suite() {
        let c = generate(&CurveSpec::Arc { samples: 2048, radius: 1.0, start_angle: 0.0, end_angle: PI }).unwrap();
        for eps in [0.2, 0.1, 0.05] {
            check_open(&c, eps);
        }
    }

    #[test]
    fn sphere_open_curve() {
        let c = generate(&CurveSpec::SphericalCircle { samples: 512, latitude: 0.4 }).unwrap();
        let open = crate::generators::open_at_vertex(&c, 0).unwrap();
        for eps in [0.2, 0.1] {
            check_open(&open, eps);
        }
    }

    /// Largest distance between a curve and its interpolation on a 10x grid.
    fn sup_gap(c: &SampledCurve, pg: &PiecewiseGeodesic) -> f64 {
        let n = 10 * c.len();
        (0..=n)
            .map(|j| {
                let t = j as f64 / n as f64;
                c.space().dist(&c.at(t), &pg.eval(t).unwrap())
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn uniform_closeness_improves() {
        let specs = [
            CurveSpec::Spiral { samples: 1500, turns: 2.0, r0: 0.3, r1: 1.0 },
            CurveSpec::Arc { samples: 2048, radius: 1.0, start_angle: 0.0, end_angle: PI },
        ];
        for spec in &specs {
            let c = generate(spec).unwrap();
            let gaps: Vec<f64> = [0.2, 0.1, 0.05]
                .iter()
                .map(|&eps| {
                    let out = simple_interpolate(&c, eps).unwrap();
                    let gap = sup_gap(&c, &out.polyline);
                    // the chord of a cell stays within delta/2 of its start node,
                    // and so does the curve over the cell
                    assert!(gap <= out.report.delta_epsilon, "{gap}");
                    gap
                })
                .collect();
            assert!(gaps[1] <= gaps[0] && gaps[2] <= gaps[1], "{gaps:?}");
            assert!(gaps[2] < gaps[0], "{gaps:?}");
        }
    }

    #[test]
    fn jordan_circle_with_required_times() {
        let c = generate(&CurveSpec::Circle { samples: 4096, radius: 1.0 }).unwrap();
        let out = jordan_interpolate(&c, 0.1, &[0.25, 0.5]).unwrap();
        let p = out.partition();
        assert!(p.contains(0.25) && p.contains(0.5));
        assert!(p.mesh() < 0.1);
        assert!(is_simple(&out.polyline).ok);
        let r = &out.report;
        for (i, &tau) in [0.25, 0.5, 1.0].iter().enumerate() {
            let center = c.at(tau);
            let du = c.space().dist(&c.at(r.entries[i]), &center);
            assert!((du - r.ball_radius).abs() < 1e-9);
            assert!(p.contains(r.entries[i]));
        }
        for &v in &r.exits {
            assert!(p.contains(v));
        }
    }

    #[test]
    fn jordan_without_required_times() {
        let c = generate(&CurveSpec::Ellipse { a: 2.0, b: 1.0, samples: 1024 }).unwrap();
        let out = jordan_interpolate(&c, 0.2, &[]).unwrap();
        assert_eq!(out.report.tau, 0.5);
        assert!(is_simple(&out.polyline).ok);
        assert!(out.partition().mesh() < 0.2);
    }

    #[test]
    fn jordan_square() {
        let c = generate(&CurveSpec::RegularPolygon { m: 4, subdivisions: 16 }).unwrap();
        let out = jordan_interpolate(&c, 0.5, &[0.5]).unwrap();
        assert!(is_simple(&out.polyline).ok);
        assert!(out.partition().contains(0.5));
        // every node lies on the square boundary
        for p in out.polyline.nodes() {
            let on_edge = (0..4).any(|k| {
                let a = c.points()[16 * k].xy();
                let b = c.points()[16 * (k + 1)].xy();
                let cross = (b[0] - a[0]) * (p.y() - a[1]) - (b[1] - a[1]) * (p.x() - a[0]);
                cross.abs() < 1e-12
            });
            assert!(on_edge);
        }
    }

    #[test]
    fn jordan_rejects_bad_required_times() {
        let c = generate(&CurveSpec::Circle { samples: 64, radius: 1.0 }).unwrap();
        assert!(matches!(
            jordan_interpolate(&c, 0.1, &[0.5, 0.5]),
            Err(Error::InfeasibleRequiredPoints(_))
        ));
        assert!(matches!(jordan_interpolate(&c, 0.1, &[0.0]), Err(Error::OutOfRange(_))));
        assert!(jordan_interpolate(&line(40), 0.1, &[]).is_err());
    }

    #[test]
    fn crossing_lemma_examples() {
        let s = Space::PLANE;
        let p = |x: f64, y: f64| Point::from([x, y]);
        assert!(check_crossing_lemma(s, &p(0.0, 0.0), &p(1.0, 0.0), &p(0.5, -0.4), &p(0.5, 0.6), 1.0).unwrap());
        let r = 1.0;
        for h in [0.1, 1e-3, 1e-6] {
            let (x, y, z, w) = (p(0.0, 0.0), p(r, 0.0), p(r / 2.0, -h), p(r / 2.0, h));
            assert!(check_crossing_lemma(s, &x, &y, &z, &w, r).unwrap());
            let closest = s.dist(&x, &z).min(s.dist(&y, &w));
            assert!((closest - (0.25 + h * h).sqrt()).abs() < 1e-15);
        }
        assert!(matches!(
            check_crossing_lemma(s, &p(0.0, 0.0), &p(1.0, 0.0), &p(0.0, 1.0), &p(1.0, 1.0), 2.0),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn radial_lemma_examples() {
        let s = Space::PLANE;
        let p = |x: f64, y: f64| Point::from([x, y]);
        // chord just outside the unit ball crossing the radius to (1, 0)
        let ok = check_radial_lemma(s, &p(0.0, 0.0), 1.0, &p(1.0, 0.0), &p(0.99, 0.2), &p(0.99, -0.2), 0.5).unwrap();
        assert!(ok);
        assert!(check_radial_lemma(s, &p(0.0, 0.0), 1.0, &p(1.0, 0.0), &p(2.0, 0.2), &p(2.0, -0.2), 0.5).is_err());
    }
}
