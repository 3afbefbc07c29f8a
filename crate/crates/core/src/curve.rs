// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Sampled curves on `[0, 1]`.
//!
//! A [`SampledCurve`] is the ground truth the interpolation algorithms work
//! against: between consecutive samples the curve follows the minimizing
//! geodesic at constant speed. Open curves must have pairwise distinct samples;
//! closed curves repeat the first sample at the end and are otherwise distinct.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{interpolate, Point, Space, TOL};

/// Minimum number of samples accepted where moduli of continuity are estimated.
pub const MIN_SAMPLES: usize = 16;

/// Safety factor applied to grid estimates of the moduli of continuity.
pub const MODULUS_SAFETY: f64 = 0.99;

/// Times closer than this are treated as the same parameter.
pub(crate) const TIME_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    space: Space,
    times: Vec<f64>,
    points: Vec<Point>,
    closed: bool,
}

/// Grid estimates of the two moduli used by the open-curve construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuityReport {
    pub epsilon: f64,
    /// Spatial radius: `d(x_s, x_t) < delta_epsilon` implies `|t - s| < epsilon`.
    pub delta_epsilon: f64,
    /// Time radius: `|t - s| < eta_epsilon` implies `d(x_s, x_t) < delta_epsilon / 2`.
    pub eta_epsilon: f64,
    /// Largest gap between consecutive sample times the estimates were taken on.
    pub grid_resolution: f64,
}

impl SampledCurve {
    pub fn new(space: Space, times: Vec<f64>, points: Vec<Point>, closed: bool) -> Result<Self> {
        let curve = SampledCurve::path(space, times, points, closed)?;
        let n = curve.points.len();
        let distinct = if closed { &curve.points[..n - 1] } else { &curve.points[..] };
        if let Some((i, j)) = first_duplicate(distinct) {
            return Err(Error::NotSimple(format!("samples {i} and {j} coincide")));
        }
        Ok(curve)
    }

    /// Like [`SampledCurve::new`] but allows repeated points, for paths whose
    /// simplicity is irrelevant (variation and signature computations).
    pub fn path(space: Space, times: Vec<f64>, points: Vec<Point>, closed: bool) -> Result<Self> {
        if times.len() != points.len() {
            return Err(Error::InvalidCurve(format!(
                "{} times but {} points",
                times.len(),
                points.len()
            )));
        }
        let n = times.len();
        if n < 2 || (closed && n < 4) {
            return Err(Error::InvalidCurve(format!("too few samples ({n})")));
        }
        if times[0] != 0.0 || times[n - 1] != 1.0 {
            return Err(Error::InvalidCurve("times must start at 0 and end at 1".into()));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidCurve("times must be strictly increasing".into()));
        }
        for p in &points {
            space.check(p)?;
            if p.coords().iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidPoint("non-finite coordinate".into()));
            }
        }
        let radius = space.uniqueness_radius();
        for (k, w) in points.windows(2).enumerate() {
            let d = space.dist(&w[0], &w[1]);
            if d > radius + TOL {
                return Err(Error::InvalidCurve(format!(
                    "samples {k} and {} are {d} apart, beyond the uniqueness radius {radius}",
                    k + 1
                )));
            }
        }
        if closed && points[0] != points[n - 1] {
            return Err(Error::InvalidCurve(
                "closed curve must repeat its first point at the end".into(),
            ));
        }
        Ok(SampledCurve {
            space,
            times,
            points,
            closed,
        })
    }

    /// Curve with uniformly spaced sample times.
    pub fn uniform(space: Space, points: Vec<Point>, closed: bool) -> Result<Self> {
        let n = points.len();
        if n < 2 {
            return Err(Error::InvalidCurve(format!("too few samples ({n})")));
        }
        SampledCurve::new(space, uniform_times(n), points, closed)
    }

    /// Curve through planar coordinates with uniform times.
    pub fn planar(coords: &[[f64; 2]], closed: bool) -> Result<Self> {
        SampledCurve::uniform(
            Space::PLANE,
            coords.iter().map(|&c| Point::from(c)).collect(),
            closed,
        )
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Largest gap between consecutive sample times.
    pub fn grid_resolution(&self) -> f64 {
        self.times
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }

    /// Largest distance between consecutive samples.
    pub fn max_spacing(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| self.space.dist(&w[0], &w[1]))
            .fold(0.0, f64::max)
    }

    pub(crate) fn require_min_samples(&self) -> Result<()> {
        if self.len() < MIN_SAMPLES {
            return Err(Error::InvalidCurve(format!(
                "{} samples given, at least {MIN_SAMPLES} required",
                self.len()
            )));
        }
        Ok(())
    }

    /// Point at time `t`, following the geodesic between bracketing samples.
    pub fn eval(&self, t: f64) -> Result<Point> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfRange(format!("time {t} not in [0,1]")));
        }
        Ok(self.at(t))
    }

    /// Index `k` of the sample segment `[times[k], times[k+1]]` containing `t`.
    pub(crate) fn segment_index(&self, t: f64) -> usize {
        let k = self.times.partition_point(|&s| s <= t);
        k.saturating_sub(1).min(self.times.len() - 2)
    }

    pub(crate) fn at(&self, t: f64) -> Point {
        let k = self.segment_index(t);
        let (t0, t1) = (self.times[k], self.times[k + 1]);
        if t <= t0 {
            return self.points[k].clone();
        }
        if t >= t1 {
            return self.points[k + 1].clone();
        }
        let lambda = (t - t0) / (t1 - t0);
        let (a, b) = (&self.points[k], &self.points[k + 1]);
        interpolate(self.space, a, b, self.space.dist(a, b), lambda)
    }

    /// `delta_epsilon` with `d(x_s, x_t) < delta_epsilon => |t - s| < epsilon`,
    /// estimated on the sample grid with safety factor [`MODULUS_SAFETY`] and
    /// capped below the uniqueness radius.
    pub fn inverse_modulus(&self, epsilon: f64) -> Result<f64> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::OutOfRange(format!("epsilon {epsilon} not in (0,1)")));
        }
        if self.closed {
            return Err(Error::NotSimple(
                "inverse map of a closed curve is not continuous at the basepoint".into(),
            ));
        }
        self.require_min_samples()?;
        separation_radius(self.space, &self.times, &self.points, epsilon)
    }

    /// `eta` with `|t - s| < eta => d(x_s, x_t) < delta / 2`, estimated on the
    /// sample grid with safety factor [`MODULUS_SAFETY`].
    pub fn modulus(&self, delta: f64) -> Result<f64> {
        if !(delta > 0.0) {
            return Err(Error::OutOfRange(format!("delta {delta} must be positive")));
        }
        Ok(time_modulus(self.space, &self.times, &self.points, delta))
    }

    pub fn continuity_report(&self, epsilon: f64) -> Result<ContinuityReport> {
        let delta_epsilon = self.inverse_modulus(epsilon)?;
        let eta_epsilon = self.modulus(delta_epsilon)?;
        Ok(ContinuityReport {
            epsilon,
            delta_epsilon,
            eta_epsilon,
            grid_resolution: self.grid_resolution(),
        })
    }

    /// Closed curve traversed from `x(tau)` once around, time-shifted back to `[0, 1]`.
    pub fn rotate_basepoint(&self, tau: f64) -> Result<SampledCurve> {
        if !self.closed {
            return Err(Error::InvalidCurve("basepoint rotation needs a closed curve".into()));
        }
        if !(tau > 0.0 && tau < 1.0) {
            return Err(Error::OutOfRange(format!("tau {tau} not in (0,1)")));
        }
        let n = self.len();
        let tau = self.snap(tau);
        let start = self.at(tau);
        let mut times = vec![0.0];
        let mut points = vec![start.clone()];
        for k in 1..n {
            if self.times[k] > tau + TIME_TOL {
                times.push(self.times[k] - tau);
                points.push(self.points[k].clone());
            }
        }
        for k in 1..n - 1 {
            if self.times[k] < tau - TIME_TOL {
                times.push(self.times[k] + (1.0 - tau));
                points.push(self.points[k].clone());
            }
        }
        times.push(1.0);
        points.push(start);
        SampledCurve::new(self.space, times, points, true)
    }

    /// Sub-arc on `[s, t]`, reparametrized affinely to `[0, 1]`.
    pub fn restrict(&self, s: f64, t: f64) -> Result<SampledCurve> {
        if !(0.0 <= s && s < t && t <= 1.0) {
            return Err(Error::OutOfRange(format!("need 0 <= s < t <= 1, got [{s}, {t}]")));
        }
        if s == 0.0 && t == 1.0 {
            return Ok(self.clone());
        }
        let (times, points) = self.window(s, t);
        let span = t - s;
        let n = times.len();
        let mut times: Vec<f64> = times.iter().map(|&x| (x - s) / span).collect();
        times[0] = 0.0;
        times[n - 1] = 1.0;
        SampledCurve::new(self.space, times, points, false)
    }

    /// Samples of the arc on `[s, t]` in original time units, including the
    /// (possibly interpolated) endpoints.
    pub(crate) fn window(&self, s: f64, t: f64) -> (Vec<f64>, Vec<Point>) {
        let mut times = vec![s];
        let mut points = vec![self.at(s)];
        let lo = self.times.partition_point(|&x| x <= s + TIME_TOL);
        for k in lo..self.len() {
            if self.times[k] >= t - TIME_TOL {
                break;
            }
            times.push(self.times[k]);
            points.push(self.points[k].clone());
        }
        times.push(t);
        points.push(self.at(t));
        (times, points)
    }

    pub fn reverse(&self) -> SampledCurve {
        let n = self.len();
        let mut times: Vec<f64> = self.times.iter().rev().map(|&t| 1.0 - t).collect();
        times[0] = 0.0;
        times[n - 1] = 1.0;
        SampledCurve {
            space: self.space,
            times,
            points: self.points.iter().rev().cloned().collect(),
            closed: self.closed,
        }
    }

    /// The curve `s -> x(r(s))` for a strictly increasing bijection `r` of
    /// `[0, 1]`. Samples sit at `r^{-1}` of every original sample time plus a
    /// uniform grid of `extra` interior times, so the image polyline is
    /// unchanged (segments are only subdivided).
    pub fn time_change<F: Fn(f64) -> f64>(&self, r: F, extra: usize) -> Result<SampledCurve> {
        if (r(0.0)).abs() > TIME_TOL || (r(1.0) - 1.0).abs() > TIME_TOL {
            return Err(Error::OutOfRange("time change must fix 0 and 1".into()));
        }
        let n = self.len();
        // (new time, source: Ok(sample index) | Err(original time))
        let mut entries: Vec<(f64, std::result::Result<usize, f64>)> = Vec::with_capacity(n + extra);
        entries.push((0.0, Ok(0)));
        for k in 1..n - 1 {
            entries.push((invert_monotone(&r, self.times[k]), Ok(k)));
        }
        entries.push((1.0, Ok(n - 1)));
        for j in 1..=extra {
            let s = j as f64 / (extra + 1) as f64;
            entries.push((s, Err(r(s))));
        }
        entries.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.is_err().cmp(&b.1.is_err())));
        let mut times: Vec<f64> = Vec::with_capacity(entries.len());
        let mut points = Vec::with_capacity(entries.len());
        for (s, src) in entries {
            if let Some(&last) = times.last() {
                if s - last <= TIME_TOL {
                    continue;
                }
            }
            let p = match src {
                Ok(k) => self.points[k].clone(),
                Err(t) => self.at(t.clamp(0.0, 1.0)),
            };
            times.push(s);
            points.push(p);
        }
        if let Some(last) = times.last_mut() {
            if *last != 1.0 {
                // the final entry is always the original endpoint at s = 1
                *last = 1.0;
            }
        }
        SampledCurve::path(self.space, times, points, self.closed)
    }

    /// The same curve shifted by `offset` (Euclidean only).
    pub fn translate(&self, offset: &[f64]) -> Result<SampledCurve> {
        if !self.space.is_euclidean() {
            return Err(Error::Unsupported("translation of sphere curves".into()));
        }
        if offset.len() != self.space.dim() {
            return Err(Error::InvalidPoint("offset dimension mismatch".into()));
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                let c: Vec<f64> = p.coords().iter().zip(offset).map(|(a, b)| a + b).collect();
                Point::raw(&c)
            })
            .collect();
        SampledCurve::path(self.space, self.times.clone(), points, self.closed)
    }

    /// Snaps `t` onto a sample time if it is within [`TIME_TOL`] of one.
    pub(crate) fn snap(&self, t: f64) -> f64 {
        let k = self.times.partition_point(|&s| s < t);
        for j in [k.wrapping_sub(1), k] {
            if let Some(&s) = self.times.get(j) {
                if (s - t).abs() <= TIME_TOL {
                    return s;
                }
            }
        }
        t
    }
}

pub(crate) fn uniform_times(n: usize) -> Vec<f64> {
    let mut times: Vec<f64> = (0..n).map(|j| j as f64 / (n - 1) as f64).collect();
    times[n - 1] = 1.0;
    times
}

/// Grid estimate of `delta_epsilon` over the given samples (one arc, no wrap).
/// Returns `+inf` (capped by the uniqueness radius) when no pair of samples is
/// at least `epsilon` apart in time.
pub(crate) fn separation_radius(
    space: Space,
    times: &[f64],
    points: &[Point],
    epsilon: f64,
) -> Result<f64> {
    let n = times.len();
    let mut best = f64::INFINITY;
    let mut j0 = 0;
    for i in 0..n {
        while j0 < n && times[j0] - times[i] < epsilon - TIME_TOL {
            j0 += 1;
        }
        for q in &points[j0..] {
            let d = space.dist(&points[i], q);
            if d < best {
                best = d;
            }
        }
    }
    if best == 0.0 {
        return Err(Error::NotSimple(
            "two samples far apart in time coincide in space".into(),
        ));
    }
    let delta = MODULUS_SAFETY * best;
    let radius = space.uniqueness_radius();
    Ok(if radius.is_finite() {
        delta.min(MODULUS_SAFETY * radius)
    } else {
        delta
    })
}

pub(crate) fn time_modulus(space: Space, times: &[f64], points: &[Point], delta: f64) -> f64 {
    let n = times.len();
    let half = delta / 2.0;
    let mut eta = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let gap = times[j] - times[i];
            if gap >= eta {
                break;
            }
            if space.dist(&points[i], &points[j]) >= half {
                eta = gap;
                break;
            }
        }
    }
    MODULUS_SAFETY * eta.min(1.0)
}

fn invert_monotone<F: Fn(f64) -> f64>(r: &F, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if r(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn first_duplicate(points: &[Point]) -> Option<(usize, usize)> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    let cmp = |a: &Point, b: &Point| -> Ordering {
        a.coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    };
    idx.sort_by(|&i, &j| cmp(&points[i], &points[j]));
    idx.windows(2)
        .find(|w| points[w[0]] == points[w[1]])
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn line(n: usize) -> SampledCurve {
        let pts: Vec<[f64; 2]> = (0..n).map(|j| [j as f64 / (n - 1) as f64, 0.0]).collect();
        SampledCurve::planar(&pts, false).unwrap()
    }

    fn circle(m: usize) -> SampledCurve {
        let mut pts: Vec<[f64; 2]> = (0..m)
            .map(|j| {
                let a = 2.0 * PI * j as f64 / m as f64;
                [a.cos(), a.sin()]
            })
            .collect();
        pts.push(pts[0]);
        SampledCurve::planar(&pts, true).unwrap()
    }

    fn quarter_arc(n: usize) -> SampledCurve {
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|j| {
                let a = PI / 2.0 * j as f64 / (n - 1) as f64;
                [a.cos(), a.sin()]
            })
            .collect();
        SampledCurve::planar(&pts, false).unwrap()
    }

    /// Brute force over all sample pairs, no pruning.
    fn delta_oracle(c: &SampledCurve, eps: f64) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..c.len() {
            for j in 0..c.len() {
                if (c.times()[i] - c.times()[j]).abs() >= eps - 1e-12 {
                    best = best.min(c.space().dist(&c.points()[i], &c.points()[j]));
                }
            }
        }
        0.99 * best
    }

    fn eta_oracle(c: &SampledCurve, delta: f64) -> f64 {
        let mut best: f64 = 1.0;
        for i in 0..c.len() {
            for j in 0..c.len() {
                if c.space().dist(&c.points()[i], &c.points()[j]) >= delta / 2.0 {
                    best = best.min((c.times()[i] - c.times()[j]).abs());
                }
            }
        }
        0.99 * best
    }

    #[test]
    fn eval_examples() {
        let c = SampledCurve::new(
            Space::PLANE,
            vec![0.0, 1.0],
            vec![[0.0, 0.0].into(), [1.0, 0.0].into()],
            false,
        )
        .unwrap();
        assert_eq!(c.eval(0.5).unwrap().coords(), &[0.5, 0.0]);
        let circ = circle(4096);
        for k in [0, 17, 1024, 4095, 4096] {
            assert_eq!(circ.eval(circ.times()[k]).unwrap(), circ.points()[k]);
        }
        let q = circ.eval(0.25).unwrap();
        assert!(q.x().abs() < 1e-5 && (q.y() - 1.0).abs() < 1e-5);
        assert!(matches!(circ.eval(1.1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn construction_rejects_bad_input() {
        let p: Vec<Point> = vec![[0.0, 0.0].into(), [1.0, 0.0].into(), [0.0, 0.0].into()];
        assert!(matches!(
            SampledCurve::uniform(Space::PLANE, p, false),
            Err(Error::NotSimple(_))
        ));
        assert!(SampledCurve::new(
            Space::PLANE,
            vec![0.0, 0.5, 0.5, 1.0],
            vec![[0.0, 0.0].into(), [1.0, 0.0].into(), [2.0, 0.0].into(), [3.0, 0.0].into()],
            false
        )
        .is_err());
        let sq = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.0, 0.5]];
        assert!(SampledCurve::planar(&sq, true).is_err());
    }

    #[test]
    fn inverse_modulus_examples() {
        let l = line(101);
        let d = l.inverse_modulus(0.3).unwrap();
        assert!((d - 0.297).abs() < 1e-12, "{d}");
        assert!((d - delta_oracle(&l, 0.3)).abs() < 1e-15);

        let q = quarter_arc(257);
        let d = q.inverse_modulus(0.25).unwrap();
        let expect = 0.99 * 2.0 * (PI * 0.25 / 4.0).sin();
        assert!((d - expect).abs() < 1e-12, "{d} vs {expect}");
        assert_eq!(d, delta_oracle(&q, 0.25));

        let gap = q.grid_resolution();
        let d = q.inverse_modulus(1.0 - gap).unwrap();
        assert!(d <= 0.99 * q.space().dist(&q.points()[0], &q.points()[256]) + 1e-15);

        assert!(matches!(l.inverse_modulus(1.0), Err(Error::OutOfRange(_))));
        assert!(matches!(l.inverse_modulus(0.0), Err(Error::OutOfRange(_))));
        assert!(circle(64).inverse_modulus(0.1).is_err());
    }

    #[test]
    fn modulus_examples() {
        let l = line(101);
        let eta = l.modulus(0.2).unwrap();
        assert!((eta - 0.099).abs() < 1e-12, "{eta}");
        assert_eq!(eta, eta_oracle(&l, 0.2));
        assert_eq!(l.modulus(10.0).unwrap(), 0.99);

        let c = circle(4096);
        let eta = c.modulus(0.1).unwrap();
        let analytic = 0.99 * 0.025f64.asin() / PI;
        assert!((eta - analytic).abs() <= 0.99 / 4096.0, "{eta} vs {analytic}");
        assert!(matches!(l.modulus(0.0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn moduli_match_oracles_and_are_monotone() {
        let q = quarter_arc(129);
        let mut prev = 0.0;
        for eps in [0.05, 0.1, 0.2, 0.4, 0.8] {
            let d = q.inverse_modulus(eps).unwrap();
            assert_eq!(d, delta_oracle(&q, eps));
            assert!(d >= prev);
            prev = d;
        }
        let c = circle(256);
        let mut prev = 0.0;
        for delta in [0.01, 0.05, 0.2, 0.7, 1.5] {
            let eta = c.modulus(delta).unwrap();
            assert_eq!(eta, eta_oracle(&c, delta));
            assert!(eta >= prev);
            prev = eta;
        }
    }

    #[test]
    fn moduli_contracts_hold_on_grid() {
        let q = quarter_arc(200);
        let r = q.continuity_report(0.2).unwrap();
        for i in 0..q.len() {
            for j in 0..q.len() {
                let d = q.space().dist(&q.points()[i], &q.points()[j]);
                let dt = (q.times()[i] - q.times()[j]).abs();
                if d < r.delta_epsilon {
                    assert!(dt < 0.2);
                }
                if dt < r.eta_epsilon {
                    assert!(d < r.delta_epsilon / 2.0);
                }
            }
        }
    }

    #[test]
    fn rotate_basepoint_examples() {
        let sq = SampledCurve::planar(
            &[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.0, 0.0]],
            true,
        )
        .unwrap();
        let r = sq.rotate_basepoint(0.25).unwrap();
        assert_eq!(r.points()[0].coords(), &[1.0, 0.0]);
        let got: Vec<&[f64]> = r.points().iter().map(|p| p.coords()).collect();
        assert_eq!(
            got,
            vec![&[1.0, 0.0][..], &[1.0, 1.0], &[0.0, 1.0], &[0.0, 0.0], &[1.0, 0.0]]
        );
        assert_eq!(r.times(), &[0.0, 0.25, 0.5, 0.75, 1.0]);

        let c = circle(64);
        let tau = c.times()[10];
        let back = c.rotate_basepoint(tau).unwrap().rotate_basepoint(1.0 - tau).unwrap();
        assert_eq!(back.len(), c.len());
        for (a, b) in back.times().iter().zip(c.times()) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(back.points(), c.points());

        // off-grid tau: same curve as a function of time
        let back = c.rotate_basepoint(0.3).unwrap().rotate_basepoint(0.7).unwrap();
        for j in 0..=200 {
            let t = j as f64 / 200.0;
            assert!(c.space().dist(&back.at(t), &c.at(t)) < 1e-12);
        }
        assert!(c.rotate_basepoint(0.0).is_err());
        assert!(line(20).rotate_basepoint(0.5).is_err());
    }

    #[test]
    fn restrict_and_reverse() {
        let c = circle(256);
        assert_eq!(c.restrict(0.0, 1.0).unwrap(), c);
        let upper = c.restrict(0.0, 0.5).unwrap();
        assert!(!upper.is_closed());
        for j in 0..=100 {
            let t = j as f64 / 100.0;
            let p = upper.at(t);
            let a = PI * t;
            // chord sagitta of the 256-gon bounds the deviation
            assert!(((p.x() - a.cos()).powi(2) + (p.y() - a.sin()).powi(2)).sqrt() < 1e-3);
            assert!(p.y() >= -1e-15);
        }
        let rr = c.reverse().reverse();
        assert_eq!(rr.points(), c.points());
        for (a, b) in rr.times().iter().zip(c.times()) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(matches!(c.restrict(0.5, 0.5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn time_change_keeps_image() {
        let c = circle(128);
        let r = c.time_change(|t| t * t, 100).unwrap();
        assert!(r.is_closed());
        assert!(r.len() > c.len());
        for (s, p) in r.times().iter().zip(r.points()) {
            assert!(c.space().dist(p, &c.at(s * s)) < 1e-12);
        }
    }
}
