// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! p-variation of sampled paths, Young integrals and the related bounds.
//!
//! p-variation is maximized over partitions made of sample vertices. For
//! piecewise-linear paths that is the true supremum, since splitting a straight
//! step never increases a sum of p-th powers when `p >= 1`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use nalgebra::DMatrix;

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::geometry::{Point, Space};
use crate::polyline::{Partition, PiecewiseGeodesic};

#[derive(Debug, Clone, PartialEq)]
pub struct PVarResult {
    pub value: f64,
    /// Sample indices of a maximizing partition, including both ends.
    pub optimal_partition: Vec<usize>,
    pub p: f64,
}

/// p-variation of `path` under the Euclidean metric.
pub fn p_variation(path: &[Point], p: f64) -> Result<PVarResult> {
    p_variation_in(Space::Euclidean(path.first().map_or(1, Point::dim)), path, p)
}

/// p-variation of `path` under the metric of `space`.
///
/// Exact over vertex partitions: `best[j]` is the largest sum of p-th powers
/// over chains `0 = i_0 < ... < i_m = j`, filled in `O(n^2)`.
pub fn p_variation_in(space: Space, path: &[Point], p: f64) -> Result<PVarResult> {
    if !(p >= 1.0) {
        return Err(Error::OutOfRange(format!("p = {p} must be at least 1")));
    }
    let n = path.len();
    if n < 2 {
        return Err(Error::InvalidCurve("p-variation needs at least two points".into()));
    }
    let mut best = vec![0.0f64; n];
    let mut prev = vec![0usize; n];
    for j in 1..n {
        let mut b = f64::NEG_INFINITY;
        let mut arg = 0;
        for i in 0..j {
            let cand = best[i] + space.dist(&path[i], &path[j]).powf(p);
            if cand > b {
                b = cand;
                arg = i;
            }
        }
        best[j] = b;
        prev[j] = arg;
    }
    let mut optimal_partition = vec![n - 1];
    let mut j = n - 1;
    while j > 0 {
        j = prev[j];
        optimal_partition.push(j);
    }
    optimal_partition.reverse();
    Ok(PVarResult {
        value: best[n - 1].powf(1.0 / p),
        optimal_partition,
        p,
    })
}

/// `int_0^1 gamma (x) d gamma_tilde` with its refinement check.
#[derive(Debug, Clone, PartialEq)]
pub struct YoungResult {
    /// `value[i][j] = int gamma^i d gamma_tilde^j` (0-based components).
    pub value: Vec<Vec<f64>>,
    pub refinement_levels: usize,
    pub residual: f64,
}

fn merged_times(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut t: Vec<f64> = a.iter().chain(b).copied().collect();
    t.sort_by(f64::total_cmp);
    t.dedup();
    t
}

fn dyadic(times: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * times.len());
    for w in times.windows(2) {
        out.push(w[0]);
        out.push(0.5 * (w[0] + w[1]));
    }
    out.push(times[times.len() - 1]);
    out
}

/// Running integral at every grid time; exact for paths affine on each cell.
fn running_integral(gamma: &SampledCurve, tilde: &SampledCurve, grid: &[f64]) -> Vec<Vec<f64>> {
    let (d, e) = (gamma.space().dim(), tilde.space().dim());
    let mut acc = vec![0.0; d * e];
    let mut out = vec![acc.clone()];
    let mut g0 = gamma.at(grid[0]);
    let mut h0 = tilde.at(grid[0]);
    for &t in &grid[1..] {
        let (g1, h1) = (gamma.at(t), tilde.at(t));
        for i in 0..d {
            let mid = 0.5 * (g0.coords()[i] + g1.coords()[i]);
            for j in 0..e {
                acc[i * e + j] += mid * (h1.coords()[j] - h0.coords()[j]);
            }
        }
        out.push(acc.clone());
        g0 = g1;
        h0 = h1;
    }
    out
}

fn require_euclidean(c: &SampledCurve) -> Result<()> {
    if !c.space().is_euclidean() {
        return Err(Error::Unsupported("Young integrals of sphere curves".into()));
    }
    Ok(())
}

/// Young integral of two sampled Euclidean paths.
///
/// Both paths are affine between merged sample times, so the per-cell term
/// `midpoint (x) increment` is exact. One dyadic refinement is evaluated as a
/// sanity check and must agree within `tol`.
pub fn young_integral(gamma: &SampledCurve, gamma_tilde: &SampledCurve, tol: f64) -> Result<YoungResult> {
    require_euclidean(gamma)?;
    require_euclidean(gamma_tilde)?;
    let grid = merged_times(gamma.times(), gamma_tilde.times());
    let coarse = running_integral(gamma, gamma_tilde, &grid);
    let fine = running_integral(gamma, gamma_tilde, &dyadic(&grid));
    let (a, b) = (coarse.last().unwrap(), fine.last().unwrap());
    let residual = a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    if !(residual < tol) {
        return Err(Error::NoConvergence { residual });
    }
    let e = gamma_tilde.space().dim();
    Ok(YoungResult {
        value: a.chunks(e).map(<[f64]>::to_vec).collect(),
        refinement_levels: 1,
        residual,
    })
}

/// Young integral of two polylines on `[0, 1]`, such as interpolations.
pub fn young_integral_polylines(a: &PiecewiseGeodesic, b: &PiecewiseGeodesic, tol: f64) -> Result<YoungResult> {
    let ca = polyline_as_curve(a)?;
    let cb = polyline_as_curve(b)?;
    young_integral(&ca, &cb, tol)
}

fn polyline_as_curve(pg: &PiecewiseGeodesic) -> Result<SampledCurve> {
    SampledCurve::path(pg.space(), pg.times().to_vec(), pg.nodes().to_vec(), pg.is_closed())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

/// Checks `||int_0^. gamma (x) d gamma_tilde||_q <= 2 zeta(1/p + 1/q) ||gamma||_p ||gamma_tilde||_q`.
///
/// The bound controls the integral through the p-variation seminorm of
/// `gamma`, so it presumes `gamma` starts at the origin.
pub fn young_bound_check(gamma: &SampledCurve, gamma_tilde: &SampledCurve, p: f64, q: f64) -> Result<BoundCheck> {
    if !(p >= 1.0 && q >= 1.0) {
        return Err(Error::OutOfRange("p and q must be at least 1".into()));
    }
    let theta = 1.0 / p + 1.0 / q;
    if !(theta > 1.0) {
        return Err(Error::HypothesisNotMet(format!("1/p + 1/q = {theta} is not above 1")));
    }
    require_euclidean(gamma)?;
    require_euclidean(gamma_tilde)?;
    let grid = dyadic(&merged_times(gamma.times(), gamma_tilde.times()));
    let running: Vec<Point> = running_integral(gamma, gamma_tilde, &grid)
        .iter()
        .map(|v| Point::raw(v))
        .collect();
    let lhs = p_variation(&running, q)?.value;
    let norm_p = p_variation_in(gamma.space(), gamma.points(), p)?.value;
    let norm_q = p_variation_in(gamma_tilde.space(), gamma_tilde.points(), q)?.value;
    let rhs = 2.0 * zeta(theta)? * norm_p * norm_q;
    Ok(BoundCheck {
        holds: lhs <= rhs * (1.0 + 1e-12),
        lhs,
        rhs,
    })
}

/// Terms summed directly before the Euler–Maclaurin tail takes over.
const ZETA_TERMS: u32 = 1_000_000;

/// Riemann zeta function for real `s > 1`, accurate to about `1e-13`.
///
/// Sums `n^-s` for `n < N` with compensated summation from the small end, then
/// adds the Euler–Maclaurin tail at `N`. Results are cached per `s`.
pub fn zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::OutOfRange(format!("zeta needs s > 1, got {s}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<u64, f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&z) = cache.lock().unwrap().get(&s.to_bits()) {
        return Ok(z);
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for n in (1..ZETA_TERMS).rev() {
        let y = (n as f64).powf(-s) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let big_n = ZETA_TERMS as f64;
    let f = big_n.powf(-s);
    let tail = big_n.powf(1.0 - s) / (s - 1.0) + f / 2.0 + s * f / (12.0 * big_n)
        - s * (s + 1.0) * (s + 2.0) * f / (720.0 * big_n.powi(3));
    let z = sum + tail;
    cache.lock().unwrap().insert(s.to_bits(), z);
    Ok(z)
}

/// Maps with a certified Lipschitz constant.
#[derive(Debug, Clone, PartialEq)]
pub enum LipschitzMap {
    /// `x -> matrix * x + offset`, with `matrix` given row by row.
    Affine { matrix: Vec<Vec<f64>>, offset: Vec<f64> },
    /// Componentwise `x_i -> P(clamp(x_i, -bound, bound))`, `P(x) = sum_k coeffs[k] x^k`.
    ClampedPolynomial { coeffs: Vec<f64>, bound: f64 },
}

impl LipschitzMap {
    pub fn identity(d: usize) -> Self {
        LipschitzMap::scaling(d, 1.0)
    }

    pub fn scaling(d: usize, factor: f64) -> Self {
        let matrix = (0..d)
            .map(|i| (0..d).map(|j| if i == j { factor } else { 0.0 }).collect())
            .collect();
        LipschitzMap::Affine {
            matrix,
            offset: vec![0.0; d],
        }
    }

    /// A Lipschitz constant: the spectral norm for affine maps, and
    /// `sum_k k |c_k| bound^(k-1)` (a bound on `|P'|`) for clamped polynomials.
    pub fn constant(&self) -> f64 {
        match self {
            LipschitzMap::Affine { matrix, .. } => {
                let rows = matrix.len();
                let cols = matrix.first().map_or(0, Vec::len);
                if rows == 0 || cols == 0 {
                    return 0.0;
                }
                let m = DMatrix::from_fn(rows, cols, |i, j| matrix[i][j]);
                m.singular_values().max()
            }
            LipschitzMap::ClampedPolynomial { coeffs, bound } => coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c.abs() * bound.powi(k as i32 - 1))
                .sum(),
        }
    }

    pub fn apply(&self, x: &Point) -> Point {
        match self {
            LipschitzMap::Affine { matrix, offset } => Point::raw(
                &matrix
                    .iter()
                    .zip(offset)
                    .map(|(row, o)| row.iter().zip(x.coords()).map(|(a, b)| a * b).sum::<f64>() + o)
                    .collect::<Vec<_>>(),
            ),
            LipschitzMap::ClampedPolynomial { coeffs, bound } => Point::raw(
                &x.coords()
                    .iter()
                    .map(|&v| {
                        let v = v.clamp(-bound, *bound);
                        coeffs.iter().rev().fold(0.0, |acc, c| acc * v + c)
                    })
                    .collect::<Vec<_>>(),
            ),
        }
    }
}

/// Checks `||f(gamma)||_p <= C ||gamma||_p` on the sample grid.
pub fn lipschitz_pvar_check(f: &LipschitzMap, gamma: &[Point], p: f64) -> Result<BoundCheck> {
    let image: Vec<Point> = gamma.iter().map(|x| f.apply(x)).collect();
    let lhs = p_variation(&image, p)?.value;
    let rhs = f.constant() * p_variation(gamma, p)?.value;
    Ok(BoundCheck {
        holds: lhs <= rhs * (1.0 + 1e-12),
        lhs,
        rhs,
    })
}

/// `||f(gamma) - f(gamma^P)||_q` for each partition, evaluated on the union of
/// the sample grid and the partition times.
pub fn interpolation_convergence_check(
    f: &LipschitzMap,
    gamma: &SampledCurve,
    q: f64,
    partitions: &[Partition],
) -> Result<Vec<f64>> {
    require_euclidean(gamma)?;
    partitions
        .iter()
        .map(|part| {
            let interp = PiecewiseGeodesic::interpolating(gamma, part.clone())?;
            let grid = merged_times(gamma.times(), part.times());
            let diff: Vec<Point> = grid
                .iter()
                .map(|&t| {
                    let a = f.apply(&gamma.at(t));
                    let b = f.apply(&interp.eval(t)?);
                    Ok(Point::raw(
                        &a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect::<Vec<_>>(),
                    ))
                })
                .collect::<Result<_>>()?;
            Ok(p_variation(&diff, q)?.value)
        })
        .collect()
}

/// Uniform partition with `ceil(1 / mesh)` cells.
pub fn uniform_partition_with_mesh(mesh: f64) -> Result<Partition> {
    if !(mesh > 0.0 && mesh <= 1.0) {
        return Err(Error::OutOfRange(format!("mesh {mesh} not in (0,1]")));
    }
    Ok(Partition::uniform((1.0 / mesh - 1e-9).ceil() as usize))
}
