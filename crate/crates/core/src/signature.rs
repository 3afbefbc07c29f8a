// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated signatures of piecewise-linear paths.
//!
//! A straight segment with increment `v` has signature `exp(v)`, whose level
//! `k` is `v^{(x)k} / k!`. A polyline's signature is the ordered Chen product of
//! its segment exponentials.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::polyline::{Partition, PiecewiseGeodesic};

pub const DEFAULT_LEVEL: usize = 6;

/// A multi-index of letters in `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `k + 1` ones followed by `n + 1` twos.
    pub fn ones_then_twos(k: usize, n: usize) -> Self {
        Word(std::iter::repeat_n(1, k + 1).chain(std::iter::repeat_n(2, n + 1)).collect())
    }

    /// All words of length `len` over `d` letters, in lexicographic order.
    pub fn all(d: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=d).map(move |a| {
                        let mut v = w.0.clone();
                        v.push(a);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses comma-separated letters such as `1,2,2`. An empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidWord(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of the tensor algebra over `R^d` truncated above level `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedTensor {
    dim: usize,
    levels: Vec<Vec<f64>>,
}

impl TruncatedTensor {
    /// The unit: 1 at level 0 and zero elsewhere.
    pub fn identity(dim: usize, level: usize) -> Self {
        let mut levels: Vec<Vec<f64>> = (0..=level).map(|k| vec![0.0; dim.pow(k as u32)]).collect();
        levels[0][0] = 1.0;
        TruncatedTensor { dim, levels }
    }

    /// Builds a tensor from per-level coefficient vectors; level `k` must hold `d^k` entries.
    pub fn from_levels(dim: usize, levels: Vec<Vec<f64>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::ShapeError("a tensor needs level 0".into()));
        }
        for (k, l) in levels.iter().enumerate() {
            if l.len() != dim.pow(k as u32) {
                return Err(Error::ShapeError(format!(
                    "level {k} has {} entries, expected {}",
                    l.len(),
                    dim.pow(k as u32)
                )));
            }
        }
        Ok(TruncatedTensor { dim, levels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Truncation level `N`.
    pub fn level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Vec<f64>] {
        &self.levels
    }

    fn index(&self, w: &Word) -> Result<usize> {
        if w.len() > self.level() {
            return Err(Error::TruncationTooSmall {
                have: self.level(),
                need: w.len(),
            });
        }
        w.0.iter().try_fold(0usize, |acc, &a| {
            if a == 0 || a > self.dim {
                Err(Error::InvalidWord(format!("letter {a} not in 1..={}", self.dim)))
            } else {
                Ok(acc * self.dim + a - 1)
            }
        })
    }

    /// Coefficient of the word `w` (the pairing with the dual basis element).
    pub fn coeff(&self, w: &Word) -> Result<f64> {
        let i = self.index(w)?;
        Ok(self.levels[w.len()][i])
    }

    /// Largest coefficient difference over all levels.
    pub fn max_abs_diff(&self, other: &TruncatedTensor) -> Result<f64> {
        self.check_shape(other)?;
        Ok(self
            .levels
            .iter()
            .flatten()
            .zip(other.levels.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    fn check_shape(&self, other: &TruncatedTensor) -> Result<()> {
        if self.dim != other.dim || self.level() != other.level() {
            return Err(Error::ShapeError(format!(
                "(d={}, N={}) vs (d={}, N={})",
                self.dim,
                self.level(),
                other.dim,
                other.level()
            )));
        }
        Ok(())
    }
}

/// `exp(v)` truncated at level `n`.
pub fn segment_signature(increment: &[f64], n: usize) -> TruncatedTensor {
    let d = increment.len();
    let mut levels = vec![vec![1.0]];
    for k in 1..=n {
        let prev = &levels[k - 1];
        let mut next = Vec::with_capacity(prev.len() * d);
        for &a in prev {
            next.extend(increment.iter().map(|&v| a * v / k as f64));
        }
        levels.push(next);
    }
    TruncatedTensor { dim: d, levels }
}

/// Truncated tensor product: level `n` of the result is `sum_{i+j=n} a_i (x) b_j`.
pub fn chen_product(a: &TruncatedTensor, b: &TruncatedTensor) -> Result<TruncatedTensor> {
    a.check_shape(b)?;
    let mut out = TruncatedTensor::identity(a.dim, a.level());
    out.levels[0][0] = 0.0;
    for n in 0..=a.level() {
        let target = &mut out.levels[n];
        for i in 0..=n {
            let (la, lb) = (&a.levels[i], &b.levels[n - i]);
            let width = lb.len();
            for (ia, &x) in la.iter().enumerate() {
                if x == 0.0 {
                    continue;
                }
                let row = &mut target[ia * width..(ia + 1) * width];
                for (t, &y) in row.iter_mut().zip(lb) {
                    *t += x * y;
                }
            }
        }
    }
    Ok(out)
}

/// Signature of a Euclidean polyline truncated at level `n`.
pub fn path_signature(polyline: &PiecewiseGeodesic, n: usize) -> Result<TruncatedTensor> {
    if !polyline.space().is_euclidean() {
        return Err(Error::Unsupported("signatures of sphere curves".into()));
    }
    points_signature(polyline.nodes(), n)
}

/// Signature of the polyline through `points`.
pub fn points_signature(points: &[Point], n: usize) -> Result<TruncatedTensor> {
    let d = points.first().map_or(2, Point::dim);
    let mut sig = TruncatedTensor::identity(d, n);
    for w in points.windows(2) {
        let inc: Vec<f64> = w[1].coords().iter().zip(w[0].coords()).map(|(b, a)| b - a).collect();
        sig = chen_product(&sig, &segment_signature(&inc, n))?;
    }
    Ok(sig)
}

/// Coefficient of `k + 1` ones followed by `n + 1` twos. For a positively
/// oriented planar Jordan polygon with basepoint `(x0, y1)` it equals
/// `(1 / (k! n!)) * int int_interior (x - x0)^k (y1 - y)^n dx dy`.
pub fn area_moment_coefficient(sig: &TruncatedTensor, k: usize, n: usize) -> Result<f64> {
    if k + n + 2 > sig.level() {
        return Err(Error::TruncationTooSmall {
            have: sig.level(),
            need: k + n + 2,
        });
    }
    sig.coeff(&Word::ones_then_twos(k, n))
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceReport {
    /// Largest coefficient change under the random increasing time changes.
    pub time_change_deviation: f64,
    /// Largest coefficient change under the random translations.
    pub translation_deviation: f64,
    /// Distance of `S(reverse) (x) S` from the identity.
    pub reversal_deviation: f64,
}

/// A random strictly increasing piecewise-linear bijection of `[0, 1]`.
fn random_time_change(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let knots = rng.random_range(2..8);
    let mut xs: Vec<f64> = (0..knots).map(|_| rng.random::<f64>()).collect();
    let mut ys: Vec<f64> = (0..knots).map(|_| rng.random::<f64>()).collect();
    xs.extend([0.0, 1.0]);
    ys.extend([0.0, 1.0]);
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    move |t: f64| {
        let k = xs.partition_point(|&x| x <= t).clamp(1, xs.len() - 1);
        let (x0, x1, y0, y1) = (xs[k - 1], xs[k], ys[k - 1], ys[k]);
        if x1 > x0 {
            y0 + (t - x0) / (x1 - x0) * (y1 - y0)
        } else {
            y1
        }
    }
}

/// Checks time-change, translation and reversal invariances of the signature
/// of `polyline` over `cases` random trials.
pub fn check_signature_invariances(
    polyline: &PiecewiseGeodesic,
    level: usize,
    cases: usize,
    seed: u64,
) -> Result<InvarianceReport> {
    let base = path_signature(polyline, level)?;
    let curve = SampledCurve::path(
        polyline.space(),
        polyline.times().to_vec(),
        polyline.nodes().to_vec(),
        false,
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut time_change_deviation = 0.0f64;
    let mut translation_deviation = 0.0f64;
    for _ in 0..cases {
        let r = random_time_change(&mut rng);
        let extra = rng.random_range(0..2 * polyline.nodes().len());
        let changed = curve.time_change(r, extra)?;
        let sig = points_signature(changed.points(), level)?;
        time_change_deviation = time_change_deviation.max(base.max_abs_diff(&sig)?);

        let shift: Vec<f64> = (0..polyline.space().dim()).map(|_| rng.random_range(-10.0..10.0)).collect();
        let moved = curve.translate(&shift)?;
        let sig = points_signature(moved.points(), level)?;
        translation_deviation = translation_deviation.max(base.max_abs_diff(&sig)?);
    }
    let back = path_signature(&polyline.reverse(), level)?;
    let reversal_deviation = chen_product(&back, &base)?.max_abs_diff(&TruncatedTensor::identity(base.dim(), level))?;
    Ok(InvarianceReport {
        time_change_deviation,
        translation_deviation,
        reversal_deviation,
    })
}

/// Coefficient of `word` for the interpolations of `curve` on uniform
/// partitions with the given meshes, followed by the value for the full
/// sample polyline.
pub fn refinement_coefficients(curve: &SampledCurve, meshes: &[f64], word: &Word, level: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(meshes.len() + 1);
    for &m in meshes {
        let part = crate::variation::uniform_partition_with_mesh(m)?;
        let poly = PiecewiseGeodesic::interpolating(curve, part)?;
        out.push(path_signature(&poly, level)?.coeff(word)?);
    }
    let full = PiecewiseGeodesic::interpolating(curve, Partition::new(curve.times().to_vec())?)?;
    out.push(path_signature(&full, level)?.coeff(word)?);
    Ok(out)
}
