// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixed inputs shared by the benchmarks.

use geointerp_core::{generate, jordan_interpolate, CurveSpec, PiecewiseGeodesic, Point, SampledCurve};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded perturbed circle with `samples` samples.
pub fn perturbed_circle(samples: usize) -> SampledCurve {
    generate(&CurveSpec::PerturbedCircle {
        modes: 6,
        decay: 1.5,
        seed: 7,
        samples,
    })
    .expect("perturbed circle")
}

/// Jordan interpolation of [`perturbed_circle`] at mesh `epsilon`.
pub fn interpolated(samples: usize, epsilon: f64) -> PiecewiseGeodesic {
    jordan_interpolate(&perturbed_circle(samples), epsilon, &[])
        .expect("interpolation")
        .polyline
}

/// Planar random walk of `n` steps started at the origin.
pub fn random_walk(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = [0.0, 0.0];
    let mut out = vec![Point::from(p)];
    for _ in 0..n {
        p[0] += rng.random_range(-1.0..1.0);
        p[1] += rng.random_range(-1.0..1.0);
        out.push(Point::from(p));
    }
    out
}
