// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Simple piecewise-geodesic interpolation of simple and Jordan curves in
//! Euclidean space and on the unit sphere, with tooling for p-variation,
//! Young integrals, path signatures and polygon moments.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod green;
pub mod interpolation;
pub mod io;
pub mod poly;
pub mod polyline;
pub mod signature;
pub mod simplicity;
pub mod svg;
pub mod variation;

pub use curve::{ContinuityReport, SampledCurve};
pub use error::{Error, Result, Violation, ViolationKind};
pub use generators::{generate, open_at_vertex, CurveSpec};
pub use geometry::{distance, geodesic, geodesic_eval, GeodesicSegment, Point, Space};
pub use interpolation::{
    check_crossing_lemma, check_radial_lemma, jordan_interpolate, last_exit_time, simple_interpolate,
    JordanInterpolation, JordanStageReport, SimpleInterpolation,
};
pub use polyline::{Partition, PiecewiseGeodesic};
pub use simplicity::{is_simple, is_simple_brute_force, segments_intersect, SegmentRelation, SimplicityVerdict};
pub use variation::{
    interpolation_convergence_check, lipschitz_pvar_check, p_variation, p_variation_in, uniform_partition_with_mesh,
    young_bound_check, young_integral, young_integral_polylines, zeta, BoundCheck, LipschitzMap, PVarResult,
    YoungResult,
};
pub use signature::{
    area_moment_coefficient, chen_product, check_signature_invariances, path_signature, points_signature,
    refinement_coefficients, segment_signature, InvarianceReport, TruncatedTensor, Word, DEFAULT_LEVEL,
};
pub use green::{
    area_integral, compare_curves, greens_check, greens_check_polygon, interior_indicator, line_integral,
    moments_from_geometry, moments_from_signature, orientation_from_signature, polygon_moment, raster_area_integral,
    reparam_recover, signed_area, CompareReport, GreenReport, MomentVector, Orientation, ReparamResult,
};
pub use poly::BivariatePoly;
pub use io::{curve_from_csv, read_curve, read_polyline, write_curve, write_polyline, CurveFile, SpaceTag};
