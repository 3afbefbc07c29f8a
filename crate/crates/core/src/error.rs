// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::geometry::Point;

/// A pair of polyline segments that break simplicity, with a point where they meet.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub first: usize,
    pub second: usize,
    pub witness: Point,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Segments cross (or touch) at a point that is not a permitted shared node.
    Crossing,
    /// Collinear / co-circular segments share a stretch of positive length.
    Overlapping,
    /// Non-adjacent segments share an endpoint.
    RepeatedNode,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "segments {} and {} ({:?}) meet at {:?}",
            self.first,
            self.second,
            self.kind,
            self.witness.coords()
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("minimizing geodesic is not unique: distance {distance} exceeds radius {radius}")]
    NotUnique { distance: f64, radius: f64 },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curve is not simple: {0}")]
    NotSimple(String),
    #[error("curve is not a Jordan curve: {0}")]
    NotJordan(String),
    #[error("start point lies outside the ball (distance {distance}, radius {radius})")]
    InvalidStart { distance: f64, radius: f64 },
    #[error("interpolation stalled after {steps} steps")]
    AlgorithmStalled { steps: usize },
    #[error("construction failed: {reason}")]
    ConstructionFailed {
        reason: String,
        violation: Option<Box<Violation>>,
    },
    #[error("required partition points are infeasible: {0}")]
    InfeasibleRequiredPoints(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("segments live in different spaces")]
    SpaceMismatch,
    #[error("refinement did not converge (residual {residual})")]
    NoConvergence { residual: f64 },
    #[error("tensor shape mismatch: {0}")]
    ShapeError(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("truncation level {have} too small, need {need}")]
    TruncationTooSmall { have: usize, need: usize },
    #[error("polygon is not positively oriented (signed area {signed_area})")]
    OrientationError { signed_area: f64 },
    #[error("point lies on the polygon boundary")]
    OnBoundary,
    #[error("orientation is indeterminate (area coefficient {0})")]
    Indeterminate(f64),
    #[error("curve images differ (Hausdorff distance {distance} > tolerance {tol})")]
    ImageMismatch { distance: f64, tol: f64 },
    #[error("curve generation failed: {0}")]
    GenerationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPoint(_) => "InvalidPoint",
            Error::NotUnique { .. } => "NotUnique",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidCurve(_) => "InvalidCurve",
            Error::NotSimple(_) => "NotSimple",
            Error::NotJordan(_) => "NotJordan",
            Error::InvalidStart { .. } => "InvalidStart",
            Error::AlgorithmStalled { .. } => "AlgorithmStalled",
            Error::ConstructionFailed { .. } => "ConstructionFailed",
            Error::InfeasibleRequiredPoints(_) => "InfeasibleRequiredPoints",
            Error::HypothesisNotMet(_) => "HypothesisNotMet",
            Error::SpaceMismatch => "SpaceMismatch",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ShapeError(_) => "ShapeError",
            Error::Unsupported(_) => "Unsupported",
            Error::InvalidWord(_) => "InvalidWord",
            Error::TruncationTooSmall { .. } => "TruncationTooSmall",
            Error::OrientationError { .. } => "OrientationError",
            Error::OnBoundary => "OnBoundary",
            Error::Indeterminate(_) => "Indeterminate",
            Error::ImageMismatch { .. } => "ImageMismatch",
            Error::GenerationFailed(_) => "GenerationFailed",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
