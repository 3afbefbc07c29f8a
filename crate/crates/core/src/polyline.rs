// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Partitions of `[0, 1]` and the piecewise-geodesic curves built on them.

use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::geometry::{interpolate, GeodesicSegment, Point, Space, TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    times: Vec<f64>,
    mesh: f64,
}

impl Partition {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::InvalidCurve("a partition needs at least two times".into()));
        }
        if times[0] != 0.0 || times[times.len() - 1] != 1.0 {
            return Err(Error::InvalidCurve("partition must start at 0 and end at 1".into()));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidCurve("partition times must be strictly increasing".into()));
        }
        let mesh = times.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        Ok(Partition { times, mesh })
    }

    pub fn uniform(segments: usize) -> Self {
        let mut times: Vec<f64> = (0..=segments).map(|j| j as f64 / segments as f64).collect();
        times[segments] = 1.0;
        Partition::new(times).expect("uniform partition is valid")
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// Largest gap between consecutive times.
    pub fn mesh(&self) -> f64 {
        self.mesh
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Whether `t` is one of the partition times, compared exactly.
    pub fn contains(&self, t: f64) -> bool {
        self.times.binary_search_by(|s| s.total_cmp(&t)).is_ok()
    }
}

/// Nodes joined by minimizing geodesics, one node per partition time.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseGeodesic {
    space: Space,
    partition: Partition,
    nodes: Vec<Point>,
    closed: bool,
}

impl PiecewiseGeodesic {
    pub fn new(space: Space, partition: Partition, nodes: Vec<Point>, closed: bool) -> Result<Self> {
        if partition.len() != nodes.len() {
            return Err(Error::InvalidCurve(format!(
                "{} partition times but {} nodes",
                partition.len(),
                nodes.len()
            )));
        }
        for p in &nodes {
            space.check(p)?;
        }
        let radius = space.uniqueness_radius();
        for (k, w) in nodes.windows(2).enumerate() {
            let d = space.dist(&w[0], &w[1]);
            if d > radius + TOL {
                return Err(Error::InvalidCurve(format!(
                    "nodes {k} and {} are {d} apart, beyond the uniqueness radius {radius}",
                    k + 1
                )));
            }
        }
        if closed && nodes[0] != nodes[nodes.len() - 1] {
            return Err(Error::InvalidCurve(
                "closed polyline must repeat its first node at the end".into(),
            ));
        }
        Ok(PiecewiseGeodesic {
            space,
            partition,
            nodes,
            closed,
        })
    }

    /// Polyline through `nodes` on a uniform partition.
    pub fn from_nodes(space: Space, nodes: Vec<Point>, closed: bool) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::InvalidCurve("a polyline needs at least two nodes".into()));
        }
        let partition = Partition::uniform(nodes.len() - 1);
        PiecewiseGeodesic::new(space, partition, nodes, closed)
    }

    /// Planar polyline through the given coordinates on a uniform partition.
    pub fn planar(coords: &[[f64; 2]], closed: bool) -> Result<Self> {
        let nodes = coords.iter().map(|&c| Point::from(c)).collect();
        PiecewiseGeodesic::from_nodes(Space::PLANE, nodes, closed)
    }

    /// The interpolation of `curve` at the given partition times.
    pub fn interpolating(curve: &SampledCurve, partition: Partition) -> Result<Self> {
        let nodes = partition.times().iter().map(|&t| curve.at(t)).collect();
        PiecewiseGeodesic::new(curve.space(), partition, nodes, curve.is_closed())
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn times(&self) -> &[f64] {
        self.partition.times()
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn segment_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn segment(&self, i: usize) -> GeodesicSegment {
        GeodesicSegment::new_unchecked(self.space, self.nodes[i].clone(), self.nodes[i + 1].clone())
    }

    pub fn segments(&self) -> impl Iterator<Item = GeodesicSegment> + '_ {
        (0..self.segment_count()).map(|i| self.segment(i))
    }

    /// Point at time `t`, constant speed on each partition cell.
    pub fn eval(&self, t: f64) -> Result<Point> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfRange(format!("time {t} not in [0,1]")));
        }
        let times = self.partition.times();
        let k = times.partition_point(|&s| s <= t).saturating_sub(1).min(times.len() - 2);
        let (t0, t1) = (times[k], times[k + 1]);
        let lambda = ((t - t0) / (t1 - t0)).clamp(0.0, 1.0);
        let (a, b) = (&self.nodes[k], &self.nodes[k + 1]);
        Ok(match lambda {
            0.0 => a.clone(),
            1.0 => b.clone(),
            _ => interpolate(self.space, a, b, self.space.dist(a, b), lambda),
        })
    }

    pub fn reverse(&self) -> PiecewiseGeodesic {
        let n = self.nodes.len();
        let mut times: Vec<f64> = self.times().iter().rev().map(|&t| 1.0 - t).collect();
        times[0] = 0.0;
        times[n - 1] = 1.0;
        PiecewiseGeodesic {
            space: self.space,
            partition: Partition::new(times).expect("reversed partition is valid"),
            nodes: self.nodes.iter().rev().cloned().collect(),
            closed: self.closed,
        }
    }

    /// Total geodesic length.
    pub fn length(&self) -> f64 {
        self.nodes
            .windows(2)
            .map(|w| self.space.dist(&w[0], &w[1]))
            .sum()
    }

    /// Planar vertex list; for closed polylines the repeated last node is dropped.
    pub fn vertices_xy(&self) -> Result<Vec<[f64; 2]>> {
        if self.space != Space::PLANE {
            return Err(Error::Unsupported("planar vertices of a non-planar polyline".into()));
        }
        let end = if self.closed { self.nodes.len() - 1 } else { self.nodes.len() };
        Ok(self.nodes[..end].iter().map(Point::xy).collect())
    }
}
