//! Exact planar geometry for realizing hypergraphs.
//!
//! Everything is computed over arbitrary-precision rationals: crossing counts,
//! above/below tests and disk containment are decided exactly.

mod compact;
mod curves;
mod disks;
pub mod json;
mod lens;
mod realize;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use compact::{compactify, evenize, Compactification, PseudoDiskPolygon, SegmentMeet};
pub use curves::{
    crossing_count, crossings, hypergraph_from_curves, CurveFamily, PairCrossings, PolylineCurve,
};
pub use disks::{
    enumerate_stabbed_disk_hypergraph, enumerate_stabbed_disks, hypergraph_from_stabbed_disks,
    Disk, StabbedDiskFamily, ENUMERATION_LIMIT,
};
pub use lens::{eliminate_empty_lenses, find_empty_lens, Lens};
pub use realize::{edge_curve, realize_as_curves};

pub type Rational = BigRational;

/// `numer / denom` as an exact rational.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub(crate) fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(int(x), int(y))
    }

    pub fn dist2(&self, other: &Point) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

/// Cross product of `b - a` and `c - a`; positive for a left turn.
pub(crate) fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// How the vertices of a point-defined hypergraph are ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointOrder {
    /// Left to right; for equal `x` the lower point first.
    XThenY,
    /// Counterclockwise about the point starting from the positive x-direction;
    /// for equal directions the closer point first.
    AngularAbout(Point),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointSet {
    pub points: Vec<Point>,
}

impl PointSet {
    /// Fails if two points coincide.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut sorted: Vec<&Point> = points.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!(
                "duplicate point ({}, {})",
                w[0].x, w[0].y
            )));
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Indices of the points listed in the requested order.
    pub fn order(&self, order: &PointOrder) -> Result<Vec<usize>> {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        match order {
            PointOrder::XThenY => idx.sort_by(|&a, &b| self.points[a].cmp(&self.points[b])),
            PointOrder::AngularAbout(center) => {
                if let Some(i) = self.points.iter().position(|p| p == center) {
                    return Err(Error::PointAtStab { point: i });
                }
                idx.sort_by(|&a, &b| angular_cmp(center, &self.points[a], &self.points[b]));
            }
        }
        Ok(idx)
    }
}

fn upper_half(center: &Point, p: &Point) -> bool {
    let dy = &p.y - &center.y;
    dy.is_positive() || (dy.is_zero() && p.x > center.x)
}

pub(crate) fn angular_cmp(center: &Point, a: &Point, b: &Point) -> Ordering {
    let (ha, hb) = (upper_half(center, a), upper_half(center, b));
    if ha != hb {
        return if ha { Ordering::Less } else { Ordering::Greater };
    }
    match sign(&orient(center, a, b)) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => center.dist2(a).cmp(&center.dist2(b)),
    }
}
