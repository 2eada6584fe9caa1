//! JSON documents for geometric inputs and outputs.
//!
//! Rationals travel as strings `"p/q"` (integers may also be written `"p"`
//! on input). Points are `["x","y"]` pairs.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::compact::{Compactification, PseudoDiskPolygon};
use super::curves::{CurveFamily, PolylineCurve};
use super::disks::{Disk, StabbedDiskFamily};
use super::{Point, PointSet, Rational};
use crate::error::{Error, Result};

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("`{text}` is not a rational of the form p/q"));
    let (num, den) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(Error::Invalid(format!("`{text}` has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Always `p/q` in lowest terms with `q > 0`, including `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

type RawPoint = [String; 2];

fn raw_point(p: &Point) -> RawPoint {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn parse_point(raw: &RawPoint) -> Result<Point> {
    Ok(Point::new(parse_rational(&raw[0])?, parse_rational(&raw[1])?))
}

fn parse_points(raw: &[RawPoint]) -> Result<PointSet> {
    PointSet::new(raw.iter().map(parse_point).collect::<Result<_>>()?)
}

#[derive(Serialize, Deserialize)]
struct RawCurve {
    left_y: String,
    pts: Vec<RawPoint>,
    right_y: String,
}

impl RawCurve {
    fn from_curve(c: &PolylineCurve) -> Self {
        Self {
            left_y: format_rational(c.left_y()),
            pts: c.breakpoints().iter().map(raw_point).collect(),
            right_y: format_rational(c.right_y()),
        }
    }

    fn to_curve(&self) -> Result<PolylineCurve> {
        PolylineCurve::new(
            parse_rational(&self.left_y)?,
            self.pts.iter().map(parse_point).collect::<Result<_>>()?,
            parse_rational(&self.right_y)?,
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawCurves {
    points: Vec<RawPoint>,
    curves: Vec<RawCurve>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t_bound: Option<usize>,
}

/// `{"points":[...],"curves":[{"left_y","pts","right_y"}...],"t_bound":t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvesDocument {
    pub points: PointSet,
    pub family: CurveFamily,
}

impl CurvesDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawCurves = serde_json::from_str(text)?;
        let curves = raw.curves.iter().map(RawCurve::to_curve).collect::<Result<_>>()?;
        Ok(Self {
            points: parse_points(&raw.points)?,
            family: CurveFamily {
                curves,
                t_bound: raw.t_bound,
            },
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawCurves {
            points: self.points.points.iter().map(raw_point).collect(),
            curves: self.family.curves.iter().map(RawCurve::from_curve).collect(),
            t_bound: self.family.t_bound,
        };
        serde_json::to_string(&raw).expect("curve serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct RawDisk {
    cx: String,
    cy: String,
    r2: String,
}

#[derive(Serialize, Deserialize)]
struct RawDisks {
    points: Vec<RawPoint>,
    stab: RawPoint,
    #[serde(default)]
    disks: Vec<RawDisk>,
}

/// `{"points":[...],"stab":["x","y"],"disks":[{"cx","cy","r2"}...]}`. The
/// disk list may be omitted, which is how point sets are fed to the disk
/// enumerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisksDocument {
    pub points: PointSet,
    pub family: StabbedDiskFamily,
}

impl DisksDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDisks = serde_json::from_str(text)?;
        let disks = raw
            .disks
            .iter()
            .map(|d| {
                let center = Point::new(parse_rational(&d.cx)?, parse_rational(&d.cy)?);
                Disk::new(center, parse_rational(&d.r2)?)
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            points: parse_points(&raw.points)?,
            family: StabbedDiskFamily::new(disks, parse_point(&raw.stab)?)?,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawDisks {
            points: self.points.points.iter().map(raw_point).collect(),
            stab: raw_point(self.family.stab()),
            disks: self
                .family
                .disks()
                .iter()
                .map(|d| RawDisk {
                    cx: format_rational(&d.center.x),
                    cy: format_rational(&d.center.y),
                    r2: format_rational(&d.r2),
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("disk serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct RawPolygons {
    points: Vec<RawPoint>,
    stab: RawPoint,
    polygons: Vec<Vec<RawPoint>>,
}

/// `{"points":[...],"stab":["x","y"],"polygons":[[["x","y"]...]...]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonsDocument {
    pub points: PointSet,
    pub stab: Point,
    pub polygons: Vec<PseudoDiskPolygon>,
}

impl PolygonsDocument {
    pub fn new(points: PointSet, c: &Compactification) -> Self {
        Self {
            points,
            stab: c.stab.clone(),
            polygons: c.polygons.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawPolygons = serde_json::from_str(text)?;
        let polygons = raw
            .polygons
            .iter()
            .map(|poly| PseudoDiskPolygon::new(poly.iter().map(parse_point).collect::<Result<_>>()?))
            .collect::<Result<_>>()?;
        Ok(Self {
            points: parse_points(&raw.points)?,
            stab: parse_point(&raw.stab)?,
            polygons,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawPolygons {
            points: self.points.points.iter().map(raw_point).collect(),
            stab: raw_point(&self.stab),
            polygons: self
                .polygons
                .iter()
                .map(|p| p.vertices().iter().map(raw_point).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("polygon serialization cannot fail")
    }
}
