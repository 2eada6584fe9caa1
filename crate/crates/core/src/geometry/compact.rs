//! Even curve families and their compactification into stabbed polygons.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::curves::{CurveFamily, PolylineCurve};
use super::{int, orient, rat, sign, Point, PointSet, Rational};
use crate::error::{Error, Result};

/// Curve indices sorted bottom to top by their height at `-inf` (or `+inf`).
fn ranks_by<F>(family: &CurveFamily, key: F, side: &str) -> Result<Vec<usize>>
where
    F: Fn(&PolylineCurve) -> &Rational,
{
    let mut idx: Vec<usize> = (0..family.len()).collect();
    idx.sort_by(|&a, &b| key(&family.curves[a]).cmp(key(&family.curves[b])));
    if let Some(w) = idx
        .windows(2)
        .find(|w| key(&family.curves[w[0]]) == key(&family.curves[w[1]]))
    {
        return Err(Error::Invalid(format!(
            "curves {} and {} share their {side} tail height",
            w[0].min(w[1]),
            w[0].max(w[1])
        )));
    }
    Ok(idx)
}

fn max_x(points: &PointSet, family: &CurveFamily) -> Option<Rational> {
    family
        .curves
        .iter()
        .flat_map(|c| c.breakpoints().iter().map(|p| &p.x))
        .chain(points.points.iter().map(|p| &p.x))
        .max()
        .cloned()
}

/// Reroutes every curve right of all breakpoints and points so that it ends
/// at height `i` when it is the `i`-th lowest curve at `-inf`. Afterwards the
/// order at both ends agrees, so every pair crosses an even number of times,
/// and the points above each curve stay the same.
pub fn evenize(points: &PointSet, family: &CurveFamily) -> Result<CurveFamily> {
    let order = ranks_by(family, PolylineCurve::left_y, "left")?;
    ranks_by(family, PolylineCurve::right_y, "right")?;
    let m = max_x(points, family).unwrap_or_else(|| int(0)) + int(1);
    let mut curves = family.curves.clone();
    for (rank, &k) in order.iter().enumerate() {
        let c = &family.curves[k];
        let target = int(rank as i64 + 1);
        let mut bps = c.breakpoints().to_vec();
        if bps.is_empty() {
            bps.push(Point::new(m.clone() - int(1), c.left_y().clone()));
        }
        bps.push(Point::new(m.clone(), c.right_y().clone()));
        bps.push(Point::new(&m + int(1), target.clone()));
        curves[k] = PolylineCurve::new(c.left_y().clone(), bps, target)?;
    }
    Ok(CurveFamily {
        curves,
        t_bound: family.t_bound.map(|t| t + t % 2),
    })
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentMeet {
    Disjoint,
    At(Point),
    /// Collinear with a common piece of positive length.
    Overlap,
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p).is_zero()
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

pub fn segment_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> SegmentMeet {
    let (o1, o2) = (sign(&orient(a, b, c)), sign(&orient(a, b, d)));
    let (o3, o4) = (sign(&orient(c, d, a)), sign(&orient(c, d, b)));
    if o1 == 0 && o2 == 0 {
        // Collinear: project onto the dominant axis.
        let key = |p: &Point| if a.x != b.x { p.x.clone() } else { p.y.clone() };
        let (lo1, hi1) = minmax(key(a), key(b));
        let (lo2, hi2) = minmax(key(c), key(d));
        let lo = lo1.max(lo2);
        let hi = hi1.min(hi2);
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => SegmentMeet::Disjoint,
            std::cmp::Ordering::Less => SegmentMeet::Overlap,
            std::cmp::Ordering::Equal => {
                let p = [a, b, c, d].into_iter().find(|p| key(p) == lo).unwrap();
                SegmentMeet::At(p.clone())
            }
        };
    }
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return SegmentMeet::Disjoint;
    }
    // Proper or touching intersection of the supporting lines.
    let denom = (&b.x - &a.x) * (&d.y - &c.y) - (&b.y - &a.y) * (&d.x - &c.x);
    let t = ((&c.x - &a.x) * (&d.y - &c.y) - (&c.y - &a.y) * (&d.x - &c.x)) / denom;
    SegmentMeet::At(Point::new(&a.x + &t * (&b.x - &a.x), &a.y + &t * (&b.y - &a.y)))
}

fn minmax(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A closed polygon given by its corners in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDiskPolygon {
    vertices: Vec<Point>,
}

impl PseudoDiskPolygon {
    /// Fails on fewer than three corners or a clockwise corner list. Use
    /// [`PseudoDiskPolygon::is_simple`] to check simplicity.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Invalid("a polygon needs at least three corners".into()));
        }
        let poly = Self { vertices };
        if !poly.signed_area().is_positive() {
            return Err(Error::Invalid("polygon corners must be counterclockwise".into()));
        }
        Ok(poly)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn signed_area(&self) -> Rational {
        let twice: Rational = self
            .edges()
            .map(|(a, b)| &a.x * &b.y - &b.x * &a.y)
            .fold(Rational::zero(), |acc, v| acc + v);
        twice / int(2)
    }

    /// No two edges meet except consecutive ones at their shared corner.
    pub fn is_simple(&self) -> bool {
        let e: Vec<(&Point, &Point)> = self.edges().collect();
        let n = e.len();
        for i in 0..n {
            for j in i + 1..n {
                let meet = segment_meet(e[i].0, e[i].1, e[j].0, e[j].1);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                match meet {
                    SegmentMeet::Disjoint => {}
                    SegmentMeet::Overlap => return false,
                    SegmentMeet::At(p) => {
                        let shared = if j == i + 1 { e[i].1 } else { e[i].0 };
                        if !adjacent || p != *shared {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.edges().any(|(a, b)| on_segment(a, b, p))
    }

    /// Closed containment: boundary points count as inside.
    pub fn contains(&self, p: &Point) -> bool {
        if self.on_boundary(p) {
            return true;
        }
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > p.y) != (b.y > p.y) {
                let x = &a.x + (&p.y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y);
                if p.x < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Number of distinct points shared by the two boundaries.
    pub fn boundary_intersections(&self, other: &PseudoDiskPolygon) -> Result<usize> {
        let mut seen = BTreeSet::new();
        for (a, b) in self.edges() {
            for (c, d) in other.edges() {
                match segment_meet(a, b, c, d) {
                    SegmentMeet::Disjoint => {}
                    SegmentMeet::At(p) => {
                        seen.insert(p);
                    }
                    SegmentMeet::Overlap => {
                        return Err(Error::Degenerate(
                            "polygon boundaries share a segment".into(),
                        ))
                    }
                }
            }
        }
        Ok(seen.len())
    }
}

/// Closed polygons with a common interior point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compactification {
    pub polygons: Vec<PseudoDiskPolygon>,
    pub stab: Point,
    /// Half-width of the box outside which the curves were replaced by arches.
    pub m: Rational,
}

/// Closes each curve of an even family upward into a polygon. With `M`
/// larger than every coordinate in play and `i` the curve's bottom-to-top
/// rank, the curve is cut at `x = -M` and `x = M` and the two ends are joined
/// over the top through `(M + n - i, M)`, `(0, M + n - i)` and
/// `(-M - n + i, M)`. The arches are nested, so two boundaries meet only where
/// the curves cross. The top curve would have a flat arch at height `M`; its
/// apex is raised to `M + 3/4` so that `(0, M + 1/2)` is inside every polygon.
pub fn compactify(points: &PointSet, family: &CurveFamily) -> Result<Compactification> {
    let left = ranks_by(family, PolylineCurve::left_y, "left")?;
    let right = ranks_by(family, PolylineCurve::right_y, "right")?;
    if left != right {
        return Err(Error::NotEven(
            "the bottom-to-top order of the curves differs at -inf and +inf".into(),
        ));
    }
    let n = family.len() as i64;
    let bound = family
        .curves
        .iter()
        .flat_map(|c| {
            c.breakpoints()
                .iter()
                .flat_map(|p| [&p.x, &p.y])
                .chain([c.left_y(), c.right_y()])
        })
        .chain(points.points.iter().flat_map(|p| [&p.x, &p.y]))
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(|| int(0));
    let m = bound.ceil() + int(1);
    let mut polygons = vec![None; family.len()];
    for (rank0, &k) in left.iter().enumerate() {
        let i = rank0 as i64 + 1;
        let c = &family.curves[k];
        let lift = int(n - i);
        let apex = if i == n { &m + rat(3, 4) } else { &m + &lift };
        let mut corners = vec![Point::new(-&m, c.left_y().clone())];
        corners.extend(c.breakpoints().iter().cloned());
        corners.push(Point::new(m.clone(), c.right_y().clone()));
        corners.push(Point::new(&m + &lift, m.clone()));
        corners.push(Point::new(int(0), apex));
        corners.push(Point::new(-&m - &lift, m.clone()));
        corners.dedup();
        polygons[k] = Some(PseudoDiskPolygon::new(corners)?);
    }
    Ok(Compactification {
        polygons: polygons.into_iter().map(Option::unwrap).collect(),
        stab: Point::new(int(0), &m + rat(1, 2)),
        m,
    })
}
