//! x-monotone bi-infinite polylines and the hypergraphs they cut out of a point set.

use super::{Point, PointOrder, PointSet, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;

/// A horizontal ray from `-inf`, a polyline through `breakpoints`, and a
/// horizontal ray to `+inf`. The rays attach to the first and last breakpoint,
/// so `left_y`/`right_y` equal their heights (or each other when there are no
/// breakpoints).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineCurve {
    left_y: Rational,
    breakpoints: Vec<Point>,
    right_y: Rational,
}

impl PolylineCurve {
    pub fn new(left_y: Rational, breakpoints: Vec<Point>, right_y: Rational) -> Result<Self> {
        if breakpoints.windows(2).any(|w| w[0].x >= w[1].x) {
            return Err(Error::Invalid(
                "curve breakpoints must have strictly increasing x".into(),
            ));
        }
        let (first, last) = match (breakpoints.first(), breakpoints.last()) {
            (Some(f), Some(l)) => (&f.y, &l.y),
            _ => (&right_y, &left_y),
        };
        if *first != left_y || *last != right_y {
            return Err(Error::Invalid(format!(
                "curve tails at heights {left_y} and {right_y} do not attach to its breakpoints"
            )));
        }
        Ok(Self {
            left_y,
            breakpoints,
            right_y,
        })
    }

    pub fn constant(y: Rational) -> Self {
        Self {
            left_y: y.clone(),
            breakpoints: Vec::new(),
            right_y: y,
        }
    }

    /// Builds a curve from its breakpoints, with tails at the end heights.
    pub fn through(breakpoints: Vec<Point>) -> Result<Self> {
        let (left, right) = match (breakpoints.first(), breakpoints.last()) {
            (Some(f), Some(l)) => (f.y.clone(), l.y.clone()),
            _ => return Err(Error::Invalid("curve needs at least one breakpoint".into())),
        };
        Self::new(left, breakpoints, right)
    }

    pub fn left_y(&self) -> &Rational {
        &self.left_y
    }

    pub fn right_y(&self) -> &Rational {
        &self.right_y
    }

    pub fn breakpoints(&self) -> &[Point] {
        &self.breakpoints
    }

    /// Height of the curve above `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let bp = &self.breakpoints;
        match bp.first() {
            None => return self.left_y.clone(),
            Some(f) if *x <= f.x => return self.left_y.clone(),
            _ => {}
        }
        if *x >= bp[bp.len() - 1].x {
            return self.right_y.clone();
        }
        // First breakpoint strictly right of x.
        let k = bp.partition_point(|p| p.x <= *x);
        let (a, b) = (&bp[k - 1], &bp[k]);
        &a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x)
    }

    /// Heights above an increasing (possibly repeating) list of abscissae,
    /// found in one merged pass instead of a search per abscissa.
    pub(crate) fn heights_on(&self, grid: &[&Rational]) -> Vec<Rational> {
        let bp = &self.breakpoints;
        let mut k = 0;
        grid.iter()
            .map(|&x| {
                while k < bp.len() && bp[k].x < *x {
                    k += 1;
                }
                if k == bp.len() {
                    self.right_y.clone()
                } else if bp[k].x == *x {
                    bp[k].y.clone()
                } else if k == 0 {
                    self.left_y.clone()
                } else {
                    let (a, b) = (&bp[k - 1], &bp[k]);
                    &a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x)
                }
            })
            .collect()
    }

    /// "On or above".
    pub fn has_above(&self, p: &Point) -> bool {
        p.y >= self.eval(&p.x)
    }
}

/// Proper crossings between two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCrossings {
    /// Sign of `first - second` near `-inf`.
    pub left_sign: i8,
    /// x-coordinates of the crossings, increasing.
    pub xs: Vec<Rational>,
}

impl PairCrossings {
    pub fn count(&self) -> usize {
        self.xs.len()
    }
}

/// Locates the sign changes of `c1 - c2`. Meetings without a sign change are
/// touchings and are not reported. Fails if the curves share a segment or ray.
pub fn crossings(c1: &PolylineCurve, c2: &PolylineCurve) -> Result<PairCrossings> {
    sign_changes(c1, c2, true)
}

/// Number of proper crossings between two curves.
pub fn crossing_count(c1: &PolylineCurve, c2: &PolylineCurve) -> Result<usize> {
    sign_changes(c1, c2, false).map(|c| c.count())
}

/// With `locate` unset the reported x-coordinates are placeholders; only
/// their number is meaningful.
fn sign_changes(c1: &PolylineCurve, c2: &PolylineCurve, locate: bool) -> Result<PairCrossings> {
    let overlap = || Error::Overlap { first: 0, second: 1 };
    let mut grid: Vec<&Rational> = c1
        .breakpoints
        .iter()
        .chain(c2.breakpoints.iter())
        .map(|p| &p.x)
        .collect();
    grid.sort();
    grid.dedup();
    if grid.is_empty() {
        let s = c1.left_y.cmp(&c2.left_y) as i8;
        if s == 0 {
            return Err(overlap());
        }
        return Ok(PairCrossings {
            left_sign: s,
            xs: Vec::new(),
        });
    }
    let (h1, h2) = (c1.heights_on(&grid), c2.heights_on(&grid));
    let signs: Vec<i8> = h1.iter().zip(&h2).map(|(a, b)| a.cmp(b) as i8).collect();
    let k_max = signs.len();
    if signs[0] == 0 || signs[k_max - 1] == 0 {
        return Err(overlap());
    }
    if signs.windows(2).any(|w| w[0] == 0 && w[1] == 0) {
        return Err(overlap());
    }
    let left_sign = signs[0];
    let mut current = left_sign;
    let mut xs = Vec::new();
    let mut k = 1;
    while k < k_max {
        if signs[k] == 0 {
            // signs[k + 1] exists and is nonzero.
            let next = signs[k + 1];
            if next != current {
                xs.push(grid[k].clone());
                current = next;
            }
            k += 2;
            continue;
        }
        if signs[k] != current {
            if locate {
                let (x0, x1) = (grid[k - 1], grid[k]);
                let d0 = &h1[k - 1] - &h2[k - 1];
                let d1 = &h1[k] - &h2[k];
                xs.push(x0 + &d0 * (x1 - x0) / (&d0 - d1));
            } else {
                xs.push(grid[k].clone());
            }
            current = signs[k];
        }
        k += 1;
    }
    Ok(PairCrossings { left_sign, xs })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveFamily {
    pub curves: Vec<PolylineCurve>,
    /// Intended bound on pairwise crossings, checked by [`CurveFamily::validate`].
    pub t_bound: Option<usize>,
}

impl CurveFamily {
    pub fn new(curves: Vec<PolylineCurve>) -> Self {
        Self {
            curves,
            t_bound: None,
        }
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn pair_crossings(&self, i: usize, j: usize) -> Result<PairCrossings> {
        crossings(&self.curves[i], &self.curves[j]).map_err(|e| match e {
            Error::Overlap { .. } => Error::Overlap { first: i, second: j },
            other => other,
        })
    }

    /// Crossing counts of all pairs `i < j`, row by row.
    #[allow(clippy::needless_range_loop)]
    pub fn crossing_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.curves.len();
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = crossing_count(&self.curves[i], &self.curves[j]).map_err(|e| match e {
                    Error::Overlap { .. } => Error::Overlap { first: i, second: j },
                    other => other,
                })?;
                out[i][j] = c;
                out[j][i] = c;
            }
        }
        Ok(out)
    }

    pub fn max_crossings(&self) -> Result<usize> {
        Ok(self
            .crossing_matrix()?
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0))
    }

    pub fn total_crossings(&self) -> Result<usize> {
        Ok(self.crossing_matrix()?.iter().flatten().sum::<usize>() / 2)
    }

    /// Checks that no two curves overlap and that `t_bound`, if set, holds.
    pub fn validate(&self) -> Result<()> {
        let max = self.max_crossings()?;
        if let Some(t) = self.t_bound {
            if max > t {
                return Err(Error::Invalid(format!(
                    "family is declared {t}-intersecting but two curves cross {max} times"
                )));
            }
        }
        Ok(())
    }
}

/// Vertices are the points in x-then-y order, labeled `p<index in S>`; one
/// hyperedge per curve holding the points on or above it. Curves with no
/// point above them contribute nothing, and repeated traces are merged.
pub fn hypergraph_from_curves(points: &PointSet, family: &CurveFamily) -> Result<OrderedHypergraph> {
    let order = points.order(&PointOrder::XThenY)?;
    let mut edges = Vec::with_capacity(family.len());
    let xs: Vec<&Rational> = order.iter().map(|&i| &points.points[i].x).collect();
    let heights: Vec<Vec<Rational>> = family.curves.iter().map(|c| c.heights_on(&xs)).collect();
    for (pos, &i) in order.iter().enumerate() {
        let p = &points.points[i];
        let on: Vec<usize> = heights
            .iter()
            .enumerate()
            .filter(|(_, h)| h[pos] == p.y)
            .map(|(c, _)| c)
            .collect();
        if on.len() >= 2 {
            return Err(Error::Degenerate(format!(
                "point {i} ({}, {}) lies on curves {} and {}",
                p.x, p.y, on[0], on[1]
            )));
        }
    }
    for h in &heights {
        let edge: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|&(pos, &i)| points.points[i].y >= h[pos])
            .map(|(pos, _)| pos)
            .collect();
        if !edge.is_empty() {
            edges.push(edge);
        }
    }
    let labels = order.iter().map(|i| format!("p{i}")).collect();
    OrderedHypergraph::new(labels, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    fn pt(x: Rational, y: Rational) -> Point {
        Point::new(x, y)
    }

    fn two_points() -> PointSet {
        PointSet::new(vec![Point::from_ints(1, 0), Point::from_ints(2, 0)]).unwrap()
    }

    #[test]
    fn validates_shape() {
        assert!(PolylineCurve::new(int(0), vec![], int(1)).is_err());
        assert!(PolylineCurve::new(int(0), vec![Point::from_ints(0, 1)], int(1)).is_err());
        assert!(PolylineCurve::through(vec![Point::from_ints(1, 0), Point::from_ints(1, 2)]).is_err());
    }

    #[test]
    fn evaluates_by_interpolation() {
        let c = PolylineCurve::through(vec![Point::from_ints(0, 0), Point::from_ints(2, 4)]).unwrap();
        assert_eq!(c.eval(&int(-5)), int(0));
        assert_eq!(c.eval(&int(1)), int(2));
        assert_eq!(c.eval(&rat(1, 2)), int(1));
        assert_eq!(c.eval(&int(9)), int(4));
    }

    #[test]
    fn points_above_constant_curve() {
        let f = CurveFamily::new(vec![PolylineCurve::constant(int(-1))]);
        let h = hypergraph_from_curves(&two_points(), &f).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1]]);
    }

    #[test]
    fn points_above_descending_curve() {
        let c = PolylineCurve::new(
            int(1),
            vec![pt(rat(4, 3), int(1)), pt(rat(5, 3), int(-1))],
            int(-1),
        )
        .unwrap();
        let h = hypergraph_from_curves(&two_points(), &CurveFamily::new(vec![c])).unwrap();
        assert_eq!(h.edges(), &[vec![1]]);
    }

    #[test]
    fn point_on_curve_is_included() {
        let f = CurveFamily::new(vec![PolylineCurve::constant(int(0))]);
        let h = hypergraph_from_curves(&two_points(), &f).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1]]);
    }

    #[test]
    fn rejects_point_on_crossing() {
        let up = PolylineCurve::through(vec![Point::from_ints(0, -1), Point::from_ints(2, 1)]).unwrap();
        let down = PolylineCurve::through(vec![Point::from_ints(0, 1), Point::from_ints(2, -1)]).unwrap();
        let s = PointSet::new(vec![Point::from_ints(1, 0)]).unwrap();
        let err = hypergraph_from_curves(&s, &CurveFamily::new(vec![up, down])).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
    }

    #[test]
    fn counts_crossings() {
        let low = PolylineCurve::constant(int(1));
        let high = PolylineCurve::constant(int(2));
        assert_eq!(crossing_count(&low, &high).unwrap(), 0);

        let up = PolylineCurve::through(vec![Point::from_ints(0, -1), Point::from_ints(2, 1)]).unwrap();
        let down = PolylineCurve::through(vec![Point::from_ints(0, 1), Point::from_ints(2, -1)]).unwrap();
        let x = crossings(&up, &down).unwrap();
        assert_eq!(x.xs, vec![int(1)]);
        assert_eq!(x.left_sign, -1);

        // Crossing exactly at a shared breakpoint.
        let a = PolylineCurve::through(vec![Point::from_ints(0, 1), Point::from_ints(1, 0), Point::from_ints(2, -1)]).unwrap();
        let b = PolylineCurve::through(vec![Point::from_ints(0, -1), Point::from_ints(1, 0), Point::from_ints(2, 1)]).unwrap();
        assert_eq!(crossings(&a, &b).unwrap().xs, vec![int(1)]);
    }

    #[test]
    fn touching_is_not_crossing() {
        let v = PolylineCurve::through(vec![Point::from_ints(0, 1), Point::from_ints(1, 0), Point::from_ints(2, 1)]).unwrap();
        let flat = PolylineCurve::constant(int(0));
        assert_eq!(crossing_count(&v, &flat).unwrap(), 0);
        let w = PolylineCurve::through(vec![
            Point::from_ints(0, 1),
            Point::from_ints(1, -1),
            Point::from_ints(2, 1),
            Point::from_ints(3, -1),
        ])
        .unwrap();
        assert_eq!(crossing_count(&w, &flat).unwrap(), 3);
    }

    #[test]
    fn overlap_is_an_error() {
        let a = PolylineCurve::constant(int(0));
        assert!(matches!(crossing_count(&a, &a.clone()), Err(Error::Overlap { .. })));
        let b = PolylineCurve::through(vec![Point::from_ints(0, 0), Point::from_ints(1, 5)]).unwrap();
        assert!(matches!(crossing_count(&a, &b), Err(Error::Overlap { .. })));
        let c = PolylineCurve::through(vec![Point::from_ints(0, 1), Point::from_ints(1, 0), Point::from_ints(2, 0), Point::from_ints(3, 1)]).unwrap();
        let f = CurveFamily::new(vec![PolylineCurve::constant(int(5)), a, c]);
        assert!(matches!(f.crossing_matrix(), Err(Error::Overlap { first: 1, second: 2 })));
    }

    #[test]
    fn t_bound_is_checked() {
        let up = PolylineCurve::through(vec![Point::from_ints(0, -1), Point::from_ints(2, 1)]).unwrap();
        let flat = PolylineCurve::constant(int(0));
        let mut f = CurveFamily::new(vec![up, flat]);
        f.t_bound = Some(0);
        assert!(f.validate().is_err());
        f.t_bound = Some(1);
        assert!(f.validate().is_ok());
    }
}
