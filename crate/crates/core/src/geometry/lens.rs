//! Empty-lens removal for curve families.
//!
//! The first step samples every curve at the x-coordinates of the points
//! ("columns") and joins the samples by straight segments. Membership only
//! depends on those samples, so this keeps the realized hypergraph. Ties at a
//! column are split by tiny downward shifts so that two curves never meet on a
//! column. After that, the vertical order of a pair is a sequence of sign runs
//! over the columns, and a run with no point between the two curves is removed
//! by exchanging the two curves on exactly the columns of that run.

use super::curves::{CurveFamily, PolylineCurve};
use super::{int, Point, PointSet, Rational};
use crate::error::Result;

/// The region between two curves bounded by consecutive crossings, or by one
/// crossing and infinity (`None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lens {
    pub first: usize,
    pub second: usize,
    pub from: Option<Rational>,
    pub to: Option<Rational>,
}

impl Lens {
    fn contains_x(&self, x: &Rational) -> bool {
        self.from.as_ref().is_none_or(|f| x >= f) && self.to.as_ref().is_none_or(|t| x <= t)
    }
}

/// First empty lens, scanning pairs `(i, j)` with `i < j` and lenses left to
/// right. Points on the boundary count as inside. The unbounded regions left
/// of the first and right of the last crossing are considered as well.
pub fn find_empty_lens(points: &PointSet, family: &CurveFamily) -> Result<Option<Lens>> {
    let n = family.len();
    for i in 0..n {
        for j in i + 1..n {
            let xs = family.pair_crossings(i, j)?.xs;
            if xs.is_empty() {
                continue;
            }
            let mut bounds: Vec<Option<Rational>> = vec![None];
            bounds.extend(xs.into_iter().map(Some));
            bounds.push(None);
            for w in bounds.windows(2) {
                let lens = Lens {
                    first: i,
                    second: j,
                    from: w[0].clone(),
                    to: w[1].clone(),
                };
                let (ci, cj) = (&family.curves[i], &family.curves[j]);
                let occupied = points.points.iter().any(|p| {
                    if !lens.contains_x(&p.x) {
                        return false;
                    }
                    let (a, b) = (ci.eval(&p.x), cj.eval(&p.x));
                    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                    lo <= p.y && p.y <= hi
                });
                if !occupied {
                    return Ok(Some(lens));
                }
            }
        }
    }
    Ok(None)
}

/// Removes empty lenses until none is left. Each exchange strictly lowers the
/// total number of crossings and never changes which points lie on or above
/// which curve. A family without empty lenses is returned unchanged.
pub fn eliminate_empty_lenses(points: &PointSet, family: &CurveFamily) -> Result<CurveFamily> {
    if find_empty_lens(points, family)?.is_none() {
        return Ok(family.clone());
    }
    let mut columns: Vec<Rational> = points.points.iter().map(|p| p.x.clone()).collect();
    columns.sort();
    columns.dedup();
    if columns.is_empty() {
        let curves = (0..family.len() as i64)
            .map(|k| PolylineCurve::constant(int(k + 1)))
            .collect();
        return Ok(CurveFamily {
            curves,
            t_bound: family.t_bound,
        });
    }
    let values = column_values(points, family, &columns);

    // The exchanges only look at vertical orders, so they run on ranks: per
    // column, `levels[c]` holds the curve heights in increasing order and a
    // point is recorded by how many of them lie on or below it.
    let levels: Vec<Vec<Rational>> = (0..columns.len())
        .map(|c| {
            let mut col: Vec<Rational> = values.iter().map(|v| v[c].clone()).collect();
            col.sort();
            col
        })
        .collect();
    let mut ranks: Vec<Vec<usize>> = values
        .iter()
        .map(|v| v.iter().zip(&levels).map(|(y, col)| col.partition_point(|l| l < y)).collect())
        .collect();
    let mut column_points: Vec<Vec<usize>> = vec![Vec::new(); columns.len()];
    for p in &points.points {
        if let Ok(c) = columns.binary_search(&p.x) {
            column_points[c].push(levels[c].partition_point(|l| *l <= p.y));
        }
    }
    while let Some((i, j, run)) = first_empty_run(&column_points, &ranks) {
        for c in run {
            let (a, b) = (ranks[i][c], ranks[j][c]);
            ranks[i][c] = b;
            ranks[j][c] = a;
        }
    }
    let values: Vec<Vec<Rational>> = ranks
        .iter()
        .map(|r| r.iter().zip(&levels).map(|(&k, col)| col[k].clone()).collect())
        .collect();
    let curves = values
        .into_iter()
        .map(|ys| {
            let bps = columns
                .iter()
                .zip(ys)
                .map(|(x, y)| Point::new(x.clone(), y))
                .collect();
            PolylineCurve::through(bps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveFamily {
        curves,
        t_bound: family.t_bound,
    })
}

/// `values[curve][column]`, with ties between curves split apart.
fn column_values(points: &PointSet, family: &CurveFamily, columns: &[Rational]) -> Vec<Vec<Rational>> {
    let n = family.len();
    let grid: Vec<&Rational> = columns.iter().collect();
    let sampled: Vec<Vec<Rational>> = family.curves.iter().map(|cv| cv.heights_on(&grid)).collect();
    let mut values: Vec<Vec<Rational>> = vec![Vec::with_capacity(columns.len()); n];
    for (c, x) in columns.iter().enumerate() {
        let raw: Vec<Rational> = sampled.iter().map(|h| h[c].clone()).collect();
        let mut sorted: Vec<&Rational> = raw.iter().collect();
        sorted.sort();
        if sorted.windows(2).all(|w| w[0] != w[1]) {
            for (k, v) in raw.into_iter().enumerate() {
                values[k].push(v);
            }
            continue;
        }
        let mut heights: Vec<&Rational> = raw.iter().collect();
        heights.extend(points.points.iter().filter(|p| p.x == *x).map(|p| &p.y));
        heights.sort();
        heights.dedup();
        let delta = heights
            .windows(2)
            .map(|w| w[1] - w[0])
            .min()
            .unwrap_or_else(|| int(1))
            / int(2);

        // Curves sorted from top to bottom, with ties resolved by how the
        // curves were ordered just before this column.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            raw[b].cmp(&raw[a]).then_with(|| {
                if c == 0 {
                    let (ca, cb) = (&family.curves[a], &family.curves[b]);
                    cb.left_y()
                        .cmp(ca.left_y())
                        .then_with(|| cb.right_y().cmp(ca.right_y()))
                        .then(a.cmp(&b))
                } else {
                    values[b][c - 1].cmp(&values[a][c - 1])
                }
            })
        });
        let mut adjusted = raw.clone();
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && raw[order[end]] == raw[order[start]] {
                end += 1;
            }
            let g = int((end - start) as i64);
            for (r, &k) in order[start..end].iter().enumerate().skip(1) {
                adjusted[k] = &raw[k] - &delta * int(r as i64) / &g;
            }
            start = end;
        }
        for (k, v) in adjusted.into_iter().enumerate() {
            values[k].push(v);
        }
    }
    values
}

/// Finds the first pair with a crossing and a sign run in which no point lies
/// between the two curves. Returns the columns of that run. A point with `r`
/// heights on or below it lies in `[level lo, level hi)` exactly when
/// `lo < r <= hi`.
fn first_empty_run(
    column_points: &[Vec<usize>],
    ranks: &[Vec<usize>],
) -> Option<(usize, usize, std::ops::Range<usize>)> {
    let n = ranks.len();
    let columns = column_points.len();
    for i in 0..n {
        for j in i + 1..n {
            let above = |c: usize| ranks[i][c] > ranks[j][c];
            if (1..columns).all(|c| above(c) == above(0)) {
                continue;
            }
            let mut start = 0;
            while start < columns {
                let mut end = start + 1;
                while end < columns && above(end) == above(start) {
                    end += 1;
                }
                let occupied = (start..end).any(|c| {
                    let (lo, hi) = (ranks[i][c].min(ranks[j][c]), ranks[i][c].max(ranks[j][c]));
                    column_points[c].iter().any(|&r| lo < r && r <= hi)
                });
                if !occupied {
                    return Some((i, j, start..end));
                }
                start = end;
            }
        }
    }
    None
}

/// Sum of pairwise crossings, used to check progress in tests.
#[cfg(test)]
fn total(family: &CurveFamily) -> usize {
    family.total_crossings().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{hypergraph_from_curves, rat};

    fn bump(up_from: i64, up_to: i64) -> PolylineCurve {
        PolylineCurve::through(vec![
            Point::new(rat(2 * up_from - 1, 2), int(0)),
            Point::new(int(up_from), int(2)),
            Point::new(int(up_to), int(2)),
            Point::new(rat(2 * up_to + 1, 2), int(0)),
        ])
        .unwrap()
    }

    #[test]
    fn removes_empty_lens() {
        let flat = PolylineCurve::constant(int(1));
        let f = CurveFamily::new(vec![bump(2, 3), flat]);
        assert_eq!(total(&f), 2);
        let s = PointSet::new(vec![Point::from_ints(0, 5), Point::from_ints(5, 5)]).unwrap();
        assert!(find_empty_lens(&s, &f).unwrap().is_some());
        let out = eliminate_empty_lenses(&s, &f).unwrap();
        assert_eq!(total(&out), 0);
        assert_eq!(
            hypergraph_from_curves(&s, &f).unwrap(),
            hypergraph_from_curves(&s, &out).unwrap()
        );
    }

    #[test]
    fn keeps_occupied_lens() {
        let flat = PolylineCurve::constant(int(1));
        let f = CurveFamily::new(vec![bump(1, 4), flat]);
        // One point in each of the three regions between the curves.
        let s = PointSet::new(vec![
            Point::new(int(0), rat(1, 2)),
            Point::new(int(2), rat(3, 2)),
            Point::new(int(6), rat(1, 2)),
        ])
        .unwrap();
        assert!(find_empty_lens(&s, &f).unwrap().is_none());
        assert_eq!(eliminate_empty_lenses(&s, &f).unwrap(), f);
    }

    #[test]
    fn no_points_gives_parallel_lines() {
        let f = CurveFamily::new(vec![bump(1, 2), PolylineCurve::constant(int(1))]);
        let out = eliminate_empty_lenses(&PointSet::default(), &f).unwrap();
        assert_eq!(total(&out), 0);
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn splits_ties_without_changing_membership() {
        // Both curves pass through the point (1, 0), which is on the line y = 0
        // and on the tent; neither crosses the other there.
        let tent = PolylineCurve::through(vec![
            Point::from_ints(0, 3),
            Point::from_ints(1, 0),
            Point::from_ints(2, 3),
        ])
        .unwrap();
        let low = PolylineCurve::through(vec![
            Point::from_ints(0, -1),
            Point::from_ints(1, 0),
            Point::from_ints(2, -1),
        ])
        .unwrap();
        let far = PolylineCurve::through(vec![Point::from_ints(3, 5), Point::from_ints(4, -5)]).unwrap();
        let s = PointSet::new(vec![
            Point::from_ints(0, 1),
            Point::new(int(2), rat(1, 2)),
            Point::from_ints(5, 0),
        ])
        .unwrap();
        let f = CurveFamily::new(vec![tent, low, far]);
        let out = eliminate_empty_lenses(&s, &f).unwrap();
        assert!(total(&out) <= total(&f));
        assert_eq!(
            hypergraph_from_curves(&s, &f).unwrap(),
            hypergraph_from_curves(&s, &out).unwrap()
        );
    }

    #[test]
    fn lens_reports_bounds() {
        let flat = PolylineCurve::constant(int(1));
        let f = CurveFamily::new(vec![bump(2, 3), flat]);
        let s = PointSet::new(vec![Point::from_ints(-10, 0), Point::from_ints(10, 0)]).unwrap();
        let lens = find_empty_lens(&s, &f).unwrap().unwrap();
        assert_eq!((lens.first, lens.second), (0, 1));
        assert_eq!(lens.from, Some(rat(7, 4)));
        assert_eq!(lens.to, Some(rat(13, 4)));
    }
}
