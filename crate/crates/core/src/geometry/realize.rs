//! Realizing an ordered hypergraph by points on a line and curves above them.

use super::curves::{CurveFamily, PolylineCurve};
use super::lens::eliminate_empty_lenses;
use super::{int, rat, Point, PointSet};
use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;
use crate::pattern::HalfIntegerL;

/// Curve number `k` (1-based) for a hyperedge over `n` vertices sitting at
/// `x = 1..=n` on the line `y = 0`. The curve runs at height `k` while the
/// points are outside the edge and at `-k` while they are inside, switching
/// linearly over `(j - 2/3, j - 1/3)` before each vertex `j` where membership
/// changes.
pub fn edge_curve(edge: &[usize], k: usize, n: usize) -> Result<PolylineCurve> {
    let k = int(k as i64);
    let mut inside = false;
    let mut breakpoints = Vec::new();
    for j in 1..=n as i64 {
        let wanted = edge.binary_search(&((j - 1) as usize)).is_ok();
        if wanted == inside {
            continue;
        }
        let (from, to) = if wanted { (k.clone(), -&k) } else { (-&k, k.clone()) };
        breakpoints.push(Point::new(rat(3 * j - 2, 3), from));
        breakpoints.push(Point::new(rat(3 * j - 1, 3), to));
        inside = wanted;
    }
    let right = if inside { -&k } else { k.clone() };
    PolylineCurve::new(k, breakpoints, right)
}

/// Points `(i + 1, 0)` and one curve per hyperedge, with empty lenses removed.
/// For an `(AB)^l`-free input every two curves then cross at most `2l - 2`
/// times; the returned family records this bound, and a larger count is
/// reported as an error because it proves the input was not `(AB)^l`-free.
pub fn realize_as_curves(h: &OrderedHypergraph, l: HalfIntegerL) -> Result<(PointSet, CurveFamily)> {
    let n = h.vertex_count();
    let points = PointSet::new((0..n as i64).map(|i| Point::from_ints(i + 1, 0)).collect())?;
    let curves = h
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| edge_curve(e, k + 1, n))
        .collect::<Result<Vec<_>>>()?;
    let mut family = eliminate_empty_lenses(&points, &CurveFamily::new(curves))?;
    let bound = l.twice() - 2;
    let max = family.max_crossings()?;
    if max > bound {
        return Err(Error::NotAbabFree(format!(
            "two realizing curves still cross {max} times after lens removal, \
             so the input is not (AB)^{l}-free"
        )));
    }
    family.t_bound = Some(bound);
    Ok((points, family))
}
