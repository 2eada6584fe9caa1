//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls the library's own detection or realization code; the
//! oracles work from the definitions directly.

#![allow(dead_code)]

use ababfree::geometry::{int, CurveFamily, Point, PointSet, PolylineCurve, Rational};
use ababfree::OrderedHypergraph;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// Longest alternating subsequence `a1 < b1 < a2 < ...` with the `a`s in
/// `A \ B` and the `b`s in `B \ A`, found by trying every subset of the
/// symmetric difference. Vertices are bits of the masks; `n <= 16`.
pub fn brute_alternation(a: u32, b: u32, n: usize) -> usize {
    let only_a = a & !b;
    let only_b = b & !a;
    let diff = only_a | only_b;
    let members: Vec<usize> = (0..n).filter(|&v| diff >> v & 1 == 1).collect();
    let mut best = 0;
    for subset in 0u32..(1 << members.len()) {
        let picked: Vec<usize> = members
            .iter()
            .enumerate()
            .filter(|(k, _)| subset >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let alternates = picked.iter().enumerate().all(|(k, &v)| {
            let from_a = only_a >> v & 1 == 1;
            from_a == (k % 2 == 0)
        });
        if alternates {
            best = best.max(picked.len());
        }
    }
    best
}

/// Linear-time alternation length on bitmasks, used where the exhaustive
/// version is too slow. Checked against [`brute_alternation`] in the tests.
pub fn mask_alternation(a: u32, b: u32, n: usize) -> usize {
    let mut len = 0;
    let mut want_a = true;
    for v in 0..n {
        let (ia, ib) = (a >> v & 1 == 1, b >> v & 1 == 1);
        if ia != ib && ia == want_a {
            len += 1;
            want_a = !want_a;
        }
    }
    len
}

pub fn mask_free_pair(a: u32, b: u32, n: usize, twice_l: usize) -> bool {
    mask_alternation(a, b, n) < twice_l && mask_alternation(b, a, n) < twice_l
}

pub fn to_mask(edge: &[usize]) -> u32 {
    edge.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn from_mask(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Whether some hyperedge of `edges` together with `{p, q}` forms an
/// alternation of length four in either direction, decided by brute force.
pub fn brute_is_split(p: usize, q: usize, edges: &[u32], n: usize) -> bool {
    let e = 1 << p | 1 << q;
    edges
        .iter()
        .any(|&b| brute_alternation(e, b, n) >= 4 || brute_alternation(b, e, n) >= 4)
}

/// Every ABAB-free ordered edge set over `n` vertices with at most
/// `max_edges` edges, drawn from edges of size at least `min_size`, in
/// lexicographic order of the chosen mask indices. `visit` sees each set.
pub fn for_each_free_family(n: usize, max_edges: usize, min_size: u32, mut visit: impl FnMut(&[u32])) {
    let masks: Vec<u32> = (1u32..1 << n).filter(|m| m.count_ones() >= min_size).collect();
    let compatible: Vec<Vec<bool>> = masks
        .iter()
        .map(|&a| masks.iter().map(|&b| mask_free_pair(a, b, n, 4)).collect())
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut edges: Vec<u32> = Vec::new();
    fn rec(
        start: usize,
        max_edges: usize,
        masks: &[u32],
        compatible: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        edges: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        visit(edges);
        if chosen.len() == max_edges {
            return;
        }
        for i in start..masks.len() {
            if chosen.iter().all(|&c| compatible[c][i]) {
                chosen.push(i);
                edges.push(masks[i]);
                rec(i + 1, max_edges, masks, compatible, chosen, edges, visit);
                chosen.pop();
                edges.pop();
            }
        }
    }
    rec(0, max_edges, &masks, &compatible, &mut chosen, &mut edges, &mut visit);
}

/// Same enumeration as [`for_each_free_family`], but `visit` also receives
/// the family as a hypergraph that is updated in place rather than rebuilt.
pub fn for_each_free_hypergraph(
    n: usize,
    max_edges: usize,
    min_size: u32,
    mut visit: impl FnMut(&OrderedHypergraph, &[u32]),
) {
    let masks: Vec<u32> = (1u32..1 << n).filter(|m| m.count_ones() >= min_size).collect();
    let compatible: Vec<Vec<bool>> = masks
        .iter()
        .map(|&a| masks.iter().map(|&b| mask_free_pair(a, b, n, 4)).collect())
        .collect();
    struct Walk<'a> {
        max_edges: usize,
        masks: &'a [u32],
        compatible: &'a [Vec<bool>],
        chosen: Vec<usize>,
        edges: Vec<u32>,
        h: OrderedHypergraph,
    }
    fn rec(w: &mut Walk, start: usize, n: usize, visit: &mut dyn FnMut(&OrderedHypergraph, &[u32])) {
        visit(&w.h, &w.edges);
        if w.chosen.len() == w.max_edges {
            return;
        }
        for i in start..w.masks.len() {
            if w.chosen.iter().all(|&c| w.compatible[c][i]) {
                let edge = from_mask(w.masks[i], n);
                w.h.insert_edge(edge.clone()).unwrap();
                w.chosen.push(i);
                w.edges.push(w.masks[i]);
                rec(w, i + 1, n, visit);
                w.chosen.pop();
                w.edges.pop();
                w.h.remove_edge(&edge);
            }
        }
    }
    let mut walk = Walk {
        max_edges,
        masks: &masks,
        compatible: &compatible,
        chosen: Vec::new(),
        edges: Vec::new(),
        h: OrderedHypergraph::with_vertex_count(n, Vec::new()).unwrap(),
    };
    rec(&mut walk, 0, n, &mut visit);
}

pub fn hypergraph_from_masks(n: usize, edges: &[u32]) -> OrderedHypergraph {
    OrderedHypergraph::with_vertex_count(n, edges.iter().map(|&m| from_mask(m, n)).collect())
        .expect("masks are valid edges")
}

/// Random ABAB-free hypergraph: random nonempty edges are proposed and kept
/// when they alternate fewer than four times with every kept edge.
pub fn random_abab_free<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> OrderedHypergraph {
    let mut edges: Vec<u32> = Vec::new();
    let full = (1u32 << n) - 1;
    for _ in 0..max_edges * 4 {
        if edges.len() == max_edges {
            break;
        }
        let m = rng.gen_range(1..=full);
        if !edges.contains(&m) && edges.iter().all(|&e| mask_free_pair(e, m, n, 4)) {
            edges.push(m);
        }
    }
    hypergraph_from_masks(n, &edges)
}

/// Random hypergraph with no freeness guarantee.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, edges: usize) -> OrderedHypergraph {
    let full = (1u32 << n) - 1;
    let masks: Vec<u32> = (0..edges).map(|_| rng.gen_range(1..=full)).collect();
    hypergraph_from_masks(n, &masks)
}

fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, denom: i64) -> Rational {
    Rational::new(rng.gen_range(lo * denom..=hi * denom).into(), denom.into())
}

/// Curves sampled from random integer polynomials of degree at most `t` on
/// the common grid `x = 0..=samples - 1`. Two such polylines cross at most as
/// often as the polynomials' difference changes sign along the grid, so the
/// family is `t`-intersecting. Families with overlapping curves are redrawn.
pub fn random_polynomial_family<R: Rng>(rng: &mut R, curves: usize, t: usize, samples: i64) -> CurveFamily {
    loop {
        let family = CurveFamily::new(
            (0..curves)
                .map(|_| {
                    let coeffs: Vec<i64> = (0..=t).map(|_| rng.gen_range(-6..=6)).collect();
                    let shift: i64 = rng.gen_range(0..samples);
                    let bps = (0..samples)
                        .map(|x| {
                            let u = x - shift;
                            let y = coeffs.iter().rev().fold(0i64, |acc, &c| acc * u + c);
                            Point::new(int(x), int(y))
                        })
                        .collect();
                    PolylineCurve::through(bps).expect("increasing grid")
                })
                .collect(),
        );
        if family.crossing_matrix().is_ok() {
            return family;
        }
    }
}

/// Up to `count` random points with half-integer coordinates spread over the
/// family's range, skipping any that lies on two curves.
pub fn random_points_for<R: Rng>(rng: &mut R, family: &CurveFamily, count: usize, x_hi: i64) -> PointSet {
    let mut ys: Vec<Rational> = family
        .curves
        .iter()
        .flat_map(|c| c.breakpoints().iter().map(|p| p.y.clone()))
        .collect();
    ys.sort();
    let (lo, hi) = match (ys.first(), ys.last()) {
        (Some(a), Some(b)) => (a.floor().to_integer(), b.ceil().to_integer()),
        _ => (0.into(), 0.into()),
    };
    let lo: i64 = i64::try_from(lo).unwrap_or(-50).max(-200) - 1;
    let hi: i64 = i64::try_from(hi).unwrap_or(50).min(200) + 1;
    let mut pts: Vec<Point> = Vec::new();
    let mut attempts = 0;
    while pts.len() < count && attempts < count * 20 {
        attempts += 1;
        let p = Point::new(rational(rng, -1, x_hi + 1, 2), rational(rng, lo, hi, 2));
        let on = family.curves.iter().filter(|c| c.eval(&p.x) == p.y).count();
        if on < 2 && !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(pts).expect("points are distinct")
}

/// Inequality `coeffs . x <= rhs` (or `<` when strict) over `(cx, cy, w)`.
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Rational>,
    rhs: Rational,
    strict: bool,
}

/// Fourier-Motzkin feasibility for mixed strict and non-strict systems.
fn feasible(mut system: Vec<Ineq>, vars: usize) -> bool {
    for k in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in system {
            if ineq.coeffs[k].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[k].is_negative() {
                neg.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for p in &pos {
            for q in &neg {
                let (sp, sq) = (-q.coeffs[k].clone(), p.coeffs[k].clone());
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(a, b)| a * &sp + b * &sq)
                    .collect();
                rest.push(Ineq {
                    coeffs,
                    rhs: &p.rhs * &sp + &q.rhs * &sq,
                    strict: p.strict || q.strict,
                });
            }
        }
        system = rest;
    }
    system.iter().all(|i| {
        if i.strict {
            i.rhs.is_positive()
        } else {
            !i.rhs.is_negative()
        }
    })
}

/// Whether some closed disk contains `stab` and exactly the points of `S`
/// whose indices are in `inside`. A disk is `|p|^2 - 2 p.c - w <= 0` with
/// `w = r2 - |c|^2`, which is linear in `(cx, cy, w)`.
pub fn disk_trace_feasible(points: &PointSet, stab: &Point, inside: &[bool]) -> bool {
    let row = |p: &Point, is_in: bool| {
        let norm = &p.x * &p.x + &p.y * &p.y;
        let c = [int(-2) * &p.x, int(-2) * &p.y, int(-1)];
        if is_in {
            Ineq {
                coeffs: c.to_vec(),
                rhs: -norm,
                strict: false,
            }
        } else {
            Ineq {
                coeffs: c.iter().map(|v| -v).collect(),
                rhs: norm,
                strict: true,
            }
        }
    };
    let mut system = vec![row(stab, true)];
    for (p, &is_in) in points.points.iter().zip(inside) {
        system.push(row(p, is_in));
    }
    feasible(system, 3)
}

/// All nonempty traces (as sorted positions in the given vertex order) that
/// some disk through `stab` realizes, by testing every subset.
pub fn oracle_disk_traces(points: &PointSet, stab: &Point, order: &[usize]) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut out = Vec::new();
    for subset in 1u32..(1 << n) {
        let inside: Vec<bool> = (0..n).map(|i| subset >> i & 1 == 1).collect();
        if disk_trace_feasible(points, stab, &inside) {
            let mut trace: Vec<usize> = order
                .iter()
                .enumerate()
                .filter(|(_, &i)| inside[i])
                .map(|(pos, _)| pos)
                .collect();
            trace.sort();
            out.push(trace);
        }
    }
    out.sort();
    out
}

/// Distinct integer points in `[-span, span]^2`, avoiding the origin.
pub fn random_integer_points<R: Rng>(rng: &mut R, n: usize, span: i64) -> PointSet {
    let mut grid: Vec<(i64, i64)> = (-span..=span)
        .flat_map(|x| (-span..=span).map(move |y| (x, y)))
        .filter(|&p| p != (0, 0))
        .collect();
    grid.shuffle(rng);
    PointSet::new(grid[..n].iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
