//! Circular disks through a common stab point.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::{int, orient, Point, PointOrder, PointSet, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;

/// Largest point set accepted by [`enumerate_stabbed_disks`].
pub const ENUMERATION_LIMIT: usize = 25;

/// Closed disk `|p - center|^2 <= r2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disk {
    pub center: Point,
    pub r2: Rational,
}

impl Disk {
    pub fn new(center: Point, r2: Rational) -> Result<Self> {
        if r2.is_negative() {
            return Err(Error::Invalid(format!("negative squared radius {r2}")));
        }
        Ok(Self { center, r2 })
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist2(p) <= self.r2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabbedDiskFamily {
    disks: Vec<Disk>,
    stab: Point,
}

impl StabbedDiskFamily {
    /// Fails if some disk misses the stab point.
    pub fn new(disks: Vec<Disk>, stab: Point) -> Result<Self> {
        if let Some(i) = disks.iter().position(|d| !d.contains(&stab)) {
            return Err(Error::DiskMissesStab { disk: i });
        }
        Ok(Self { disks, stab })
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn stab(&self) -> &Point {
        &self.stab
    }
}

/// Vertices are the points in counterclockwise order about the stab point,
/// labeled `p<index in S>`. Each disk gives the points it contains; disks
/// containing no point are skipped.
pub fn hypergraph_from_stabbed_disks(points: &PointSet, family: &StabbedDiskFamily) -> Result<OrderedHypergraph> {
    let order = points.order(&PointOrder::AngularAbout(family.stab.clone()))?;
    let edges = family
        .disks
        .iter()
        .map(|d| {
            order
                .iter()
                .enumerate()
                .filter(|(_, &i)| d.contains(&points.points[i]))
                .map(|(pos, _)| pos)
                .collect::<Vec<_>>()
        })
        .filter(|e| !e.is_empty())
        .collect();
    OrderedHypergraph::new(order.iter().map(|i| format!("p{i}")).collect(), edges)
}

/// A disk written as `f_p = |p|^2 - 2 p.c - w`, which is `<= 0` exactly for the
/// points inside; `w = r2 - |c|^2`. All `f_p` are linear in `(c, w)`.
#[derive(Clone)]
struct Lifted {
    cx: Rational,
    cy: Rational,
    w: Rational,
}

impl Lifted {
    fn from_disk(d: &Disk) -> Self {
        let c2 = &d.center.x * &d.center.x + &d.center.y * &d.center.y;
        Self {
            cx: d.center.x.clone(),
            cy: d.center.y.clone(),
            w: &d.r2 - c2,
        }
    }

    fn f(&self, p: &Point) -> Rational {
        &p.x * &p.x + &p.y * &p.y - int(2) * (&p.x * &self.cx + &p.y * &self.cy) - &self.w
    }

    fn to_disk(&self) -> Disk {
        let center = Point::new(self.cx.clone(), self.cy.clone());
        let r2 = &self.w + &self.cx * &self.cx + &self.cy * &self.cy;
        Disk { center, r2 }
    }

    fn moved(&self, d: &Lifted, t: &Rational) -> Lifted {
        Lifted {
            cx: &self.cx + t * &d.cx,
            cy: &self.cy + t * &d.cy,
            w: &self.w + t * &d.w,
        }
    }
}

/// Change of `f_p` along the direction `d`.
fn df(p: &Point, d: &Lifted) -> Rational {
    -(int(2) * (&p.x * &d.cx + &p.y * &d.cy)) - &d.w
}

fn circumdisk(a: &Point, b: &Point, c: &Point) -> Option<Disk> {
    let det = orient(a, b, c) * int(2);
    if det.is_zero() {
        return None;
    }
    let (a2, b2, c2) = (a.dist2(&origin()), b.dist2(&origin()), c.dist2(&origin()));
    let ux = (&a2 * (&b.y - &c.y) + &b2 * (&c.y - &a.y) + &c2 * (&a.y - &b.y)) / &det;
    let uy = (&a2 * (&c.x - &b.x) + &b2 * (&a.x - &c.x) + &c2 * (&b.x - &a.x)) / &det;
    let center = Point::new(ux, uy);
    let r2 = center.dist2(a);
    Some(Disk { center, r2 })
}

fn origin() -> Point {
    Point::from_ints(0, 0)
}

/// Direction in `(c, w)` space that moves `f` by exactly `sigma[k]` at each
/// defining point. For three points this is a 3x3 solve; for two points the
/// center moves along the line through them.
fn direction(defining: &[&Point], sigma: &[i64]) -> Lifted {
    let s: Vec<Rational> = sigma.iter().map(|&v| int(v)).collect();
    if let [p, q] = defining {
        let (dx, dy) = (&p.x - &q.x, &p.y - &q.y);
        let lambda = (&s[1] - &s[0]) / (int(2) * p.dist2(q));
        let (cx, cy) = (&lambda * dx, &lambda * dy);
        let w = -(int(2) * (&p.x * &cx + &p.y * &cy)) - &s[0];
        return Lifted { cx, cy, w };
    }
    // Rows [-2 px, -2 py, -1] . (cx, cy, w) = s, solved by Cramer's rule.
    let rows: Vec<[Rational; 3]> = defining
        .iter()
        .map(|p| [int(-2) * &p.x, int(-2) * &p.y, int(-1)])
        .collect();
    let det3 = |m: &[[Rational; 3]]| -> Rational {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    };
    let d = det3(&rows);
    let solve = |col: usize| {
        let mut m = rows.clone();
        for (r, row) in m.iter_mut().enumerate() {
            row[col] = s[r].clone();
        }
        det3(&m) / &d
    };
    Lifted {
        cx: solve(0),
        cy: solve(1),
        w: solve(2),
    }
}

/// Every way of pushing the defining points strictly in or out of the disk,
/// plus the disk itself. Other points keep their side.
fn variants(base: &Disk, defining: &[&Point], all: &[&Point], stab: &Point, out: &mut Vec<Disk>) {
    out.push(base.clone());
    let lifted = Lifted::from_disk(base);
    let k = defining.len();
    for mask in 0..(1u32 << k) {
        let sigma: Vec<i64> = (0..k).map(|b| if mask >> b & 1 == 1 { 1 } else { -1 }).collect();
        if defining
            .iter()
            .zip(&sigma)
            .any(|(p, &s)| *p == stab && s > 0)
        {
            continue;
        }
        let dir = direction(defining, &sigma);
        let mut t = int(1);
        for p in all {
            let (f, d) = (lifted.f(p), df(p, &dir));
            if f.is_zero() || d.is_zero() {
                continue;
            }
            let limit = f.abs() / (int(2) * d.abs());
            if limit < t {
                t = limit;
            }
        }
        out.push(lifted.moved(&dir, &t).to_disk());
    }
}

/// Disks containing the stab point, one per distinct nonempty trace on `S`.
/// Candidates are circumdisks of three points and diametral disks of two
/// points of `S` plus the stab point, each nudged so that its defining points
/// fall strictly inside or outside in every combination. Every returned disk
/// is exact, so each trace is genuinely realized.
pub fn enumerate_stabbed_disks(points: &PointSet, stab: &Point) -> Result<StabbedDiskFamily> {
    if points.len() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "disk enumeration over {} points; limit is {ENUMERATION_LIMIT}",
            points.len()
        )));
    }
    let order = points.order(&PointOrder::AngularAbout(stab.clone()))?;
    let mut all: Vec<&Point> = points.points.iter().collect();
    all.push(stab);
    let mut candidates = Vec::new();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            let (p, q) = (all[a], all[b]);
            let center = Point::new((&p.x + &q.x) / int(2), (&p.y + &q.y) / int(2));
            let r2 = center.dist2(p);
            variants(&Disk { center, r2 }, &[p, q], &all, stab, &mut candidates);
            for c in b + 1..all.len() {
                if let Some(d) = circumdisk(p, q, all[c]) {
                    variants(&d, &[p, q, all[c]], &all, stab, &mut candidates);
                }
            }
        }
    }
    let mut by_trace: BTreeMap<Vec<usize>, Disk> = BTreeMap::new();
    for d in candidates {
        if !d.contains(stab) {
            continue;
        }
        let trace: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, &i)| d.contains(&points.points[i]))
            .map(|(pos, _)| pos)
            .collect();
        if !trace.is_empty() {
            by_trace.entry(trace).or_insert(d);
        }
    }
    StabbedDiskFamily::new(by_trace.into_values().collect(), stab.clone())
}

/// The trace hypergraph of all disks through `stab`, in angular order.
pub fn enumerate_stabbed_disk_hypergraph(points: &PointSet, stab: &Point) -> Result<OrderedHypergraph> {
    let family = enumerate_stabbed_disks(points, stab)?;
    hypergraph_from_stabbed_disks(points, &family)
}
