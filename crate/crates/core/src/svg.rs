//! SVG pictures of point sets with curves, disks or polygons.
//!
//! Drawing is the one place where floating point is used; all predicates
//! stay exact elsewhere.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::json::{CurvesDocument, DisksDocument, PolygonsDocument};
use crate::geometry::{PointOrder, PointSet, Rational};
use crate::hypergraph::Coloring;

pub const PALETTE: [&str; 3] = ["#e41a1c", "#377eb8", "#4daf4a"];
const CANVAS: f64 = 800.0;
const UNCOLORED: &str = "#000000";
const SHAPE_FILL: &str = "#999999";

/// Anything that can be drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scene {
    Curves(CurvesDocument),
    Disks(DisksDocument),
    Polygons(PolygonsDocument),
}

impl Scene {
    /// Picks the document type by its distinguishing key.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("curves").is_some() {
            Ok(Scene::Curves(CurvesDocument::from_json(text)?))
        } else if value.get("polygons").is_some() {
            Ok(Scene::Polygons(PolygonsDocument::from_json(text)?))
        } else if value.get("stab").is_some() {
            Ok(Scene::Disks(DisksDocument::from_json(text)?))
        } else {
            Err(Error::Invalid(
                "render expects a document with curves, disks or polygons".into(),
            ))
        }
    }

    fn points(&self) -> &PointSet {
        match self {
            Scene::Curves(d) => &d.points,
            Scene::Disks(d) => &d.points,
            Scene::Polygons(d) => &d.points,
        }
    }

    /// The vertex order of the hypergraph the scene defines, which is the
    /// order a coloring refers to.
    fn vertex_order(&self) -> Result<Vec<usize>> {
        match self {
            Scene::Disks(d) => self
                .points()
                .order(&PointOrder::AngularAbout(d.family.stab().clone())),
            _ => self.points().order(&PointOrder::XThenY),
        }
    }
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Viewport {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
    scale: f64,
}

impl Viewport {
    fn fit(xs: &[f64], ys: &[f64]) -> Self {
        let bounds = |v: &[f64]| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if lo.is_finite() {
                (lo, hi)
            } else {
                (0.0, 0.0)
            }
        };
        let pad = |(lo, hi): (f64, f64)| {
            let span = (hi - lo).max(1.0);
            let mid = (lo + hi) / 2.0;
            let half = span * 1.2 / 2.0;
            (mid - half, mid + half)
        };
        let (min_x, max_x) = pad(bounds(xs));
        let (min_y, max_y) = pad(bounds(ys));
        let scale = (CANVAS / (max_x - min_x)).min(CANVAS / (max_y - min_y));
        Self {
            min_x,
            max_x,
            min_y,
            max_y,
            scale,
        }
    }

    fn width(&self) -> f64 {
        (self.max_x - self.min_x) * self.scale
    }

    fn height(&self) -> f64 {
        (self.max_y - self.min_y) * self.scale
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.min_x) * self.scale, (self.max_y - y) * self.scale)
    }
}

/// Renders the scene. Points get the palette color of their class when a
/// coloring is given (classes past the palette are drawn black).
pub fn render_svg(scene: &Scene, coloring: Option<&Coloring>) -> Result<String> {
    let points = scene.points();
    let order = scene.vertex_order()?;
    if let Some(c) = coloring {
        if c.len() != points.len() {
            return Err(Error::LengthMismatch {
                expected: points.len(),
                got: c.len(),
            });
        }
    }
    let mut point_color = vec![UNCOLORED; points.len()];
    if let Some(c) = coloring {
        for (pos, &i) in order.iter().enumerate() {
            point_color[i] = PALETTE.get(c.color(pos)).copied().unwrap_or(UNCOLORED);
        }
    }

    let mut xs: Vec<f64> = points.points.iter().map(|p| f(&p.x)).collect();
    let mut ys: Vec<f64> = points.points.iter().map(|p| f(&p.y)).collect();
    match scene {
        Scene::Curves(d) => {
            for c in &d.family.curves {
                xs.extend(c.breakpoints().iter().map(|p| f(&p.x)));
                ys.extend(c.breakpoints().iter().map(|p| f(&p.y)));
                ys.push(f(c.left_y()));
                ys.push(f(c.right_y()));
            }
        }
        Scene::Disks(d) => {
            xs.push(f(&d.family.stab().x));
            ys.push(f(&d.family.stab().y));
            for disk in d.family.disks() {
                let r = f(&disk.r2).sqrt();
                let (cx, cy) = (f(&disk.center.x), f(&disk.center.y));
                xs.extend([cx - r, cx + r]);
                ys.extend([cy - r, cy + r]);
            }
        }
        Scene::Polygons(d) => {
            xs.push(f(&d.stab.x));
            ys.push(f(&d.stab.y));
            for poly in &d.polygons {
                xs.extend(poly.vertices().iter().map(|p| f(&p.x)));
                ys.extend(poly.vertices().iter().map(|p| f(&p.y)));
            }
        }
    }
    let view = Viewport::fit(&xs, &ys);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.2} {:.2}">"#,
        view.width().ceil(),
        view.height().ceil(),
        view.width(),
        view.height()
    );
    let coords = |pts: &[(f64, f64)]| {
        pts.iter()
            .map(|&(x, y)| {
                let (a, b) = view.px(x, y);
                format!("{a:.2},{b:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    match scene {
        Scene::Curves(d) => {
            for c in &d.family.curves {
                let mut pts = vec![(view.min_x, f(c.left_y()))];
                pts.extend(c.breakpoints().iter().map(|p| (f(&p.x), f(&p.y))));
                pts.push((view.max_x, f(c.right_y())));
                let _ = writeln!(
                    out,
                    r#"<polyline points="{}" fill="none" stroke="{SHAPE_FILL}" stroke-width="1.5"/>"#,
                    coords(&pts)
                );
            }
        }
        Scene::Disks(d) => {
            for disk in d.family.disks() {
                let (cx, cy) = view.px(f(&disk.center.x), f(&disk.center.y));
                let r = f(&disk.r2).sqrt() * view.scale;
                let _ = writeln!(
                    out,
                    r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="{SHAPE_FILL}" fill-opacity="0.3" stroke="{SHAPE_FILL}"/>"#
                );
            }
            stab_marker(&mut out, view.px(f(&d.family.stab().x), f(&d.family.stab().y)));
        }
        Scene::Polygons(d) => {
            for poly in &d.polygons {
                let pts: Vec<(f64, f64)> = poly.vertices().iter().map(|p| (f(&p.x), f(&p.y))).collect();
                let _ = writeln!(
                    out,
                    r#"<polygon points="{}" fill="{SHAPE_FILL}" fill-opacity="0.3" stroke="{SHAPE_FILL}"/>"#,
                    coords(&pts)
                );
            }
            stab_marker(&mut out, view.px(f(&d.stab.x), f(&d.stab.y)));
        }
    }
    for (p, color) in points.points.iter().zip(&point_color) {
        let (x, y) = view.px(f(&p.x), f(&p.y));
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn stab_marker(out: &mut String, (x, y): (f64, f64)) {
    let _ = writeln!(
        out,
        r##"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="none" stroke="#000000"/>"##
    );
}
