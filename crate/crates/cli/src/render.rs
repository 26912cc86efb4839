//! Deterministic SVG figures.
//!
//! Outer polygons are black, inner points and polygons red, and up to four
//! solution polygons get fixed colors. The view box fits the drawn points
//! with a 5% margin; coordinates are printed with fixed precision so equal
//! inputs give byte-identical files.

use std::fmt::Write;

use inscribe_core::conic::mb_locus;
use inscribe_core::polyhedron::Point3;
use inscribe_core::{Line, Point};

use crate::doc::{Expected, InstanceDocument, Payload, ResultBody, ResultDocument};
use crate::{lines_of, AnyDocument, CliResult};

pub const SOLUTION_COLORS: [&str; 4] = ["#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"];
const EXTRA_COLOR: &str = "#7f7f7f";
const WIDTH: f64 = 800.0;
const MARGIN: f64 = 0.05;
const LOCUS_SAMPLES: usize = 720;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn project(self, p: Point3) -> Point {
        match self {
            Axis::X => Point::new(p.y, p.z),
            Axis::Y => Point::new(p.z, p.x),
            Axis::Z => Point::new(p.x, p.y),
        }
    }
}

enum Shape {
    Polygon { pts: Vec<Point>, stroke: String, width: f64 },
    Polyline { pts: Vec<Point>, stroke: String },
    Dot { at: Point, fill: String },
    /// Drawn across the view box; never enlarges it.
    Line { line: Line, stroke: String },
}

#[derive(Default)]
struct Scene {
    shapes: Vec<Shape>,
}

impl Scene {
    fn polygon(&mut self, pts: Vec<Point>, stroke: &str, width: f64) {
        self.shapes.push(Shape::Polygon {
            pts,
            stroke: stroke.into(),
            width,
        });
    }

    fn dots(&mut self, pts: &[Point], fill: &str) {
        for &at in pts {
            self.shapes.push(Shape::Dot { at, fill: fill.into() });
        }
    }

    fn bounds(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut add = |p: &Point| {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        };
        for s in &self.shapes {
            match s {
                Shape::Polygon { pts, .. } | Shape::Polyline { pts, .. } => pts.iter().for_each(&mut add),
                Shape::Dot { at, .. } => add(at),
                Shape::Line { .. } => {}
            }
        }
        if !lo.x.is_finite() {
            return (Point::new(-1.0, -1.0), Point::new(1.0, 1.0));
        }
        (lo, hi)
    }

    fn to_svg(&self) -> String {
        let (lo, hi) = self.bounds();
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let m = MARGIN * span;
        let (x0, y0) = (lo.x - m, lo.y - m);
        let (w, h) = (hi.x - lo.x + 2.0 * m, hi.y - lo.y + 2.0 * m);
        let scale = WIDTH / w;
        let height = (h * scale).max(1.0);
        let map = |p: Point| Point::new((p.x - x0) * scale, (y0 + h - p.y) * scale);
        let fmt = |p: Point| format!("{:.3},{:.3}", p.x, p.y);

        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.3} {height:.3}">"#
        )
        .unwrap();
        writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
        for s in &self.shapes {
            match s {
                Shape::Polygon { pts, stroke, width } => {
                    let pts: Vec<String> = pts.iter().map(|&p| fmt(map(p))).collect();
                    writeln!(
                        out,
                        r#"<polygon points="{}" fill="none" stroke="{stroke}" stroke-width="{width:.1}"/>"#,
                        pts.join(" ")
                    )
                    .unwrap();
                }
                Shape::Polyline { pts, stroke } => {
                    let pts: Vec<String> = pts.iter().map(|&p| fmt(map(p))).collect();
                    writeln!(
                        out,
                        r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="1.0"/>"#,
                        pts.join(" ")
                    )
                    .unwrap();
                }
                Shape::Dot { at, fill } => {
                    let q = map(*at);
                    writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="3.0" fill="{fill}"/>"#, q.x, q.y).unwrap();
                }
                Shape::Line { line, stroke } => {
                    // endpoints far outside the view box along the line
                    let reach = 4.0 * (w + h);
                    let c = Point::new(x0 + w / 2.0, y0 + h / 2.0);
                    let foot = c - line.normal() * line.eval(c);
                    let (a, b) = (foot - line.direction() * reach, foot + line.direction() * reach);
                    let (a, b) = (map(a), map(b));
                    writeln!(
                        out,
                        r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{stroke}" stroke-width="0.6" stroke-dasharray="4 3"/>"##,
                        a.x, a.y, b.x, b.y
                    )
                    .unwrap();
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn color(i: usize) -> &'static str {
    SOLUTION_COLORS.get(i).copied().unwrap_or(EXTRA_COLOR)
}

fn polygon_scene(outer: &[Point], inner: &[Point], solutions: &[Vec<Point>]) -> Scene {
    let mut scene = Scene::default();
    scene.polygon(outer.to_vec(), "black", 1.5);
    for (i, b) in solutions.iter().enumerate() {
        scene.polygon(b.clone(), color(i), 1.0);
    }
    scene.polygon(inner.to_vec(), "red", 1.0);
    scene.dots(inner, "red");
    scene
}

/// Splits the locus where it jumps (through infinity) or leaves the frame.
fn locus_pieces(pts: &[Point], lo: Point, hi: Point) -> Vec<Vec<Point>> {
    let span = (hi.x - lo.x).max(hi.y - lo.y);
    let pad = 0.25 * span;
    let inside = |p: &Point| p.x >= lo.x - pad && p.x <= hi.x + pad && p.y >= lo.y - pad && p.y <= hi.y + pad;
    let mut pieces: Vec<Vec<Point>> = Vec::new();
    let mut cur: Vec<Point> = Vec::new();
    for p in pts {
        let jump = cur.last().is_some_and(|q: &Point| q.dist(*p) > 0.5 * span);
        if !inside(p) || jump {
            if cur.len() > 1 {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.clear();
            if !inside(p) {
                continue;
            }
        }
        cur.push(*p);
    }
    if cur.len() > 1 {
        pieces.push(cur);
    }
    pieces
}

fn chain_scene(lines: &[Line], centers: &[Point], polygons: &[Vec<Point>], with_locus: bool) -> Scene {
    let mut scene = Scene::default();
    let corners: Vec<Point> = (0..lines.len())
        .filter_map(|i| lines[i].intersect(&lines[(i + 1) % lines.len()]).ok())
        .collect();
    scene.dots(&corners, "black");
    scene.dots(centers, "red");
    for (i, b) in polygons.iter().enumerate() {
        scene.polygon(b.clone(), color(i), 1.0);
    }
    // the frame is set by the points; the locus only fills it in
    let (lo, hi) = scene.bounds();
    if with_locus {
        if let Ok(pts) = mb_locus(lines, centers, LOCUS_SAMPLES) {
            for piece in locus_pieces(&pts, lo, hi) {
                scene.shapes.push(Shape::Polyline {
                    pts: piece,
                    stroke: "#1f77b4".into(),
                });
            }
        }
    }
    for &line in lines {
        scene.shapes.push(Shape::Line {
            line,
            stroke: "black".into(),
        });
    }
    scene
}

fn polyhedron_scene(
    vertices: &[Point3],
    faces: &[Vec<usize>],
    gamma: &[Vec<Point3>],
    graphs: &[Vec<inscribe_core::polyhedron::EdgeParam>],
    axis: Axis,
) -> Scene {
    let mut scene = Scene::default();
    for f in faces {
        scene.polygon(f.iter().map(|&v| axis.project(vertices[v])).collect(), "black", 1.0);
    }
    for g in gamma {
        scene.polygon(g.iter().map(|&p| axis.project(p)).collect(), "red", 0.8);
    }
    for (i, params) in graphs.iter().enumerate() {
        let at = |u: usize, v: usize| -> Option<Point3> {
            let (lo, hi) = (u.min(v), u.max(v));
            let p = params.iter().find(|p| p.edge == [lo, hi])?;
            Some(vertices[lo].lerp(vertices[hi], p.t))
        };
        for f in faces {
            let pts: Option<Vec<Point>> = (0..f.len())
                .map(|j| at(f[j], f[(j + 1) % f.len()]).map(|p| axis.project(p)))
                .collect();
            if let Some(pts) = pts {
                scene.polygon(pts, color(i), 1.0);
            }
        }
    }
    scene
}

fn instance_scene(doc: &InstanceDocument, axis: Axis) -> CliResult<Scene> {
    Ok(match &doc.payload {
        Payload::Polygon(p) => {
            let known: Vec<Vec<Point>> = match &doc.expected {
                Some(Expected::RegularFamily { polygons, .. }) => {
                    polygons.iter().map(|k| k.vertices.clone()).collect()
                }
                _ => Vec::new(),
            };
            polygon_scene(&p.outer, &p.inner, &known)
        }
        Payload::Polyhedron(p) => {
            let graphs = match &doc.expected {
                Some(Expected::InscribedGraphs { graphs }) => graphs.clone(),
                _ => Vec::new(),
            };
            polyhedron_scene(&p.vertices, &p.faces, &p.gamma, &graphs, axis)
        }
        Payload::ConicChain(p) => chain_scene(&lines_of(p)?, &p.points, &[], true),
        Payload::Generalized(p) => chain_scene(&lines_of(p)?, &p.points, &[], false),
    })
}

fn result_scene(doc: &ResultDocument, axis: Axis) -> CliResult<Scene> {
    let inst = &doc.instance;
    Ok(match (&inst.payload, &doc.result) {
        (Payload::Polygon(p), ResultBody::Polygon(r)) => {
            let sols: Vec<Vec<Point>> = r
                .solutions
                .iter()
                .map(|c| c.vertices.iter().flatten().copied().collect())
                .collect();
            polygon_scene(&p.outer, &p.inner, &sols)
        }
        (Payload::Polyhedron(p), ResultBody::Polyhedron(r)) => {
            let graphs: Vec<_> = r.solutions.iter().map(|s| s.edge_params.clone()).collect();
            polyhedron_scene(&p.vertices, &p.faces, &p.gamma, &graphs, axis)
        }
        (Payload::ConicChain(p), ResultBody::Conic(_)) => chain_scene(&lines_of(p)?, &p.points, &[], true),
        (Payload::Generalized(p), ResultBody::Generalized(r)) => {
            chain_scene(&lines_of(p)?, &p.points, &r.polygons, false)
        }
        _ => instance_scene(inst, axis)?,
    })
}

/// SVG text for an instance or result document.
pub fn render(doc: &AnyDocument, axis: Axis) -> CliResult<String> {
    let scene = match doc {
        AnyDocument::Instance(d) => instance_scene(d, axis)?,
        AnyDocument::Result(d) => result_scene(d, axis)?,
    };
    Ok(scene.to_svg())
}

