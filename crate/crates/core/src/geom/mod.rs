//! Planar primitives with a single relative tolerance.
//!
//! Predicates compare against `EPS` scaled by the size of the inputs, so the
//! same tolerance works for unit-scale and desk-scale coordinates alike.

mod cevian;

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

pub use cevian::lemma21_ratios;

/// Default relative tolerance for all geometric predicates.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    pub fn midpoint(self, o: Point) -> Point {
        self.lerp(o, 0.5)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn homogeneous(self) -> [f64; 3] {
        [self.x, self.y, 1.0]
    }
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point::new(a[0], a[1])
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A finite line `a x + b y + c = 0`, normalized so that `a² + b² = 1`.
///
/// Lines are unoriented: the sign is fixed so that the first clearly
/// nonzero of `a`, `b` is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Line> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let n = a.hypot(b);
        if n <= EPS * (1.0 + c.abs()) {
            return Err(GeomError::LineAtInfinity);
        }
        let (mut a, mut b, mut c) = (a / n, b / n, c / n);
        let flip = if a.abs() > 1e-15 { a < 0.0 } else { b < 0.0 };
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    pub fn coeffs(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    pub fn homogeneous(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Signed distance of `p` from the line.
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    /// Unit direction vector.
    pub fn direction(&self) -> Point {
        Point::new(-self.b, self.a)
    }

    /// The point of the line closest to the origin.
    pub fn foot(&self) -> Point {
        Point::new(-self.a * self.c, -self.b * self.c)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.eval(p).abs() <= tol * (1.0 + p.norm())
    }

    pub fn intersect(&self, other: &Line) -> Result<Point> {
        intersect_lines(self, other)
    }

    /// The line as a parameterized segment from its foot with unit speed.
    pub fn as_segment(&self) -> Segment {
        let p = self.foot();
        Segment {
            start: p,
            end: p + self.direction(),
        }
    }
}

impl TryFrom<[f64; 3]> for Line {
    type Error = GeomError;
    fn try_from(v: [f64; 3]) -> Result<Line> {
        Line::new(v[0], v[1], v[2])
    }
}

impl From<Line> for [f64; 3] {
    fn from(l: Line) -> Self {
        [l.a, l.b, l.c]
    }
}

fn coincidence_scale(p: Point, q: Point) -> f64 {
    1.0 + p.norm().max(q.norm())
}

pub fn line_through(p: Point, q: Point) -> Result<Line> {
    if !(p.is_finite() && q.is_finite()) {
        return Err(GeomError::NonFinite);
    }
    let d = q - p;
    if d.norm() <= EPS * coincidence_scale(p, q) {
        return Err(GeomError::CoincidentPoints);
    }
    let n = d.perp();
    Line::new(n.x, n.y, -n.dot(p))
}

pub fn intersect_lines(l1: &Line, l2: &Line) -> Result<Point> {
    let det = l1.a * l2.b - l2.a * l1.b;
    if det.abs() <= EPS {
        return Err(GeomError::ParallelLines);
    }
    Ok(Point::new(
        (l1.b * l2.c - l2.b * l1.c) / det,
        (l1.c * l2.a - l2.c * l1.a) / det,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    orientation_eps(p, q, r, EPS)
}

/// Sign of `(q - p) × (r - p)`; collinear when the magnitude is below `eps`
/// times the product of the two longest side lengths of the triangle.
pub fn orientation_eps(p: Point, q: Point, r: Point, eps: f64) -> Orientation {
    let cr = (q - p).cross(r - p);
    let mut sides = [p.dist(q), q.dist(r), r.dist(p)];
    sides.sort_by(f64::total_cmp);
    let scale = sides[2] * sides[1];
    if cr.abs() <= eps * scale {
        Orientation::Collinear
    } else if cr > 0.0 {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

pub fn reflect_point(p: Point, l: &Line) -> Point {
    p - l.normal() * (2.0 * l.eval(p))
}

/// A segment parameterized as `(1 - t)·start + t·end`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Result<Segment> {
        if !(start.is_finite() && end.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        if start.dist(end) <= EPS * coincidence_scale(start, end) {
            return Err(GeomError::CoincidentPoints);
        }
        Ok(Segment { start, end })
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.start.lerp(self.end, t)
    }

    pub fn direction(&self) -> Point {
        self.end - self.start
    }

    pub fn length(&self) -> f64 {
        self.direction().norm()
    }

    pub fn line(&self) -> Line {
        line_through(self.start, self.end).expect("segment endpoints are distinct")
    }

    pub fn param_of(&self, p: Point) -> Result<f64> {
        segment_param(p, self)
    }
}

/// Parameter of `p` along `seg`; `p` must lie on the supporting line.
pub fn segment_param(p: Point, seg: &Segment) -> Result<f64> {
    let d = seg.direction();
    let len2 = d.dot(d);
    let w = p - seg.start;
    let distance = d.cross(w).abs() / len2.sqrt();
    let scale = len2.sqrt() + w.norm() + seg.start.norm();
    if distance > EPS * scale {
        return Err(GeomError::OffLine { distance });
    }
    Ok(d.dot(w) / len2)
}

/// Is `t` strictly inside `(0, 1)` with margin `eps`?
pub fn strictly_interior(t: f64, eps: f64) -> bool {
    t >= eps && t <= 1.0 - eps
}

/// A strictly convex polygon with counterclockwise vertex order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<ConvexPolygon> {
        Self::with_tolerance(vertices, EPS)
    }

    pub fn with_tolerance(vertices: Vec<Point>, eps: f64) -> Result<ConvexPolygon> {
        check_convex_ccw(&vertices, eps)?;
        Ok(ConvexPolygon { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex `i` modulo `n`.
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Side `i` runs from vertex `i` to vertex `i + 1`.
    pub fn side(&self, i: usize) -> Segment {
        Segment {
            start: self.vertex(i),
            end: self.vertex(i + 1),
        }
    }

    pub fn side_line(&self, i: usize) -> Line {
        self.side(i).line()
    }

    pub fn centroid(&self) -> Point {
        let n = self.vertices.len() as f64;
        let s = self
            .vertices
            .iter()
            .fold(Point::default(), |acc, &p| acc + p);
        s * (1.0 / n)
    }

    /// Largest distance from the vertex centroid; a size for relative tolerances.
    pub fn scale(&self) -> f64 {
        let c = self.centroid();
        self.vertices.iter().map(|p| p.dist(c)).fold(0.0, f64::max)
    }

    pub fn contains_strict(&self, p: Point, eps: f64) -> bool {
        (0..self.len()).all(|i| {
            orientation_eps(self.vertex(i), self.vertex(i + 1), p, eps)
                == Orientation::CounterClockwise
        })
    }
}

impl TryFrom<Vec<Point>> for ConvexPolygon {
    type Error = GeomError;
    fn try_from(v: Vec<Point>) -> Result<Self> {
        ConvexPolygon::new(v)
    }
}

impl From<ConvexPolygon> for Vec<Point> {
    fn from(p: ConvexPolygon) -> Self {
        p.vertices
    }
}

/// Strict convexity with counterclockwise order: every consecutive triple
/// turns left and the boundary winds exactly once.
pub fn check_convex_ccw(vertices: &[Point], eps: f64) -> Result<()> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices);
    }
    if vertices.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::NonFinite);
    }
    for i in 0..n {
        let (p, q) = (vertices[i], vertices[(i + 1) % n]);
        if p.dist(q) <= eps * coincidence_scale(p, q) {
            return Err(GeomError::CoincidentPoints);
        }
    }
    let mut turning = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        let r = vertices[(i + 2) % n];
        if orientation_eps(p, q, r, eps) != Orientation::CounterClockwise {
            return Err(GeomError::NotConvex { index: (i + 1) % n });
        }
        let (u, v) = (q - p, r - q);
        turning += u.cross(v).atan2(u.dot(v));
    }
    if (turning - std::f64::consts::TAU).abs() > 1e-6 {
        return Err(GeomError::NotConvex { index: 0 });
    }
    Ok(())
}

/// Cross product of homogeneous triples: the join of two points or the
/// meet of two lines.
pub fn hcross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn hnormalize(a: [f64; 3]) -> [f64; 3] {
    let n = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    if n == 0.0 {
        a
    } else {
        [a[0] / n, a[1] / n, a[2] / n]
    }
}

pub fn hdet(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    let x = hcross(b, c);
    a[0] * x[0] + a[1] * x[1] + a[2] * x[2]
}

/// Determinant of three unit-normalized homogeneous triples. Zero iff the
/// points are collinear (or the lines concurrent), including at infinity.
pub fn hcollinearity(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    hdet(hnormalize(a), hnormalize(b), hnormalize(c)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn line_through_axis_cases() {
        let l = line_through(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).unwrap();
        assert_eq!(l.coeffs(), (0.0, 1.0, 0.0));
        let l = line_through(Point::new(0.0, 0.0), Point::new(0.0, 1.0)).unwrap();
        let (a, b, c) = l.coeffs();
        assert!(close(a, 1.0) && close(b, 0.0) && close(c, 0.0));
    }

    #[test]
    fn line_through_diagonal_is_normalized() {
        let l = line_through(Point::new(1.0, 0.0), Point::new(0.0, 1.0)).unwrap();
        let (a, b, c) = l.coeffs();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!(close(a, r) && close(b, r) && close(c, -r));
        assert!(l.eval(Point::new(1.0, 0.0)).abs() < 1e-15);
        assert!(l.eval(Point::new(0.0, 1.0)).abs() < 1e-15);
    }

    #[test]
    fn line_through_coincident_points_fails() {
        let p = Point::new(3.0, 4.0);
        assert_eq!(line_through(p, p), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn intersections() {
        let x0 = Line::new(1.0, 0.0, 0.0).unwrap();
        let y0 = Line::new(0.0, 1.0, 0.0).unwrap();
        let y1 = Line::new(0.0, 1.0, -1.0).unwrap();
        assert_eq!(intersect_lines(&x0, &y0).unwrap(), Point::new(0.0, 0.0));
        assert_eq!(intersect_lines(&y0, &y1), Err(GeomError::ParallelLines));
        let l1 = Line::new(1.0, 1.0, -1.0).unwrap();
        let l2 = Line::new(1.0, -1.0, 0.0).unwrap();
        let p = intersect_lines(&l1, &l2).unwrap();
        assert!(close(p.x, 0.5) && close(p.y, 0.5));
    }

    #[test]
    fn orientation_cases() {
        let o = Point::new(0.0, 0.0);
        let e1 = Point::new(1.0, 0.0);
        let e2 = Point::new(0.0, 1.0);
        assert_eq!(orientation(o, e1, e2), Orientation::CounterClockwise);
        assert_eq!(orientation(o, e1, Point::new(2.0, 0.0)), Orientation::Collinear);
        assert_eq!(orientation(o, e2, e1), Orientation::Clockwise);
    }

    #[test]
    fn segment_params() {
        let s = Segment::new(Point::new(0.0, 0.0), Point::new(2.0, 0.0)).unwrap();
        assert!(close(segment_param(Point::new(1.0, 0.0), &s).unwrap(), 0.5));
        assert!(close(segment_param(s.start, &s).unwrap(), 0.0));
        assert!(close(segment_param(Point::new(3.0, 0.0), &s).unwrap(), 1.5));
        assert!(matches!(
            segment_param(Point::new(1.0, 0.1), &s),
            Err(GeomError::OffLine { .. })
        ));
    }

    #[test]
    fn reflections() {
        let x0 = Line::new(1.0, 0.0, 0.0).unwrap();
        let r = reflect_point(Point::new(1.0, 0.0), &x0);
        assert!(close(r.x, -1.0) && close(r.y, 0.0));
        let on = Point::new(0.0, 7.0);
        assert_eq!(reflect_point(on, &x0), on);
        let diag = Line::new(1.0, -1.0, 0.0).unwrap();
        let r = reflect_point(Point::new(1.0, 1.0), &diag);
        assert!(close(r.x, 1.0) && close(r.y, 1.0));
    }

    #[test]
    fn convex_polygon_checks() {
        let sq = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        let p = ConvexPolygon::new(sq.clone()).unwrap();
        assert!(p.contains_strict(Point::new(0.5, 0.5), EPS));
        assert!(!p.contains_strict(Point::new(1.0, 0.5), EPS));

        let mut cw = sq.clone();
        cw.reverse();
        assert!(matches!(ConvexPolygon::new(cw), Err(GeomError::NotConvex { .. })));
        assert_eq!(ConvexPolygon::new(sq[..2].to_vec()), Err(GeomError::TooFewVertices));

        let mut collinear = sq.clone();
        collinear.insert(1, Point::new(0.5, 0.0));
        assert!(matches!(
            ConvexPolygon::new(collinear),
            Err(GeomError::NotConvex { .. })
        ));

        // pentagram: every turn is left but it winds twice
        let star: Vec<Point> = (0..5)
            .map(|k| {
                let a = std::f64::consts::TAU * (2 * k) as f64 / 5.0;
                Point::new(a.cos(), a.sin())
            })
            .collect();
        assert!(ConvexPolygon::new(star).is_err());
    }

    #[test]
    fn homogeneous_collinearity_handles_infinity() {
        let p = [1.0, 0.0, 0.0];
        let q = [0.0, 1.0, 0.0];
        let r = [1.0, 1.0, 0.0];
        assert!(hcollinearity(p, q, r) < 1e-15);
        assert!(hcollinearity([0.0, 0.0, 1.0], p, q) > 0.5);
    }
}
