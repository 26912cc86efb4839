//! Regular-polygon families with four inscribed solutions, the general
//! split family with unit sides, and the ruler-and-compass construction of
//! the second split value.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{intersect_lines, line_through, ConvexPolygon, Line, Point, Segment, EPS};

/// Regular n-gon with side `2a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegularGonSpec {
    pub n: usize,
    pub a: f64,
    pub center: Point,
    /// Polar angle of `A_0` around the center.
    pub phase: f64,
}

impl RegularGonSpec {
    /// Centered at the origin with `A_0 A_1` horizontal and below the center.
    pub fn new(n: usize, a: f64) -> Result<RegularGonSpec> {
        let spec = RegularGonSpec {
            n,
            a,
            center: Point::new(0.0, 0.0),
            phase: if n > 0 { -PI / 2.0 - PI / n as f64 } else { 0.0 },
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<()> {
        if self.n < 3 {
            return Err(GeomError::TooFewVertices);
        }
        if !(self.a > 0.0) || !self.a.is_finite() {
            return Err(GeomError::DomainError(format!("a = {} must be positive", self.a)));
        }
        if !self.center.is_finite() || !self.phase.is_finite() {
            return Err(GeomError::NonFinite);
        }
        Ok(())
    }

    pub fn circumradius(&self) -> f64 {
        self.a / (PI / self.n as f64).sin()
    }

    pub fn vertices(&self) -> Vec<Point> {
        let r = self.circumradius();
        (0..self.n)
            .map(|k| {
                let ang = self.phase + 2.0 * PI * k as f64 / self.n as f64;
                self.center + Point::new(ang.cos(), ang.sin()) * r
            })
            .collect()
    }

    pub fn polygon(&self) -> Result<ConvexPolygon> {
        self.check()?;
        ConvexPolygon::new(self.vertices())
    }

    /// Midpoint `E_i` of side `A_i A_{i+1}`.
    pub fn side_midpoint(&self, i: usize) -> Point {
        let v = self.vertices();
        v[i % self.n].midpoint(v[(i + 1) % self.n])
    }
}

fn sin_pi_n(n: usize) -> f64 {
    (PI / n as f64).sin()
}

fn cos_pi_n(n: usize) -> f64 {
    (PI / n as f64).cos()
}

fn sin_2pi_n(n: usize) -> f64 {
    (2.0 * PI / n as f64).sin()
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        Err(GeomError::TooFewVertices)
    } else {
        Ok(())
    }
}

/// Distance `|C_i E_i|` for split `x = |A_i B_i|` in a regular n-gon of side `2a`.
pub fn f_height(n: usize, a: f64, x: f64) -> Result<f64> {
    check_n(n)?;
    if !(a > 0.0) || !(x > 0.0 && x < a) {
        return Err(GeomError::DomainError(format!("need 0 < x < a, got x = {x}, a = {a}")));
    }
    let s2 = sin_pi_n(n).powi(2);
    Ok(x * (a - x) * sin_2pi_n(n) / (2.0 * a - 2.0 * x * s2))
}

/// The two split values with equal height.
pub fn example1_x_values(n: usize, a: f64) -> [f64; 2] {
    [a / 2.0, a / (1.0 + cos_pi_n(n).powi(2))]
}

/// Common height of the two split values.
pub fn example1_common_height(n: usize, a: f64) -> f64 {
    a * sin_2pi_n(n) / (4.0 * (1.0 + cos_pi_n(n).powi(2)))
}

/// The split value whose conjugate is itself.
pub fn self_conjugate_x(n: usize, a: f64) -> f64 {
    a / (1.0 + cos_pi_n(n))
}

/// The other root of `f(x) = f(x0)`, from the product of roots of
/// `sin(2π/n) x² − (a sin(2π/n) + 2h sin²(π/n)) x + 2ah = 0`.
pub fn conjugate_x_construction(n: usize, a: f64, x0: f64) -> Result<f64> {
    let h = f_height(n, a, x0)?;
    Ok(2.0 * a * h / (sin_2pi_n(n) * x0))
}

/// One of the four known solutions of a regular instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnownPolygon {
    pub x: f64,
    pub mirrored: bool,
    pub shift: usize,
    pub params: Vec<f64>,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example1Family {
    pub spec: RegularGonSpec,
    pub outer: ConvexPolygon,
    pub inner: Vec<Point>,
    pub x_values: [f64; 2],
    pub polygons: Vec<KnownPolygon>,
    /// Worst distance of a `C_i` from its designated `B` side over all four polygons.
    pub incidence_residual: f64,
}

fn polygon_at(outer: &ConvexPolygon, params: &[f64]) -> Vec<Point> {
    params
        .iter()
        .enumerate()
        .map(|(i, &t)| outer.side(i).point_at(t))
        .collect()
}

/// Builds the regular instance: `C_i = OE_i ∩ B_i B_{i+1}` from the first
/// split value, plus the four solutions (two splits and their mirrors
/// across the lines `OE_i`).
pub fn make_regular_instance(spec: &RegularGonSpec) -> Result<Example1Family> {
    let outer = spec.polygon()?;
    let n = spec.n;
    let side = 2.0 * spec.a;
    let x_values = example1_x_values(n, spec.a);

    let base: Vec<Point> = polygon_at(&outer, &vec![x_values[0] / side; n]);
    let inner = (0..n)
        .map(|i| {
            let oe = line_through(spec.center, spec.side_midpoint(i))?;
            let bb = line_through(base[i], base[(i + 1) % n])?;
            intersect_lines(&oe, &bb)
        })
        .collect::<Result<Vec<Point>>>()?;

    let mut polygons = Vec::with_capacity(4);
    for &x in &x_values {
        for mirrored in [false, true] {
            let t = if mirrored { 1.0 - x / side } else { x / side };
            let params = vec![t; n];
            polygons.push(KnownPolygon {
                x,
                mirrored,
                shift: if mirrored { n - 1 } else { 0 },
                vertices: polygon_at(&outer, &params),
                params,
            });
        }
    }

    let mut incidence_residual: f64 = 0.0;
    for p in &polygons {
        for (i, &c) in inner.iter().enumerate() {
            let from = p.vertices[(p.shift + i) % n];
            let to = p.vertices[(p.shift + i + 1) % n];
            incidence_residual = incidence_residual.max(line_through(from, to)?.eval(c).abs());
        }
    }

    Ok(Example1Family {
        spec: *spec,
        outer,
        inner,
        x_values,
        polygons,
        incidence_residual,
    })
}

fn check_unit_split(a: f64) -> Result<()> {
    if !(a > 0.0 && a < 1.0) {
        return Err(GeomError::DomainError(format!("foot distance a = {a} must be in (0, 1)")));
    }
    Ok(())
}

/// `f(a, x)` for a unit side split at the foot `E_i` with `|A_i E_i| = a`.
pub fn example2_height(n: usize, a: f64, x: f64) -> Result<f64> {
    check_n(n)?;
    check_unit_split(a)?;
    if !(x > 0.0 && x < a) {
        return Err(GeomError::DomainError(format!("need 0 < x < a, got x = {x}")));
    }
    let den = 1.0 - 2.0 * x * sin_pi_n(n).powi(2);
    if den.abs() <= EPS {
        return Err(GeomError::SingularDenominator);
    }
    Ok(x * (a - x) * sin_2pi_n(n) / den)
}

/// Conjugate split `y` with `f(a, y) = f(a, x)`.
pub fn example2_y(n: usize, a: f64, x: f64) -> Result<f64> {
    check_n(n)?;
    let den = 1.0 - 2.0 * x * sin_pi_n(n).powi(2);
    if den.abs() <= EPS {
        return Err(GeomError::SingularDenominator);
    }
    Ok((a - x) / den)
}

/// Fixed point of `x ↦ example2_y(n, a, x)`.
pub fn example2_self_conjugate(n: usize, a: f64) -> f64 {
    let s2 = sin_pi_n(n).powi(2);
    (1.0 - (1.0 - 2.0 * a * s2).sqrt()) / (2.0 * s2)
}

/// The two splits `z < t` of the other part of the side (length `1 − a`)
/// with `f(1 − a, u) = f(a, x)`.
pub fn example2_zt(n: usize, a: f64, x: f64) -> Result<(f64, f64)> {
    let h = example2_height(n, a, x)?;
    let s2 = sin_pi_n(n).powi(2);
    let sn = sin_2pi_n(n);
    let b = sn * (1.0 - a) + 2.0 * h * s2;
    let disc = b * b - 4.0 * sn * h;
    if disc < -EPS * b * b {
        return Err(GeomError::NoRealRoots);
    }
    let r = disc.max(0.0).sqrt();
    let q = 0.5 * (b + r);
    let (mut z, mut t) = (h / q, q / sn);
    if z > t {
        std::mem::swap(&mut z, &mut t);
    }
    let b_len = 1.0 - a;
    if !(z > 0.0 && t < b_len) {
        return Err(GeomError::RootsOutOfRange);
    }
    Ok((z, t))
}

/// Residual of `x + y + z + t − 2(xy + zt) sin²(π/n) − 1`.
pub fn example2_sum_residual(n: usize, x: f64, y: f64, z: f64, t: f64) -> f64 {
    x + y + z + t - 2.0 * (x * y + z * t) * sin_pi_n(n).powi(2) - 1.0
}

/// Whether one split quadruple satisfies the closing relation for both
/// orders `n` and `m`.
pub fn mixed_mn_check(n: usize, m: usize, x: f64, y: f64, z: f64, t: f64) -> Result<bool> {
    check_n(n)?;
    check_n(m)?;
    if n == m {
        return Err(GeomError::SameOrder);
    }
    let tol = 1e-9;
    Ok(example2_sum_residual(n, x, y, z, t).abs() <= tol
        && example2_sum_residual(m, x, y, z, t).abs() <= tol)
}

/// Intermediate points of the construction on side `A_0 A_1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionPoints {
    pub o: Point,
    pub a_i: Point,
    pub a_next: Point,
    pub a_next2: Point,
    pub e_i: Point,
    pub c: Point,
    pub d: Point,
    pub g: Point,
    pub f: Point,
    pub b: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum AppendixATrace {
    General {
        n: usize,
        a: f64,
        points: ConstructionPoints,
        x: f64,
    },
    /// For the square the value `2a/3` is drawn directly.
    Square { a: f64, x: f64 },
}

impl AppendixATrace {
    pub fn x(&self) -> f64 {
        match *self {
            AppendixATrace::General { x, .. } | AppendixATrace::Square { x, .. } => x,
        }
    }
}

fn foot_on(p: Point, l: &Line) -> Point {
    p - l.normal() * l.eval(p)
}

/// Executes the ruler-and-compass steps for `|A_i B_i| = a / (1 + cos²(π/n))`.
pub fn construct_appendix_a(n: usize, a: f64) -> Result<AppendixATrace> {
    let spec = RegularGonSpec::new(n, a)?;
    if n == 4 {
        return Ok(AppendixATrace::Square { a, x: 2.0 * a / 3.0 });
    }
    let v = spec.vertices();
    let (o, a_i, a_next, a_next2) = (spec.center, v[0], v[1], v[2]);
    let e_i = a_i.midpoint(a_next);

    let c = foot_on(e_i, &line_through(o, a_i)?);
    let d = foot_on(c, &line_through(a_i, a_next)?);

    // circle about A_{i+1} through E_i against line A_{i+1} A_{i+2}
    let radius = a_next.dist(e_i);
    let toward = Segment::new(a_next, a_next2)?;
    let unit = toward.direction() * (1.0 / toward.length());
    let g = [radius, -radius]
        .into_iter()
        .map(|s| a_next + unit * s)
        .find(|&p| toward.param_of(p).map(|t| t < 0.0).unwrap_or(false))
        .ok_or_else(|| GeomError::DomainError("circle misses the side line".into()))?;

    let dg = line_through(d, g)?;
    let (da, db, _) = dg.coeffs();
    let parallel = Line::new(da, db, -(da * e_i.x + db * e_i.y))?;
    let f = intersect_lines(&parallel, &toward.line())?;

    let r = a_next.dist(f);
    let b = a_i + (a_next - a_i) * (r / a_i.dist(a_next));
    Ok(AppendixATrace::General {
        n,
        a,
        points: ConstructionPoints {
            o,
            a_i,
            a_next,
            a_next2,
            e_i,
            c,
            d,
            g,
            f,
            b,
        },
        x: a_i.dist(b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_height_triangle_value() {
        assert!((f_height(3, 1.0, 0.5).unwrap() - 0.173_205_080_756_887_7).abs() < 1e-12);
    }

    #[test]
    fn f_height_rejects_out_of_range() {
        assert!(f_height(3, 1.0, 0.0).is_err());
        assert!(f_height(3, 1.0, 1.0).is_err());
        assert!(f_height(2, 1.0, 0.5).is_err());
    }

    #[test]
    fn example2_y_square() {
        assert!((example2_y(4, 0.5, 0.25).unwrap() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn same_order_is_guarded() {
        assert_eq!(mixed_mn_check(5, 5, 0.1, 0.2, 0.3, 0.4), Err(GeomError::SameOrder));
    }

    #[test]
    fn square_construction_is_special() {
        let t = construct_appendix_a(4, 1.5).unwrap();
        assert!(matches!(t, AppendixATrace::Square { .. }));
        assert!((t.x() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn phase_makes_first_side_horizontal() {
        let v = RegularGonSpec::new(7, 1.0).unwrap().vertices();
        assert!((v[0].y - v[1].y).abs() < 1e-12);
        assert!((v[0].dist(v[1]) - 2.0).abs() < 1e-12);
    }
}
