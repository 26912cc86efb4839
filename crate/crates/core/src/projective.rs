//! Fractional-linear maps of a parameterized line.
//!
//! A central projection between two parameterized lines acts on the line
//! parameter as `t ↦ (m00 t + m01) / (m10 t + m11)`. Composing the
//! projections around a polygon gives the return map whose fixed points are
//! the closed chains.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{Point, Segment, EPS};

/// A point of the projective line, `t = u / v`; `v = 0` is the point at
/// infinity. Stored with `u² + v² = 1` and `v ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjParam {
    u: f64,
    v: f64,
}

impl ProjParam {
    pub fn new(u: f64, v: f64) -> Result<ProjParam> {
        if !(u.is_finite() && v.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        if u == 0.0 && v == 0.0 {
            return Err(GeomError::DomainError("(0, 0) is not a projective point".into()));
        }
        Ok(Self::normalized(u, v))
    }

    fn normalized(u: f64, v: f64) -> ProjParam {
        let n = u.hypot(v);
        let (mut u, mut v) = (u / n, v / n);
        if v < 0.0 || (v == 0.0 && u < 0.0) {
            u = -u;
            v = -v;
        }
        ProjParam { u, v }
    }

    pub fn finite(t: f64) -> ProjParam {
        Self::normalized(t, 1.0)
    }

    pub fn infinity() -> ProjParam {
        ProjParam { u: 1.0, v: 0.0 }
    }

    pub fn homogeneous(&self) -> (f64, f64) {
        (self.u, self.v)
    }

    /// The affine value `u / v`, or `None` beyond `|t| ≈ 1e14`.
    pub fn value(&self) -> Option<f64> {
        (self.v.abs() > 1e-14).then(|| self.u / self.v)
    }

    pub fn is_infinite(&self, eps: f64) -> bool {
        self.v.abs() <= eps
    }

    /// Chordal distance: the sine of the angle between the two
    /// homogeneous representatives.
    pub fn chordal_distance(&self, other: &ProjParam) -> f64 {
        bracket(self, other).abs()
    }
}

fn bracket(x: &ProjParam, y: &ProjParam) -> f64 {
    x.u * y.v - x.v * y.u
}

/// `t ↦ (m00 t + m01) / (m10 t + m11)`, normalized so that the entry of
/// largest magnitude equals `1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap {
    m: [[f64; 2]; 2],
}

impl MoebiusMap {
    pub fn new(m00: f64, m01: f64, m10: f64, m11: f64) -> Result<MoebiusMap> {
        let m = [[m00, m01], [m10, m11]];
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let map = Self::normalized(m);
        if map.m.iter().flatten().all(|&x| x == 0.0) || map.det().abs() <= EPS {
            return Err(GeomError::SingularMap);
        }
        Ok(map)
    }

    fn normalized(m: [[f64; 2]; 2]) -> MoebiusMap {
        let mut big = 0.0f64;
        for &x in m.iter().flatten() {
            if x.abs() > big.abs() {
                big = x;
            }
        }
        if big == 0.0 {
            return MoebiusMap { m };
        }
        MoebiusMap {
            m: [[m[0][0] / big, m[0][1] / big], [m[1][0] / big, m[1][1] / big]],
        }
    }

    pub fn identity() -> MoebiusMap {
        MoebiusMap {
            m: [[1.0, 0.0], [0.0, 1.0]],
        }
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn apply(&self, t: ProjParam) -> ProjParam {
        let [[a, b], [c, d]] = self.m;
        ProjParam::normalized(a * t.u + b * t.v, c * t.u + d * t.v)
    }

    pub fn apply_value(&self, t: f64) -> ProjParam {
        self.apply(ProjParam::finite(t))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &MoebiusMap) -> MoebiusMap {
        compose(self, inner)
    }

    pub fn inverse(&self) -> MoebiusMap {
        let [[a, b], [c, d]] = self.m;
        Self::normalized([[d, -b], [-c, a]])
    }

    pub fn is_identity(&self, eps: f64) -> bool {
        let [[a, b], [c, d]] = self.m;
        b.abs() <= eps && c.abs() <= eps && (a - d).abs() <= eps
    }

    /// Equality up to a nonzero scalar, compared on unit-Frobenius
    /// representatives.
    pub fn projectively_close(&self, other: &MoebiusMap, tol: f64) -> bool {
        self.projective_distance(other) <= tol
    }

    pub fn projective_distance(&self, other: &MoebiusMap) -> f64 {
        let unit = |m: &MoebiusMap| {
            let n = m.m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
            m.m.iter().flatten().map(|x| x / n).collect::<Vec<_>>()
        };
        let (x, y) = (unit(self), unit(other));
        let plus = x.iter().zip(&y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let minus = x.iter().zip(&y).map(|(a, b)| (a + b).abs()).fold(0.0, f64::max);
        plus.min(minus)
    }

    pub fn fixed_points(&self, eps: f64) -> FixedPointResult {
        fixed_points(self, eps)
    }
}

/// Matrix product `outer · inner`, renormalized.
pub fn compose(outer: &MoebiusMap, inner: &MoebiusMap) -> MoebiusMap {
    let (p, q) = (outer.m, inner.m);
    let mut r = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
        }
    }
    MoebiusMap::normalized(r)
}

pub fn apply(m: &MoebiusMap, t: ProjParam) -> ProjParam {
    m.apply(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixedKind {
    Identity,
    Finite,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedPointResult {
    pub kind: FixedKind,
    /// Zero, one (parabolic double root) or two fixed points.
    pub points: Vec<ProjParam>,
}

impl FixedPointResult {
    pub fn is_identity(&self) -> bool {
        self.kind == FixedKind::Identity
    }
}

const PARABOLIC_TOL: f64 = 1e-13;

/// Roots of `m10 u² + (m11 - m00) u v - m01 v² = 0` on the projective line.
pub fn fixed_points(m: &MoebiusMap, eps: f64) -> FixedPointResult {
    if m.is_identity(eps) {
        return FixedPointResult {
            kind: FixedKind::Identity,
            points: Vec::new(),
        };
    }
    let [[m00, m01], [m10, m11]] = m.m;
    let (a, b, c) = (m10, m11 - m00, -m01);
    let disc = b * b - 4.0 * a * c;
    let scale = b * b + 4.0 * (a * c).abs();

    // The discriminant only carries rounding noise here; a relative cutoff
    // of `eps` would merge roots as far apart as sqrt(eps).
    let tol = PARABOLIC_TOL * scale;
    let points = if disc < -tol {
        Vec::new()
    } else if disc.abs() <= tol {
        let r1 = (-b, 2.0 * a);
        let r2 = (2.0 * c, -b);
        let (u, v) = if r1.0.hypot(r1.1) >= r2.0.hypot(r2.1) { r1 } else { r2 };
        vec![ProjParam::normalized(u, v)]
    } else {
        let s = disc.sqrt();
        let q = -0.5 * (b + if b >= 0.0 { s } else { -s });
        vec![ProjParam::normalized(q, a), ProjParam::normalized(c, q)]
    };
    FixedPointResult {
        kind: FixedKind::Finite,
        points,
    }
}

/// Central projection through `center` from the supporting line of `src` to
/// that of `dst`, in the segments' own parameters.
pub fn central_projection(center: Point, src: &Segment, dst: &Segment) -> Result<MoebiusMap> {
    for seg in [src, dst] {
        let d = seg.direction();
        let dist = d.cross(center - seg.start).abs() / d.norm();
        let scale = seg.length() + center.dist(seg.start);
        if dist <= EPS * scale {
            return Err(GeomError::CenterOnLine);
        }
    }
    let ds = src.direction();
    let dd = dst.direction();
    let u = src.start - center;
    let w = dst.start - center;
    MoebiusMap::new(-ds.cross(w), -u.cross(w), ds.cross(dd), u.cross(dd))
        .map_err(|_| GeomError::CenterOnLine)
}

/// Cross ratio with `(0, 1, ∞, t) ↦ t`; `∞` when the pairing collapses.
pub fn cross_ratio(a: ProjParam, b: ProjParam, c: ProjParam, d: ProjParam) -> Result<f64> {
    let pts = [a, b, c, d];
    let mut classes: Vec<ProjParam> = Vec::new();
    for p in pts {
        if !classes.iter().any(|q| q.chordal_distance(&p) <= EPS) {
            classes.push(p);
        }
    }
    if classes.len() < 3 {
        return Err(GeomError::TooManyCoincidences);
    }
    let num = bracket(&d, &a) * bracket(&b, &c);
    let den = bracket(&d, &c) * bracket(&b, &a);
    if den == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(num / den)
}
