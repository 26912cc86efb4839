//! Conics through five points, conic-line intersection and the loci traced
//! by chains of lines pivoting about fixed points.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{hcollinearity, hcross, intersect_lines, line_through, Line, Point};
use crate::polygon::{polygon_from_start, PolygonInstance, SolutionPolygon, SolverConfig};

/// `α x² + β xy + γ y² + δ x + ε y + ζ = 0`, unit coefficient norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 6]", into = "[f64; 6]")]
pub struct Conic {
    coef: [f64; 6],
}

impl TryFrom<[f64; 6]> for Conic {
    type Error = GeomError;
    fn try_from(c: [f64; 6]) -> Result<Conic> {
        Conic::new(c)
    }
}

impl From<Conic> for [f64; 6] {
    fn from(c: Conic) -> Self {
        c.coef
    }
}

impl Conic {
    pub fn new(coef: [f64; 6]) -> Result<Conic> {
        if coef.iter().any(|c| !c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let n = coef.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n == 0.0 {
            return Err(GeomError::RankDeficient);
        }
        let lead = coef
            .iter()
            .copied()
            .find(|c| c.abs() > 1e-12 * n)
            .unwrap_or(1.0);
        let s = lead.signum() / n;
        Ok(Conic {
            coef: coef.map(|c| c * s),
        })
    }

    pub fn unit_circle() -> Conic {
        Conic::new([1.0, 0.0, 1.0, 0.0, 0.0, -1.0]).expect("nonzero")
    }

    pub fn coefficients(&self) -> [f64; 6] {
        self.coef
    }

    pub fn eval(&self, p: Point) -> f64 {
        let [a, b, c, d, e, f] = self.coef;
        a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f
    }

    /// `|Q(p)| / (1 + |p|²)`: scale-aware membership measure.
    pub fn residual(&self, p: Point) -> f64 {
        self.eval(p).abs() / (1.0 + p.dot(p))
    }

    /// Symmetric matrix `M` with `Q(x, y) = [x y 1] M [x y 1]ᵀ`.
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        let [a, b, c, d, e, f] = self.coef;
        [
            [a, b / 2.0, d / 2.0],
            [b / 2.0, c, e / 2.0],
            [d / 2.0, e / 2.0, f],
        ]
    }

    pub fn determinant(&self) -> f64 {
        let m = self.matrix();
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Rank of the matrix below 3 (line pairs, double lines).
    pub fn is_degenerate(&self, tol: f64) -> bool {
        self.determinant().abs() <= tol
    }

    /// Distance between coefficient vectors up to sign.
    pub fn coefficient_distance(&self, other: &Conic) -> f64 {
        let plus: f64 = self.coef.iter().zip(&other.coef).map(|(a, b)| (a - b).powi(2)).sum();
        let minus: f64 = self.coef.iter().zip(&other.coef).map(|(a, b)| (a + b).powi(2)).sum();
        plus.min(minus).sqrt()
    }

    /// `(A, B, C)` of `Q(p + s d) = A s² + B s + C`.
    fn restrict(&self, p: Point, d: Point) -> (f64, f64, f64) {
        let m = self.matrix();
        let ph = [p.x, p.y, 1.0];
        let dh = [d.x, d.y, 0.0];
        let form = |u: &[f64; 3], v: &[f64; 3]| {
            (0..3)
                .map(|i| (0..3).map(|j| u[i] * m[i][j] * v[j]).sum::<f64>())
                .sum::<f64>()
        };
        (form(&dh, &dh), 2.0 * form(&dh, &ph), form(&ph, &ph))
    }
}

/// Full-pivot elimination for the one-dimensional null space of a 5×6 system.
fn null_vector(mut m: [[f64; 6]; 5]) -> Result<[f64; 6]> {
    let mut colscale = [0.0f64; 6];
    for (j, s) in colscale.iter_mut().enumerate() {
        *s = (0..5).map(|i| m[i][j].abs()).fold(0.0, f64::max);
        if *s == 0.0 {
            *s = 1.0;
        }
        for row in m.iter_mut() {
            row[j] /= *s;
        }
    }
    let mut cols: [usize; 6] = [0, 1, 2, 3, 4, 5];
    let mut first_pivot = 0.0;
    for r in 0..5 {
        let (mut bi, mut bj, mut best) = (r, r, -1.0);
        for (i, row) in m.iter().enumerate().skip(r) {
            for j in r..6 {
                let v = row[cols[j]].abs();
                if v > best {
                    (bi, bj, best) = (i, j, v);
                }
            }
        }
        if r == 0 {
            first_pivot = best;
        }
        if best <= 1e-8 * first_pivot || best == 0.0 {
            return Err(GeomError::RankDeficient);
        }
        m.swap(r, bi);
        cols.swap(r, bj);
        let pc = cols[r];
        for i in r + 1..5 {
            let factor = m[i][pc] / m[r][pc];
            for &c in &cols[r..] {
                m[i][c] -= factor * m[r][c];
            }
        }
    }
    let mut x = [0.0f64; 6];
    x[cols[5]] = 1.0;
    for r in (0..5).rev() {
        let pc = cols[r];
        let s: f64 = cols[r + 1..].iter().map(|&c| m[r][c] * x[c]).sum();
        x[pc] = -s / m[r][pc];
    }
    for (v, s) in x.iter_mut().zip(colscale) {
        *v /= s;
    }
    Ok(x)
}

/// The conic through five points.
pub fn conic_through_5(points: &[Point; 5]) -> Result<Conic> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::NonFinite);
    }
    // fit in centered, unit-scaled coordinates
    let cx = points.iter().map(|p| p.x).sum::<f64>() / 5.0;
    let cy = points.iter().map(|p| p.y).sum::<f64>() / 5.0;
    let s = points
        .iter()
        .map(|p| (p.x - cx).abs().max((p.y - cy).abs()))
        .fold(0.0, f64::max);
    if s == 0.0 {
        return Err(GeomError::RankDeficient);
    }
    let mut m = [[0.0; 6]; 5];
    for (row, p) in m.iter_mut().zip(points) {
        let (x, y) = ((p.x - cx) / s, (p.y - cy) / s);
        *row = [x * x, x * y, y * y, x, y, 1.0];
    }
    denormalize(null_vector(m)?, Point::new(cx, cy), s)
}

/// Coefficients in `(x, y)` of a conic given in `((x - c.x) / s, (y - c.y) / s)`.
fn denormalize(coef: [f64; 6], c: Point, s: f64) -> Result<Conic> {
    let [a, b, cc, d, e, f] = coef;
    let (cx, cy) = (c.x, c.y);
    let s2 = s * s;
    Conic::new([
        a / s2,
        b / s2,
        cc / s2,
        (-2.0 * a * cx - b * cy) / s2 + d / s,
        (-b * cx - 2.0 * cc * cy) / s2 + e / s,
        (a * cx * cx + b * cx * cy + cc * cy * cy) / s2 - (d * cx + e * cy) / s + f,
    ])
}

/// Zero, one (tangency) or two points.
pub fn conic_line_intersect(c: &Conic, l: &Line) -> Result<Vec<Point>> {
    let p = l.foot();
    let d = l.direction();
    let (qa, qb, qc) = c.restrict(p, d);
    let tol = 1e-10 * (1.0 + p.dot(p));
    if qa.abs() <= tol && qb.abs() <= tol && qc.abs() <= tol {
        return Err(GeomError::LineOnConic);
    }
    if qa.abs() <= tol {
        if qb.abs() <= tol {
            return Ok(Vec::new());
        }
        return Ok(vec![p + d * (-qc / qb)]);
    }
    let disc = qb * qb - 4.0 * qa * qc;
    let scale = qb * qb + 4.0 * (qa * qc).abs();
    if disc.abs() <= 1e-12 * scale {
        return Ok(vec![p + d * (-qb / (2.0 * qa))]);
    }
    if disc < 0.0 {
        return Ok(Vec::new());
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    let (s1, s2) = if q == 0.0 { (0.0, 0.0) } else { (q / qa, qc / q) };
    let (s1, s2) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    Ok(vec![p + d * s1, p + d * s2])
}

/// Minimum number of samples accepted by [`mb_locus`].
pub const MIN_LOCUS_SAMPLES: usize = 7;

fn reasonable(p: Point, scale: f64) -> bool {
    p.is_finite() && p.norm() <= 1e6 * scale
}

/// Locus point for the chain through `b1` on `lines[1]`: the chain is
/// propagated through the inner centers and the result is
/// `line(c_0, B_1) ∩ line(c_{n-1}, B_{n-1})`.
fn chain_point(lines: &[Line], centers: &[Point], b1: Point) -> Option<Point> {
    let n = lines.len();
    let mut b = b1;
    for j in 1..n - 1 {
        let l = line_through(b, centers[j]).ok()?;
        b = intersect_lines(&l, &lines[j + 1]).ok()?;
    }
    let first = line_through(centers[0], b1).ok()?;
    let last = line_through(centers[n - 1], b).ok()?;
    intersect_lines(&first, &last).ok()
}

fn chain_scale(lines: &[Line], centers: &[Point]) -> f64 {
    1.0 + centers
        .iter()
        .map(|c| c.norm())
        .chain(lines.iter().map(|l| l.foot().norm()))
        .fold(0.0, f64::max)
}

/// Samples the locus of `X_n = B_0 B_1 ∩ B_n B_{n-1}` for the chain with
/// `B_i` on `lines[i]` (`B_n` back on `lines[0]`) and `centers[i]` on
/// `B_i B_{i+1}`.
///
/// `B_0 B_1` is swept as the pencil of lines through `centers[0]` at evenly
/// spaced angles; samples with an intersection at or near infinity are
/// dropped.
pub fn mb_locus(lines: &[Line], centers: &[Point], samples: usize) -> Result<Vec<Point>> {
    let n = lines.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices);
    }
    if centers.len() != n {
        return Err(GeomError::CountMismatch {
            expected: n,
            got: centers.len(),
        });
    }
    if samples < MIN_LOCUS_SAMPLES {
        return Err(GeomError::DomainError(format!(
            "samples = {samples}, need at least {MIN_LOCUS_SAMPLES}"
        )));
    }
    let scale = chain_scale(lines, centers);
    let c0 = centers[0];
    let out: Vec<Point> = (0..samples)
        .filter_map(|i| {
            let phi = PI * (i as f64 + 0.5) / samples as f64;
            let dir = Point::new(phi.cos(), phi.sin());
            let sweep = line_through(c0, c0 + dir).ok()?;
            let b1 = intersect_lines(&sweep, &lines[1]).ok()?;
            if !reasonable(b1, scale) {
                return None;
            }
            chain_point(lines, centers, b1).filter(|x| reasonable(*x, scale))
        })
        .collect();
    if out.len() < 5 {
        return Err(GeomError::DegenerateChain { usable: out.len() });
    }
    Ok(out)
}

/// The side lines and per-side centers of a polygon instance as a chain.
pub fn instance_chain(inst: &PolygonInstance) -> (Vec<Line>, Vec<Point>) {
    let n = inst.n();
    let lines = (0..n).map(|j| inst.outer().side_line(j)).collect();
    let centers = (0..n).map(|j| inst.center_for_side(j)).collect();
    (lines, centers)
}

const FIT_RANK_TOL: f64 = 1e-11;

/// A conic fitted to sampled points, with the worst sample residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocusFit {
    pub conic: Conic,
    pub samples: Vec<Point>,
    pub max_residual: f64,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[v.len() / 2]
}

/// Least-squares conic through all samples: the right singular vector of
/// the smallest singular value, in coordinates centered at the coordinate
/// median and scaled by the median radius, with unit-norm rows so distant
/// samples do not dominate.
pub fn fit(samples: &[Point]) -> Result<LocusFit> {
    let m = samples.len();
    if m < 5 {
        return Err(GeomError::DegenerateChain { usable: m });
    }
    let center = Point::new(
        median(samples.iter().map(|p| p.x).collect()),
        median(samples.iter().map(|p| p.y).collect()),
    );
    let s = median(samples.iter().map(|p| p.dist(center)).collect());
    if !(s > 0.0) {
        return Err(GeomError::RankDeficient);
    }
    let rows = m.max(6);
    let mut a = DMatrix::<f64>::zeros(rows, 6);
    for (i, p) in samples.iter().enumerate() {
        let (x, y) = ((p.x - center.x) / s, (p.y - center.y) / s);
        let r = [x * x, x * y, y * y, x, y, 1.0];
        let n = r.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (j, v) in r.iter().enumerate() {
            a[(i, j)] = v / n;
        }
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.ok_or(GeomError::RankDeficient)?;
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let (smallest, second, largest) = (order[0], order[1], order[5]);
    // flat hyperbolas sampled along one branch sit near 1e-9 here; exactly
    // collinear samples sit at rounding level
    if svd.singular_values[second] <= FIT_RANK_TOL * svd.singular_values[largest] {
        return Err(GeomError::RankDeficient);
    }
    let coef: [f64; 6] = std::array::from_fn(|j| v_t[(smallest, j)]);
    let conic = denormalize(coef, center, s)?;
    let max_residual = samples.iter().map(|p| conic.residual(*p)).fold(0.0, f64::max);
    Ok(LocusFit {
        conic,
        samples: samples.to_vec(),
        max_residual,
    })
}

/// Outcome of solving one shift through the locus conic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConicSolution {
    pub fit: LocusFit,
    pub degenerate: bool,
    pub line_on_conic: bool,
    pub candidates: Vec<SolutionPolygon>,
}

impl ConicSolution {
    pub fn valid(&self) -> impl Iterator<Item = &SolutionPolygon> {
        self.candidates.iter().filter(|s| s.valid)
    }
}

/// Solves one shift by intersecting the locus conic with side 0.
///
/// Closure is checked against `match_tol` since the start vertex comes from
/// a fitted conic rather than an exact fixed point.
pub fn solve_via_conic(inst: &PolygonInstance, samples: usize, cfg: &SolverConfig) -> Result<ConicSolution> {
    let (lines, centers) = instance_chain(inst);
    let locus = mb_locus(&lines, &centers, samples)?;
    let fit = fit(&locus)?;
    let degenerate = fit.conic.is_degenerate(1e-10);
    let hits = match conic_line_intersect(&fit.conic, &lines[0]) {
        Ok(h) => h,
        Err(GeomError::LineOnConic) => {
            return Ok(ConicSolution {
                fit,
                degenerate: true,
                line_on_conic: true,
                candidates: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let loose = SolverConfig {
        closure_tol: cfg.match_tol,
        ..*cfg
    };
    let side0 = inst.outer().side(0);
    let d = side0.direction();
    let candidates = hits
        .into_iter()
        .map(|x| {
            let t0 = (x - side0.start).dot(d) / d.dot(d);
            polygon_from_start(inst, t0, &loose)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConicSolution {
        fit,
        degenerate,
        line_on_conic: false,
        candidates,
    })
}

/// Locus of `T = PK ∩ BE` where `E` moves on `omega`, `K = FE ∩ l`.
///
/// `E` is swept as the second intersection of `omega` with the pencil of
/// lines through `B`.
pub fn lemma51_locus(
    omega: &Conic,
    b: Point,
    f: Point,
    p: Point,
    l: &Line,
    samples: usize,
) -> Result<LocusFit> {
    for (index, q) in [b, f].into_iter().enumerate() {
        let residual = omega.residual(q);
        if residual > 1e-8 {
            return Err(GeomError::PointsNotOnConic { index, residual });
        }
    }
    if samples < MIN_LOCUS_SAMPLES {
        return Err(GeomError::DomainError(format!(
            "samples = {samples}, need at least {MIN_LOCUS_SAMPLES}"
        )));
    }
    let scale = 1.0 + b.norm().max(f.norm()).max(p.norm()).max(l.foot().norm());
    let pts: Vec<Point> = (0..samples)
        .filter_map(|i| {
            let phi = PI * (i as f64 + 0.5) / samples as f64;
            let dir = Point::new(phi.cos(), phi.sin());
            let (qa, qb, _) = omega.restrict(b, dir);
            if qa.abs() <= 1e-12 {
                return None;
            }
            let e = b + dir * (-qb / qa);
            if e.dist(b) <= 1e-9 * scale || e.dist(f) <= 1e-9 * scale || !reasonable(e, scale) {
                return None;
            }
            let k = intersect_lines(&line_through(f, e).ok()?, l).ok()?;
            let t = intersect_lines(&line_through(p, k).ok()?, &line_through(b, e).ok()?).ok()?;
            reasonable(t, scale).then_some(t)
        })
        .collect();
    fit(&pts)
}

fn hpoint(p: Point) -> [f64; 3] {
    p.homogeneous()
}

/// Opposite-side intersections of a hexagon inscribed in `omega`; returns
/// the verdict and the normalized collinearity residual.
pub fn pascal_collinear(hexagon: &[Point; 6], omega: &Conic) -> Result<(bool, f64)> {
    for (index, q) in hexagon.iter().enumerate() {
        let residual = omega.residual(*q);
        if residual > 1e-8 {
            return Err(GeomError::PointsNotOnConic { index, residual });
        }
    }
    let h = hexagon.map(hpoint);
    let side = |i: usize| hcross(h[i % 6], h[(i + 1) % 6]);
    let meets: Vec<[f64; 3]> = (0..3).map(|i| hcross(side(i), side(i + 3))).collect();
    let residual = hcollinearity(meets[0], meets[1], meets[2]);
    Ok((residual < 1e-9, residual))
}

/// Checks that two triangles perspective from a point are perspective from
/// a line; returns the verdict and the collinearity residual.
pub fn desargues_check(tri1: &[Point; 3], tri2: &[Point; 3]) -> Result<(bool, f64)> {
    let a = tri1.map(hpoint);
    let b = tri2.map(hpoint);
    let joins: Vec<[f64; 3]> = (0..3).map(|i| hcross(a[i], b[i])).collect();
    let concurrency = hcollinearity(joins[0], joins[1], joins[2]);
    if concurrency > 1e-9 {
        return Err(GeomError::NotPerspective {
            residual: concurrency,
        });
    }
    let meets: Vec<[f64; 3]> = (0..3)
        .map(|i| {
            let j = (i + 1) % 3;
            hcross(hcross(a[i], a[j]), hcross(b[i], b[j]))
        })
        .collect();
    let residual = hcollinearity(meets[0], meets[1], meets[2]);
    Ok((residual < 1e-9, residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn on_circle(deg: f64) -> Point {
        let r = deg.to_radians();
        Point::new(r.cos(), r.sin())
    }

    #[test]
    fn circle_from_five_points() {
        let pts = [0.0, 60.0, 130.0, 200.0, 290.0].map(on_circle);
        let c = conic_through_5(&pts).unwrap();
        let expect = Conic::unit_circle();
        assert!(c.coefficient_distance(&expect) < 1e-12);
        assert!(c.residual(on_circle(17.0)) < 1e-12);
    }

    #[test]
    fn axes_line_pair() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 1.0), (0.0, 2.0)]
            .map(|(x, y)| Point::new(x, y));
        let c = conic_through_5(&pts).unwrap();
        let xy = Conic::new([0.0, 1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(c.coefficient_distance(&xy) < 1e-12);
        assert!(c.is_degenerate(1e-12));
    }

    #[test]
    fn four_collinear_is_rank_deficient() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (0.0, 2.0)]
            .map(|(x, y)| Point::new(x, y));
        assert_eq!(conic_through_5(&pts), Err(GeomError::RankDeficient));
    }

    #[test]
    fn circle_line_cases() {
        let c = Conic::unit_circle();
        let mut two = conic_line_intersect(&c, &Line::new(0.0, 1.0, 0.0).unwrap()).unwrap();
        two.sort_by(|p, q| p.x.total_cmp(&q.x));
        assert!(two[0].dist(Point::new(-1.0, 0.0)) < 1e-15);
        assert!(two[1].dist(Point::new(1.0, 0.0)) < 1e-15);
        let one = conic_line_intersect(&c, &Line::new(0.0, 1.0, -1.0).unwrap()).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].dist(Point::new(0.0, 1.0)) < 1e-15);
        assert!(conic_line_intersect(&c, &Line::new(0.0, 1.0, -2.0).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn line_component_is_reported() {
        let xy = Conic::new([0.0, 1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(
            conic_line_intersect(&xy, &Line::new(0.0, 1.0, 0.0).unwrap()),
            Err(GeomError::LineOnConic)
        );
    }

    #[test]
    fn homothety_is_perspective_from_line_at_infinity() {
        let t1 = [Point::new(1.0, 0.2), Point::new(-0.3, 1.1), Point::new(0.4, -0.9)];
        let t2 = t1.map(|p| p * 2.0);
        let (ok, res) = desargues_check(&t1, &t2).unwrap();
        assert!(ok, "residual {res}");
    }

    #[test]
    fn non_perspective_pair() {
        let t1 = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)];
        let t2 = [Point::new(3.0, 0.5), Point::new(2.0, 4.0), Point::new(-1.0, 2.5)];
        assert!(matches!(desargues_check(&t1, &t2), Err(GeomError::NotPerspective { .. })));
    }

    #[test]
    fn pascal_on_circle() {
        let hex = [10.0, 50.0, 120.0, 170.0, 250.0, 310.0].map(on_circle);
        let (ok, res) = pascal_collinear(&hex, &Conic::unit_circle()).unwrap();
        assert!(ok, "residual {res}");
    }

    #[test]
    fn pascal_rejects_off_conic() {
        let mut hex = [10.0, 50.0, 120.0, 170.0, 250.0, 310.0].map(on_circle);
        hex[3] = Point::new(0.2, 0.1);
        assert!(matches!(
            pascal_collinear(&hex, &Conic::unit_circle()),
            Err(GeomError::PointsNotOnConic { index: 3, .. })
        ));
    }
}
