//! Polygons inscribed in one convex polygon and circumscribed about another.
//!
//! With the outer polygon `A` and the inner points `C` fixed, a candidate
//! `B` is determined by its vertex on side 0: the line through that vertex
//! and the center assigned to side 0 meets side 1 in the next vertex, and so
//! on around the polygon. Each step is a central projection, so the full
//! turn is a Moebius map of side 0's parameter and the closed polygons are
//! exactly its fixed points.
//!
//! Incidence convention: for shift `k`, `C_i` must lie strictly inside the
//! side `B_{k+i} B_{k+i+1}` (indices mod `n`).

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{
    check_convex_ccw, hcross, hnormalize, intersect_lines, strictly_interior, ConvexPolygon, Line,
    Point, Segment, EPS,
};
use crate::projective::{central_projection, compose, fixed_points, MoebiusMap, ProjParam};

/// Numeric knobs shared by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Relative tolerance for predicates and interiority margins.
    pub eps: f64,
    /// Agreement required between parameters computed along different routes.
    pub match_tol: f64,
    /// Two solutions closer than this (max parameter difference) are the same polygon.
    pub dedup_tol: f64,
    /// Maximum admissible `|R(t0) - t0|` for a reported solution.
    pub closure_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            eps: EPS,
            match_tol: 1e-7,
            dedup_tol: 1e-6,
            closure_tol: 1e-9,
        }
    }
}

/// One solving task: outer polygon, inner points and the shift `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonInstance {
    outer: ConvexPolygon,
    inner: Vec<Point>,
    shift: usize,
}

impl PolygonInstance {
    pub fn new(outer: ConvexPolygon, inner: Vec<Point>, shift: usize, eps: f64) -> Result<Self> {
        let n = outer.len();
        if inner.len() != n {
            return Err(GeomError::CountMismatch {
                expected: n,
                got: inner.len(),
            });
        }
        check_convex_ccw(&inner, eps)?;
        if let Some(index) = inner.iter().position(|&c| !outer.contains_strict(c, eps)) {
            return Err(GeomError::NotInside { index });
        }
        Ok(PolygonInstance {
            outer,
            inner,
            shift: shift % n,
        })
    }

    pub fn n(&self) -> usize {
        self.outer.len()
    }

    pub fn outer(&self) -> &ConvexPolygon {
        &self.outer
    }

    pub fn inner(&self) -> &[Point] {
        &self.inner
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn with_shift(&self, shift: usize) -> PolygonInstance {
        PolygonInstance {
            shift: shift % self.n(),
            ..self.clone()
        }
    }

    /// Index of the inner point that side `B_j B_{j+1}` must pass through.
    pub fn center_index(&self, j: usize) -> usize {
        let n = self.n();
        (j % n + n - self.shift) % n
    }

    pub fn center_for_side(&self, j: usize) -> Point {
        self.inner[self.center_index(j)]
    }

    /// The projection from side `j` of `A` to side `j + 1` through the
    /// center assigned to `B_j B_{j+1}`.
    pub fn side_projection(&self, j: usize) -> Result<MoebiusMap> {
        central_projection(
            self.center_for_side(j),
            &self.outer.side(j),
            &self.outer.side(j + 1),
        )
    }
}

/// Why a candidate fixed point does not give an admissible polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Violation {
    OutOfSegment { side: usize },
    AtInfinity { side: usize },
    NotConvex,
    CenterNotBetween { index: usize },
    ClosureResidual,
}

/// A candidate polygon `B`: `params[i]` locates `B_i` on side `A_i A_{i+1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionPolygon {
    pub shift: usize,
    pub params: Vec<f64>,
    pub valid: bool,
    pub reasons: Vec<Violation>,
    pub closure_residual: f64,
}

impl SolutionPolygon {
    pub fn vertices(&self, outer: &ConvexPolygon) -> Vec<Point> {
        self.params
            .iter()
            .enumerate()
            .map(|(i, &t)| outer.side(i).point_at(t))
            .collect()
    }

    /// Max parameter difference; infinite if either side has a missing entry.
    pub fn param_distance(&self, other: &SolutionPolygon) -> f64 {
        param_distance(&self.params, &other.params)
    }
}

pub fn param_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = (x - y).abs();
            if d.is_nan() {
                f64::INFINITY
            } else {
                d
            }
        })
        .fold(0.0, f64::max)
}

/// Per-side projections and the composed return map of side 0.
pub fn return_map(inst: &PolygonInstance) -> Result<MoebiusMap> {
    let maps = side_maps(inst)?;
    Ok(compose_chain(&maps))
}

fn side_maps(inst: &PolygonInstance) -> Result<Vec<MoebiusMap>> {
    (0..inst.n()).map(|j| inst.side_projection(j)).collect()
}

fn compose_chain(maps: &[MoebiusMap]) -> MoebiusMap {
    maps.iter()
        .fold(MoebiusMap::identity(), |acc, f| compose(f, &acc))
}

/// All fixed points of one shift's return map, each with a verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftOutcome {
    pub shift: usize,
    pub identity: bool,
    pub candidates: Vec<SolutionPolygon>,
}

impl ShiftOutcome {
    pub fn valid(&self) -> impl Iterator<Item = &SolutionPolygon> {
        self.candidates.iter().filter(|s| s.valid)
    }
}

pub fn solve_shift(inst: &PolygonInstance, cfg: &SolverConfig) -> Result<ShiftOutcome> {
    let maps = side_maps(inst)?;
    let ret = compose_chain(&maps);
    let fixed = fixed_points(&ret, cfg.eps);
    if fixed.is_identity() {
        return Ok(ShiftOutcome {
            shift: inst.shift(),
            identity: true,
            candidates: Vec::new(),
        });
    }
    let mut candidates: Vec<SolutionPolygon> = Vec::new();
    for p in fixed.points {
        let cand = propagate_candidate(inst, &maps, p, cfg);
        let duplicate = candidates
            .iter()
            .any(|c| c.valid && cand.valid && c.param_distance(&cand) < cfg.dedup_tol);
        if !duplicate {
            candidates.push(cand);
        }
    }
    Ok(ShiftOutcome {
        shift: inst.shift(),
        identity: false,
        candidates,
    })
}

fn propagate_candidate(
    inst: &PolygonInstance,
    maps: &[MoebiusMap],
    start: ProjParam,
    cfg: &SolverConfig,
) -> SolutionPolygon {
    let mut params = Vec::with_capacity(maps.len());
    let mut t = start;
    for f in maps {
        params.push(t.value().unwrap_or(f64::NAN));
        t = f.apply(t);
    }
    let closure_residual = match (t.value(), start.value()) {
        (Some(a), Some(b)) => (a - b).abs(),
        _ => t.chordal_distance(&start),
    };
    let mut sol = SolutionPolygon {
        shift: inst.shift(),
        params,
        valid: false,
        reasons: Vec::new(),
        closure_residual,
    };
    sol.reasons = validate(inst, &sol.params, closure_residual, cfg);
    sol.valid = sol.reasons.is_empty();
    sol
}

/// Checks every admissibility condition on a full parameter vector.
pub fn validate(
    inst: &PolygonInstance,
    params: &[f64],
    closure_residual: f64,
    cfg: &SolverConfig,
) -> Vec<Violation> {
    let n = inst.n();
    let mut reasons = Vec::new();
    for (side, &t) in params.iter().enumerate() {
        if !t.is_finite() {
            reasons.push(Violation::AtInfinity { side });
        } else if !strictly_interior(t, cfg.eps) {
            reasons.push(Violation::OutOfSegment { side });
        }
    }
    if !reasons.is_empty() {
        return reasons;
    }
    let outer = inst.outer();
    let b: Vec<Point> = params
        .iter()
        .enumerate()
        .map(|(i, &t)| outer.side(i).point_at(t))
        .collect();
    if check_convex_ccw(&b, cfg.eps).is_err() {
        reasons.push(Violation::NotConvex);
    }
    let k = inst.shift();
    for (i, &c) in inst.inner().iter().enumerate() {
        let between = Segment::new(b[(k + i) % n], b[(k + i + 1) % n])
            .and_then(|s| s.param_of(c))
            .map(|u| strictly_interior(u, cfg.eps))
            .unwrap_or(false);
        if !between {
            reasons.push(Violation::CenterNotBetween { index: i });
        }
    }
    if !(closure_residual < cfg.closure_tol) {
        reasons.push(Violation::ClosureResidual);
    }
    reasons
}

/// Builds and validates the full polygon starting from `B_0` at parameter
/// `t0` on side 0, propagating with the Moebius side maps.
pub fn polygon_from_start(
    inst: &PolygonInstance,
    t0: f64,
    cfg: &SolverConfig,
) -> Result<SolutionPolygon> {
    let maps = side_maps(inst)?;
    Ok(propagate_candidate(inst, &maps, ProjParam::finite(t0), cfg))
}

/// Aggregate over every shift `k = 0..n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet {
    /// Distinct valid polygons.
    pub solutions: Vec<SolutionPolygon>,
    /// Candidates that failed validation, kept for diagnostics.
    pub rejected: Vec<SolutionPolygon>,
    pub per_shift_counts: Vec<usize>,
    pub identity_flags: Vec<bool>,
}

impl SolutionSet {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn identity_detected(&self) -> bool {
        self.identity_flags.iter().any(|&f| f)
    }
}

pub fn solve_all(outer: &ConvexPolygon, inner: &[Point], cfg: &SolverConfig) -> Result<SolutionSet> {
    let base = PolygonInstance::new(outer.clone(), inner.to_vec(), 0, cfg.eps)?;
    let n = base.n();
    let mut set = SolutionSet {
        solutions: Vec::new(),
        rejected: Vec::new(),
        per_shift_counts: vec![0; n],
        identity_flags: vec![false; n],
    };
    for k in 0..n {
        let outcome = solve_shift(&base.with_shift(k), cfg)?;
        set.identity_flags[k] = outcome.identity;
        for cand in outcome.candidates {
            if !cand.valid {
                set.rejected.push(cand);
                continue;
            }
            set.per_shift_counts[k] += 1;
            let seen = set
                .solutions
                .iter()
                .any(|s| s.param_distance(&cand) < cfg.dedup_tol);
            if !seen {
                set.solutions.push(cand);
            }
        }
    }
    Ok(set)
}

/// Count of admissible polygons against the bound of four.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub count: usize,
    pub bound_satisfied: bool,
    pub identity_detected: bool,
    pub per_shift_counts: Vec<usize>,
}

pub const MAX_INSCRIBED: usize = 4;

pub fn theorem_check(outer: &ConvexPolygon, inner: &[Point], cfg: &SolverConfig) -> Result<TheoremReport> {
    let set = solve_all(outer, inner, cfg)?;
    Ok(TheoremReport {
        count: set.count(),
        bound_satisfied: set.count() <= MAX_INSCRIBED,
        identity_detected: set.identity_detected(),
        per_shift_counts: set.per_shift_counts,
    })
}

/// Walks the chain with homogeneous joins and meets (no Moebius algebra)
/// and returns the closure gap `t_end - t` multiplied by the homogeneous
/// weight of the final point.
///
/// Carrying the weight keeps the function continuous through chains whose
/// last vertex passes through infinity, so a root next to a pole still shows
/// up as a sign change.
fn chain_gap(inst: &PolygonInstance, sides: &[[f64; 3]], t: f64) -> Option<f64> {
    let first = inst.outer().side(0);
    let mut p = first.point_at(t).homogeneous();
    for j in 0..inst.n() {
        let through = hcross(p, inst.center_for_side(j).homogeneous());
        p = hnormalize(hcross(through, sides[(j + 1) % inst.n()]));
        if p.iter().all(|&v| v == 0.0) || p.iter().any(|v| !v.is_finite()) {
            return None;
        }
    }
    let (s, d) = (first.start, first.direction());
    let [x, y, w] = p;
    Some(((x - w * s.x) * d.x + (y - w * s.y) * d.y) / d.dot(d) - t * w)
}

/// Independent root finder for the closure equation on `(0, 1)`: a uniform
/// grid scan for sign changes and near-zero dips, each refined to `1e-10`.
///
/// A double root can hide between grid nodes when the grid is coarse. When
/// the return map is nearly singular the gap jumps across a window narrower
/// than the bisection tolerance, and that root is dropped.
pub fn brute_force_scan(inst: &PolygonInstance, grid_size: usize) -> Vec<f64> {
    let grid = grid_size.max(100);
    let sides: Vec<[f64; 3]> = (0..inst.n())
        .map(|j| {
            let s = inst.outer().side(j);
            hcross(s.start.homogeneous(), s.end.homogeneous())
        })
        .collect();
    let g = |t: f64| chain_gap(inst, &sides, t);
    let ts: Vec<f64> = (0..=grid).map(|i| i as f64 / grid as f64).collect();
    let vals: Vec<Option<f64>> = ts.iter().map(|&t| g(t)).collect();

    let mut roots: Vec<f64> = Vec::new();
    let push = |r: f64, roots: &mut Vec<f64>| {
        if !roots.iter().any(|&x| (x - r).abs() < 1e-7) {
            roots.push(r);
        }
    };

    for i in 0..grid {
        let (Some(ga), Some(gb)) = (vals[i], vals[i + 1]) else {
            continue;
        };
        if ga == 0.0 {
            push(ts[i], &mut roots);
            continue;
        }
        if ga.signum() != gb.signum() && gb != 0.0 {
            if let Some(r) = bisect(&g, ts[i], ts[i + 1], ga) {
                push(r, &mut roots);
            }
        }
    }
    if let Some(0.0) = vals[grid] {
        push(1.0, &mut roots);
    }

    // tangential roots: |g| dips to zero without changing sign
    for i in 1..grid {
        let (Some(gp), Some(gc), Some(gn)) = (vals[i - 1], vals[i], vals[i + 1]) else {
            continue;
        };
        let same_sign = gp.signum() == gc.signum() && gc.signum() == gn.signum();
        if !same_sign || gc.abs() > gp.abs() || gc.abs() > gn.abs() || gc.abs() > 1e-3 {
            continue;
        }
        // two roots inside one cell also look like a dip; the signed extremum
        // tells them apart from a tangency
        let s = gc.signum();
        let Some((x, gx)) = golden_extremum(&g, ts[i - 1], ts[i + 1], s) else {
            continue;
        };
        if gx.signum() != s && gx != 0.0 {
            for (lo, hi, glo) in [(ts[i - 1], x, gp), (x, ts[i + 1], gx)] {
                if let Some(r) = bisect(&g, lo, hi, glo) {
                    push(r, &mut roots);
                }
            }
        } else if gx.abs() < 1e-9 {
            push(x, &mut roots);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn bisect(g: &impl Fn(f64) -> Option<f64>, mut lo: f64, mut hi: f64, mut glo: f64) -> Option<f64> {
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid)?;
        if gm == 0.0 {
            return Some(mid);
        }
        if gm.signum() == glo.signum() {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    (g(mid)?.abs() < 1e-6).then_some(mid)
}

/// Minimizes `sign * g` on `[lo, hi]`.
fn golden_extremum(
    g: &impl Fn(f64) -> Option<f64>,
    mut lo: f64,
    mut hi: f64,
    sign: f64,
) -> Option<(f64, f64)> {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let f = |t: f64| g(t).map(|v| sign * v);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > 1e-12 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2)?;
        }
    }
    let x = 0.5 * (lo + hi);
    Some((x, g(x)?))
}

/// Finite fixed points of the shift's return map that lie in `(0, 1)`.
pub fn fixed_params_in_unit(inst: &PolygonInstance, cfg: &SolverConfig) -> Result<Vec<f64>> {
    let ret = return_map(inst)?;
    let fp = fixed_points(&ret, cfg.eps);
    let mut v: Vec<f64> = fp
        .points
        .iter()
        .filter_map(|p| p.value())
        .filter(|t| *t > 0.0 && *t < 1.0)
        .collect();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// A closed polygon with vertices on full lines (no segment or convexity
/// restriction).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedSolution {
    /// Cyclic order of the lines, starting with line 0.
    pub order: Vec<usize>,
    /// `assignment[j]` is the inner point on the side between the `j`-th and
    /// `(j+1)`-th line of `order`.
    pub assignment: Vec<usize>,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedReport {
    pub count: usize,
    pub bound: usize,
    pub bound_satisfied: bool,
    /// Some sub-problem's return map was the identity; those are excluded.
    pub infinite_family: bool,
    /// Configurations skipped because a center lies on one of its lines.
    pub degenerate_skipped: usize,
    pub solutions: Vec<GeneralizedSolution>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub(crate) fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn same_point_set(a: &[Point], b: &[Point], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter().all(|p| b.iter().any(|q| p.dist(*q) <= tol))
        && b.iter().all(|p| a.iter().any(|q| p.dist(*q) <= tol))
}

/// Largest `n` accepted by [`enumerate_generalized`].
pub const MAX_GENERALIZED_N: usize = 6;

/// Counts closed polygons over every cyclic order of the lines and every
/// assignment of inner points to consecutive line pairs.
pub fn enumerate_generalized(
    lines: &[Line],
    inner: &[Point],
    cfg: &SolverConfig,
) -> Result<GeneralizedReport> {
    let n = lines.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices);
    }
    if inner.len() != n {
        return Err(GeomError::CountMismatch {
            expected: n,
            got: inner.len(),
        });
    }
    if n > MAX_GENERALIZED_N {
        return Err(GeomError::TooLarge(format!("n = {n} > {MAX_GENERALIZED_N}")));
    }
    for i in 0..n {
        for j in i + 1..n {
            intersect_lines(&lines[i], &lines[j])?;
        }
    }
    let scale = 1.0
        + inner
            .iter()
            .chain(lines.iter().map(|l| l.foot()).collect::<Vec<_>>().iter())
            .map(|p| p.norm())
            .fold(0.0, f64::max);
    let dist_tol = 1e-7 * scale;
    let segs: Vec<Segment> = lines.iter().map(|l| l.as_segment()).collect();

    let rest: Vec<usize> = (1..n).collect();
    let orders: Vec<Vec<usize>> = permutations(&rest)
        .into_iter()
        .map(|mut p| {
            p.insert(0, 0);
            p
        })
        .collect();
    let assignments = permutations(&(0..n).collect::<Vec<_>>());

    let mut report = GeneralizedReport {
        count: 0,
        bound: factorial(n) * factorial(n - 1),
        bound_satisfied: true,
        infinite_family: false,
        degenerate_skipped: 0,
        solutions: Vec::new(),
    };

    for order in &orders {
        for assignment in &assignments {
            let maps: Result<Vec<MoebiusMap>> = (0..n)
                .map(|j| {
                    central_projection(
                        inner[assignment[j]],
                        &segs[order[j]],
                        &segs[order[(j + 1) % n]],
                    )
                })
                .collect();
            let Ok(maps) = maps else {
                report.degenerate_skipped += 1;
                continue;
            };
            let fixed = fixed_points(&compose_chain(&maps), cfg.eps);
            if fixed.is_identity() {
                report.infinite_family = true;
                continue;
            }
            'fp: for p in fixed.points {
                let mut t = p;
                let mut verts = Vec::with_capacity(n);
                for (j, f) in maps.iter().enumerate() {
                    let Some(v) = t.value() else { continue 'fp };
                    let pt = segs[order[j]].point_at(v);
                    if !pt.is_finite() || pt.norm() > 1e8 * scale {
                        continue 'fp;
                    }
                    verts.push(pt);
                    t = f.apply(t);
                }
                let closes = match (t.value(), p.value()) {
                    (Some(a), Some(b)) => (a - b).abs() <= cfg.match_tol * (1.0 + b.abs()),
                    _ => false,
                };
                if !closes {
                    continue;
                }
                let distinct = (0..n).all(|i| (i + 1..n).all(|j| verts[i].dist(verts[j]) > dist_tol));
                let off_centers = verts
                    .iter()
                    .all(|v| inner.iter().all(|c| v.dist(*c) > dist_tol));
                if !distinct || !off_centers {
                    continue;
                }
                if report
                    .solutions
                    .iter()
                    .any(|s| same_point_set(&s.vertices, &verts, 1e-6 * scale))
                {
                    continue;
                }
                report.solutions.push(GeneralizedSolution {
                    order: order.clone(),
                    assignment: assignment.clone(),
                    vertices: verts,
                });
            }
        }
    }
    report.count = report.solutions.len();
    report.bound_satisfied = report.count <= report.bound;
    Ok(report)
}
