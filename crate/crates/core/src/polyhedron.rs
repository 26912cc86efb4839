//! Graphs inscribed in the 1-skeleton of a polyhedron: every face is an
//! independent planar instance, and the per-face solutions are stitched
//! together through the shared edges.

use std::collections::{BTreeMap, VecDeque};
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{check_convex_ccw, ConvexPolygon, Point};
use crate::polygon::{solve_all, PolygonInstance, SolverConfig, MAX_INSCRIBED};
use crate::regular::{example1_x_values, f_height};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 3]> for Point3 {
    fn from(v: [f64; 3]) -> Self {
        Point3::new(v[0], v[1], v[2])
    }
}

impl From<Point3> for [f64; 3] {
    fn from(p: Point3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn unit(self) -> Point3 {
        self * (1.0 / self.norm())
    }

    pub fn dist(self, o: Point3) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Point3, t: f64) -> Point3 {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    fn mul(self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }
}

fn centroid3(pts: &[Point3]) -> Point3 {
    let s = pts.iter().fold(Point3::new(0.0, 0.0, 0.0), |acc, &p| acc + p);
    s * (1.0 / pts.len() as f64)
}

/// Newell normal of a closed polygon (unnormalized).
fn newell(pts: &[Point3]) -> Point3 {
    let mut n = Point3::new(0.0, 0.0, 0.0);
    for i in 0..pts.len() {
        let (p, q) = (pts[i], pts[(i + 1) % pts.len()]);
        n.x += (p.y - q.y) * (p.z + q.z);
        n.y += (p.z - q.z) * (p.x + q.x);
        n.z += (p.x - q.x) * (p.y + q.y);
    }
    n
}

pub type Edge = (usize, usize);

fn edge_key(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Vertices and face cycles; edges and edge-face incidence are derived.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyhedronGraph {
    pub vertices: Vec<Point3>,
    pub faces: Vec<Vec<usize>>,
}

impl PolyhedronGraph {
    pub fn new(vertices: Vec<Point3>, faces: Vec<Vec<usize>>) -> Result<PolyhedronGraph> {
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        for (i, f) in faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(GeomError::InvalidGraph(format!("face {i} has fewer than 3 vertices")));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertices.len()) {
                return Err(GeomError::InvalidGraph(format!("face {i} references vertex {v}")));
            }
            let mut sorted = f.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != f.len() {
                return Err(GeomError::InvalidGraph(format!("face {i} repeats a vertex")));
            }
        }
        Ok(PolyhedronGraph { vertices, faces })
    }

    /// Edges of face `f` in cycle order: side `i` runs from `face[i]` to `face[i+1]`.
    pub fn face_sides(&self, f: usize) -> Vec<(usize, usize)> {
        let c = &self.faces[f];
        (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect()
    }

    pub fn edge_faces(&self) -> BTreeMap<Edge, Vec<usize>> {
        let mut m: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for f in 0..self.faces.len() {
            for (u, v) in self.face_sides(f) {
                m.entry(edge_key(u, v)).or_default().push(f);
            }
        }
        m
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.edge_faces().into_keys().collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }

    pub fn face_points(&self, f: usize) -> Vec<Point3> {
        self.faces[f].iter().map(|&v| self.vertices[v]).collect()
    }

    fn scale(&self) -> f64 {
        1.0 + self.vertices.iter().map(|p| p.norm()).fold(0.0, f64::max)
    }
}

/// Orthonormal in-plane frame of a face.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceFrame {
    pub origin: Point3,
    pub e1: Point3,
    pub e2: Point3,
    pub normal: Point3,
}

impl FaceFrame {
    /// Origin at the first vertex, `e1` along the first edge, normal by Newell.
    pub fn of(pts: &[Point3]) -> Result<FaceFrame> {
        let n = newell(pts);
        let first = pts[1] - pts[0];
        if n.norm() == 0.0 || first.norm() == 0.0 {
            return Err(GeomError::InvalidGraph("degenerate face".into()));
        }
        let normal = n.unit();
        let e1 = (first - normal * first.dot(normal)).unit();
        let e2 = normal.cross(e1);
        Ok(FaceFrame {
            origin: pts[0],
            e1,
            e2,
            normal,
        })
    }

    pub fn to_2d(&self, p: Point3) -> Point {
        let d = p - self.origin;
        Point::new(d.dot(self.e1), d.dot(self.e2))
    }

    pub fn to_3d(&self, p: Point) -> Point3 {
        self.origin + self.e1 * p.x + self.e2 * p.y
    }

    pub fn height(&self, p: Point3) -> f64 {
        (p - self.origin).dot(self.normal)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub nonplanar_faces: Vec<usize>,
    pub nonconvex_faces: Vec<usize>,
    /// Edges not shared by exactly two faces, with their face count.
    pub bad_edges: Vec<(Edge, usize)>,
}

impl GraphReport {
    pub fn ok(&self) -> bool {
        self.nonplanar_faces.is_empty() && self.nonconvex_faces.is_empty() && self.bad_edges.is_empty()
    }
}

const PLANE_TOL: f64 = 1e-9;

pub fn validate_graph(g: &PolyhedronGraph) -> GraphReport {
    let scale = g.scale();
    let mut nonplanar_faces = Vec::new();
    let mut nonconvex_faces = Vec::new();
    for f in 0..g.faces.len() {
        let pts = g.face_points(f);
        let normal = newell(&pts);
        if normal.norm() == 0.0 {
            nonplanar_faces.push(f);
            continue;
        }
        let normal = normal.unit();
        let c = centroid3(&pts);
        if pts.iter().any(|&p| (p - c).dot(normal).abs() > PLANE_TOL * scale) {
            nonplanar_faces.push(f);
            continue;
        }
        let flat = match FaceFrame::of(&pts) {
            Ok(fr) => pts.iter().map(|&p| fr.to_2d(p)).collect::<Vec<_>>(),
            Err(_) => {
                nonconvex_faces.push(f);
                continue;
            }
        };
        if check_convex_ccw(&flat, crate::geom::EPS).is_err() {
            nonconvex_faces.push(f);
        }
    }
    let ef = g.edge_faces();
    let bad_edges = ef
        .iter()
        .filter(|(_, fs)| fs.len() != 2)
        .map(|(&e, fs)| (e, fs.len()))
        .collect();
    GraphReport {
        vertices: g.vertices.len(),
        edges: ef.len(),
        faces: g.faces.len(),
        euler: g.euler_characteristic(),
        nonplanar_faces,
        nonconvex_faces,
        bad_edges,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParityReport {
    /// Number of faces at each vertex.
    pub face_degree: Vec<usize>,
    pub all_even: bool,
}

pub fn parity_check(g: &PolyhedronGraph) -> ParityReport {
    let mut face_degree = vec![0; g.vertices.len()];
    for f in &g.faces {
        for &v in f {
            face_degree[v] += 1;
        }
    }
    let all_even = face_degree.iter().all(|d| d % 2 == 0);
    ParityReport {
        face_degree,
        all_even,
    }
}

/// Per-face inner polygons, in the same cyclic sense as the face.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaSpec {
    pub faces: Vec<Vec<Point3>>,
}

/// The planar instance of face `f` in its own frame (shift 0).
pub fn face_instance(
    g: &PolyhedronGraph,
    f: usize,
    gamma: &GammaSpec,
    cfg: &SolverConfig,
) -> Result<(PolygonInstance, FaceFrame)> {
    let pts = g.face_points(f);
    let frame = FaceFrame::of(&pts)?;
    let scale = g.scale();
    let inner3 = gamma.faces.get(f).ok_or(GeomError::CountMismatch {
        expected: g.faces.len(),
        got: gamma.faces.len(),
    })?;
    for (index, &c) in inner3.iter().enumerate() {
        if frame.height(c).abs() > PLANE_TOL * scale {
            return Err(GeomError::OffPlane { face: f, index });
        }
    }
    let outer = ConvexPolygon::with_tolerance(pts.iter().map(|&p| frame.to_2d(p)).collect(), cfg.eps)?;
    let inner = inner3.iter().map(|&c| frame.to_2d(c)).collect();
    Ok((PolygonInstance::new(outer, inner, 0, cfg.eps)?, frame))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeParam {
    pub edge: [usize; 2],
    /// Position along the edge from its lower-index vertex.
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InscribedGraphSolution {
    pub edge_params: Vec<EdgeParam>,
    /// For each face, the index of the chosen planar solution.
    pub per_face_choice: Vec<usize>,
}

impl InscribedGraphSolution {
    pub fn param(&self, e: Edge) -> Option<f64> {
        self.edge_params
            .iter()
            .find(|p| p.edge == [e.0, e.1])
            .map(|p| p.t)
    }

    /// Largest parameter difference against another edge assignment.
    pub fn distance_to(&self, other: &[EdgeParam]) -> f64 {
        if other.len() != self.edge_params.len() {
            return f64::INFINITY;
        }
        other
            .iter()
            .map(|p| match self.param((p.edge[0], p.edge[1])) {
                Some(t) => (t - p.t).abs(),
                None => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSolveReport {
    pub solutions: Vec<InscribedGraphSolution>,
    pub per_face_counts: Vec<usize>,
    pub unsolvable_faces: Vec<usize>,
    pub parity: ParityReport,
    pub bound_satisfied: bool,
}

/// Global parameter on each side of face `f` for a local parameter list.
fn globalize(g: &PolyhedronGraph, f: usize, local: &[f64]) -> Vec<(Edge, f64)> {
    g.face_sides(f)
        .into_iter()
        .zip(local)
        .map(|((u, v), &t)| (edge_key(u, v), if u < v { t } else { 1.0 - t }))
        .collect()
}

/// Faces in breadth-first order over shared edges, starting from face 0.
fn face_order(g: &PolyhedronGraph) -> Vec<usize> {
    let ef = g.edge_faces();
    let mut adj = vec![Vec::new(); g.faces.len()];
    for fs in ef.values() {
        for &a in fs {
            for &b in fs {
                if a != b && !adj[a].contains(&b) {
                    adj[a].push(b);
                }
            }
        }
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let mut seen = vec![false; g.faces.len()];
    let mut order = Vec::with_capacity(g.faces.len());
    for root in 0..g.faces.len() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for &h in &adj[f] {
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
    }
    order
}

struct Stitch<'a> {
    order: &'a [usize],
    candidates: &'a [Vec<Vec<(Edge, f64)>>],
    tol: f64,
    assigned: BTreeMap<Edge, f64>,
    choice: Vec<usize>,
    out: Vec<InscribedGraphSolution>,
}

impl Stitch<'_> {
    fn search(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.out.push(InscribedGraphSolution {
                edge_params: self
                    .assigned
                    .iter()
                    .map(|(&(u, v), &t)| EdgeParam { edge: [u, v], t })
                    .collect(),
                per_face_choice: self.choice.clone(),
            });
            return;
        }
        let f = self.order[depth];
        for (ci, cand) in self.candidates[f].iter().enumerate() {
            let fits = cand.iter().all(|(e, t)| match self.assigned.get(e) {
                Some(s) => (s - t).abs() <= self.tol,
                None => true,
            });
            if !fits {
                continue;
            }
            let fresh: Vec<Edge> = cand
                .iter()
                .filter(|(e, _)| !self.assigned.contains_key(e))
                .map(|(e, _)| *e)
                .collect();
            for (e, t) in cand {
                self.assigned.entry(*e).or_insert(*t);
            }
            self.choice[f] = ci;
            self.search(depth + 1);
            for e in fresh {
                self.assigned.remove(&e);
            }
        }
    }
}

/// Solves every face and returns all globally consistent edge assignments.
pub fn solve_graph(g: &PolyhedronGraph, gamma: &GammaSpec, cfg: &SolverConfig) -> Result<GraphSolveReport> {
    if gamma.faces.len() != g.faces.len() {
        return Err(GeomError::CountMismatch {
            expected: g.faces.len(),
            got: gamma.faces.len(),
        });
    }
    let report = validate_graph(g);
    if let Some(&((u, v), k)) = report.bad_edges.first() {
        return Err(GeomError::InvalidGraph(format!("edge ({u}, {v}) lies on {k} faces")));
    }
    if let Some(&f) = report.nonplanar_faces.first() {
        return Err(GeomError::InvalidGraph(format!("face {f} is not planar")));
    }
    if let Some(&f) = report.nonconvex_faces.first() {
        return Err(GeomError::InvalidGraph(format!("face {f} is not strictly convex")));
    }

    let mut candidates = Vec::with_capacity(g.faces.len());
    for f in 0..g.faces.len() {
        let (inst, _) = face_instance(g, f, gamma, cfg)?;
        let set = solve_all(inst.outer(), inst.inner(), cfg)?;
        candidates.push(
            set.solutions
                .iter()
                .map(|s| globalize(g, f, &s.params))
                .collect::<Vec<_>>(),
        );
    }
    let per_face_counts: Vec<usize> = candidates.iter().map(Vec::len).collect();
    let unsolvable_faces: Vec<usize> = (0..g.faces.len()).filter(|&f| per_face_counts[f] == 0).collect();

    let order = face_order(g);
    let mut stitch = Stitch {
        order: &order,
        candidates: &candidates,
        tol: cfg.match_tol,
        assigned: BTreeMap::new(),
        choice: vec![0; g.faces.len()],
        out: Vec::new(),
    };
    if unsolvable_faces.is_empty() {
        stitch.search(0);
    }
    let solutions = stitch.out;
    Ok(GraphSolveReport {
        bound_satisfied: solutions.len() <= MAX_INSCRIBED,
        solutions,
        per_face_counts,
        unsolvable_faces,
        parity: parity_check(g),
    })
}

/// Regular octahedron with vertices `(±1,0,0), (0,±1,0), (0,0,±1)`, faces
/// oriented outward.
pub fn make_octahedron() -> PolyhedronGraph {
    let vertices = vec![
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(-1.0, 0.0, 0.0),
        Point3::new(0.0, 1.0, 0.0),
        Point3::new(0.0, -1.0, 0.0),
        Point3::new(0.0, 0.0, 1.0),
        Point3::new(0.0, 0.0, -1.0),
    ];
    let mut faces = Vec::new();
    for xi in [0, 1] {
        for yi in [2, 3] {
            for zi in [4, 5] {
                faces.push(vec![xi, yi, zi]);
            }
        }
    }
    orient_outward(&vertices, &mut faces, centroid3(&vertices));
    PolyhedronGraph { vertices, faces }
}

pub fn make_tetrahedron() -> PolyhedronGraph {
    let vertices = vec![
        Point3::new(1.0, 1.0, 1.0),
        Point3::new(1.0, -1.0, -1.0),
        Point3::new(-1.0, 1.0, -1.0),
        Point3::new(-1.0, -1.0, 1.0),
    ];
    let mut faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    orient_outward(&vertices, &mut faces, centroid3(&vertices));
    PolyhedronGraph { vertices, faces }
}

pub fn make_cube() -> PolyhedronGraph {
    let mut vertices = Vec::new();
    for i in 0..8 {
        let c = |bit: usize| if i >> bit & 1 == 1 { 1.0 } else { -1.0 };
        vertices.push(Point3::new(c(0), c(1), c(2)));
    }
    let mut faces = vec![
        vec![0, 2, 6, 4],
        vec![1, 3, 7, 5],
        vec![0, 1, 5, 4],
        vec![2, 3, 7, 6],
        vec![0, 1, 3, 2],
        vec![4, 5, 7, 6],
    ];
    orient_outward(&vertices, &mut faces, centroid3(&vertices));
    PolyhedronGraph { vertices, faces }
}

fn orient_outward(vertices: &[Point3], faces: &mut [Vec<usize>], inside: Point3) {
    for f in faces.iter_mut() {
        let pts: Vec<Point3> = f.iter().map(|&v| vertices[v]).collect();
        if newell(&pts).dot(centroid3(&pts) - inside) < 0.0 {
            f.reverse();
        }
    }
}

fn reflect3(p: Point3, on_plane: Point3, normal: Point3) -> Point3 {
    let n = normal.unit();
    p - n * (2.0 * (p - on_plane).dot(n))
}

/// Maximum number of octahedra accepted by [`make_glued_octahedra`].
pub const MAX_GLUED: usize = 8;

/// A straight tower of `count` regular octahedra, each glued to the next
/// along a pair of opposite faces; glued faces are dropped.
///
/// Each new octahedron is the mirror image of the previous one in the glued
/// face, so every vertex lies on one or two octahedra and meets 4 or 6 faces.
pub fn make_glued_octahedra(count: usize) -> Result<PolyhedronGraph> {
    if count == 0 || count > MAX_GLUED {
        return Err(GeomError::DomainError(format!("count = {count} must be in 1..={MAX_GLUED}")));
    }
    if count == 1 {
        return Ok(make_octahedron());
    }
    let mut vertices = make_octahedron().vertices;
    // near face (-x, -y, -z) and far face (+x, +y, +z), antipodes aligned
    let mut near = [1usize, 3, 5];
    let mut far = [0usize, 2, 4];
    let mut faces: Vec<Vec<usize>> = vec![near.to_vec()];
    for k in 0..count {
        for i in 0..3 {
            let (j, l) = ((i + 1) % 3, (i + 2) % 3);
            faces.push(vec![near[i], near[j], far[l]]);
            faces.push(vec![far[i], far[j], near[l]]);
        }
        let center = centroid3(&[near, far].concat().iter().map(|&v| vertices[v]).collect::<Vec<_>>());
        let mut local: Vec<Vec<usize>> = faces.drain(faces.len() - 6..).collect();
        orient_outward(&vertices, &mut local, center);
        faces.extend(local);
        if k + 1 == count {
            let mut cap = vec![far.to_vec()];
            orient_outward(&vertices, &mut cap, center);
            faces.extend(cap);
            break;
        }
        let plane: Vec<Point3> = far.iter().map(|&v| vertices[v]).collect();
        let normal = newell(&plane);
        let mut next_far = [0usize; 3];
        for i in 0..3 {
            vertices.push(reflect3(vertices[near[i]], plane[0], normal));
            next_far[i] = vertices.len() - 1;
        }
        near = far;
        far = next_far;
    }
    // the first cap needs the first octahedron's center
    let first = centroid3(&make_octahedron().vertices);
    orient_outward(&vertices, &mut faces[..1], first);
    PolyhedronGraph::new(vertices, faces)
}

/// Example-1 inner polygon for every (regular) face: on each side `E_i`,
/// the point at height `f(a/2)` toward the face center.
pub fn example1_gamma(g: &PolyhedronGraph) -> Result<GammaSpec> {
    let mut faces = Vec::with_capacity(g.faces.len());
    for f in 0..g.faces.len() {
        let pts = g.face_points(f);
        let m = pts.len();
        let sides: Vec<f64> = (0..m).map(|i| pts[i].dist(pts[(i + 1) % m])).collect();
        let side = sides[0];
        if sides.iter().any(|s| (s - side).abs() > 1e-9 * side) {
            return Err(GeomError::DomainError(format!("face {f} is not regular")));
        }
        let a = side / 2.0;
        let h = f_height(m, a, example1_x_values(m, a)[0])?;
        let o = centroid3(&pts);
        faces.push(
            (0..m)
                .map(|i| {
                    let e = pts[i].lerp(pts[(i + 1) % m], 0.5);
                    e + (o - e).unit() * h
                })
                .collect(),
        );
    }
    Ok(GammaSpec { faces })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OctahedronExample {
    pub graph: PolyhedronGraph,
    pub gamma: GammaSpec,
    /// The four known edge assignments.
    pub betas: Vec<Vec<EdgeParam>>,
}

/// Faces of the octahedron are two-colored by the sign parity of their
/// octant; each known solution uses one split value, unmirrored on one
/// color class and mirrored on the other.
pub fn make_octahedron_example() -> Result<OctahedronExample> {
    let graph = make_octahedron();
    let gamma = example1_gamma(&graph)?;
    let a = graph.vertices[0].dist(graph.vertices[2]) / 2.0;
    let color = |f: usize| -> bool {
        let s: f64 = graph.faces[f]
            .iter()
            .map(|&v| {
                let p = graph.vertices[v];
                p.x + p.y + p.z
            })
            .product();
        s > 0.0
    };
    let mut betas = Vec::new();
    for x in example1_x_values(3, a) {
        let t = x / (2.0 * a);
        for plain in [true, false] {
            let mut params = BTreeMap::new();
            for f in 0..graph.faces.len() {
                let local = if color(f) == plain { t } else { 1.0 - t };
                for (e, tg) in globalize(&graph, f, &[local; 3]) {
                    params.insert(e, tg);
                }
            }
            betas.push(
                params
                    .into_iter()
                    .map(|((u, v), t)| EdgeParam { edge: [u, v], t })
                    .collect(),
            );
        }
    }
    Ok(OctahedronExample { graph, gamma, betas })
}
