//! JSON documents read and written by the `inscribe` binary.

use std::collections::BTreeMap;

use inscribe_core::polygon::Violation;
use inscribe_core::polyhedron::{EdgeParam, ParityReport, Point3};
use inscribe_core::regular::{AppendixATrace, KnownPolygon};
use inscribe_core::{Point, SolverConfig};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "inscribe/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn schema_tag() -> String {
    SCHEMA.to_string()
}

/// An input instance. `kind` selects the payload layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceDocument {
    #[serde(default = "schema_tag")]
    pub schema: String,
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    /// Solutions known in advance (generated documents only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    Polygon(PolygonPayload),
    Polyhedron(PolyhedronPayload),
    Generalized(LinesPayload),
    ConicChain(LinesPayload),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Polygon(_) => "polygon",
            Payload::Polyhedron(_) => "polyhedron",
            Payload::Generalized(_) => "generalized",
            Payload::ConicChain(_) => "conic-chain",
        }
    }
}

/// Outer polygon `A` (counterclockwise) and inner points `C`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonPayload {
    pub outer: Vec<Point>,
    pub inner: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyhedronPayload {
    pub vertices: Vec<Point3>,
    pub faces: Vec<Vec<usize>>,
    /// Inner polygon of each face, in the face's vertex order.
    pub gamma: Vec<Vec<Point3>>,
}

/// Lines given by two points each, plus one point per line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinesPayload {
    pub lines: Vec<[Point; 2]>,
    pub points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Expected {
    RegularFamily {
        n: usize,
        a: f64,
        x_values: [f64; 2],
        polygons: Vec<KnownPolygon>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        construction: Option<AppendixATrace>,
    },
    InscribedGraphs {
        graphs: Vec<Vec<EdgeParam>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eps: f64,
    pub match_tol: f64,
    pub dedup_tol: f64,
    pub closure_tol: f64,
}

impl From<SolverConfig> for Tolerances {
    fn from(c: SolverConfig) -> Self {
        Tolerances {
            eps: c.eps,
            match_tol: c.match_tol,
            dedup_tol: c.dedup_tol,
            closure_tol: c.closure_tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    pub identity_detected: bool,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: String,
    pub version: String,
    pub command: String,
    pub tolerances: Tolerances,
    pub instance: InstanceDocument,
    pub result: ResultBody,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ResultBody {
    Polygon(PolygonResult),
    Polyhedron(PolyhedronResult),
    Conic(ConicResult),
    Generalized(GeneralizedResult),
}

/// A candidate polygon; non-finite numbers are written as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub shift: usize,
    pub params: Vec<Option<f64>>,
    pub vertices: Vec<Option<Point>>,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<Violation>,
    pub closure_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonResult {
    pub count: usize,
    pub bound: usize,
    pub bound_satisfied: bool,
    pub per_shift_counts: Vec<usize>,
    pub identity_flags: Vec<bool>,
    pub solutions: Vec<Candidate>,
    pub rejected: Vec<Candidate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_matched: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleShift {
    pub shift: usize,
    pub fixed_points: Vec<f64>,
    pub scan_roots: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub grid: usize,
    pub shifts: Vec<OracleShift>,
    /// Every shift has the same number of roots on both routes.
    pub counts_agree: bool,
    pub max_discrepancy: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphOut {
    pub edge_params: Vec<EdgeParam>,
    pub per_face_choice: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyhedronResult {
    pub global_count: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub per_face_counts: Vec<usize>,
    pub unsolvable_faces: Vec<usize>,
    pub parity: ParityReport,
    pub bound_satisfied: bool,
    pub solutions: Vec<GraphOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_matched: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConicResult {
    /// `[a, b, c, d, e, f]` of `a x² + b xy + c y² + d x + e y + f = 0`.
    pub conic: [f64; 6],
    pub degenerate: bool,
    pub samples: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    /// Residuals of named points that must lie on the locus.
    pub membership: BTreeMap<String, f64>,
    pub locus: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedResult {
    pub count: usize,
    pub bound: usize,
    pub bound_satisfied: bool,
    pub infinite_family: bool,
    pub degenerate_skipped: usize,
    pub polygons: Vec<Vec<Point>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub schema: String,
    pub error: ErrorBody,
}

pub fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}
