//! Command implementations behind the `inscribe` binary.
//!
//! Every command turns a parsed document into a [`ResultDocument`] (or a
//! generated [`InstanceDocument`]) plus an exit code; `main` only handles
//! argument parsing and printing.

pub mod doc;
pub mod render;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::path::Path;

use inscribe_core::conic::{fit, mb_locus, MIN_LOCUS_SAMPLES};
use inscribe_core::geom::{intersect_lines, line_through};
use inscribe_core::polygon::{
    brute_force_scan, enumerate_generalized, fixed_params_in_unit, param_distance,
    MAX_INSCRIBED,
};
use inscribe_core::polyhedron::{
    example1_gamma, make_cube, make_glued_octahedra, make_octahedron, make_octahedron_example,
    make_tetrahedron, solve_graph, validate_graph, GammaSpec, PolyhedronGraph,
};
use inscribe_core::regular::{construct_appendix_a, make_regular_instance, RegularGonSpec};
use inscribe_core::{
    solve_all, ConvexPolygon, GeomError, Line, Point, PolygonInstance, SolutionPolygon,
    SolverConfig,
};

pub use doc::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

/// Largest `n` accepted by `enumerate-generalized`.
pub const CLI_MAX_GENERALIZED_N: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn input(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
            exit_code: EXIT_INPUT,
        }
    }

    pub fn to_document(&self) -> ErrorDocument {
        ErrorDocument {
            schema: SCHEMA.into(),
            error: ErrorBody {
                code: self.code.clone(),
                message: self.message.clone(),
                exit_code: self.exit_code,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}

// Geometric degeneracies exit with 3; everything else is bad input.
impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        use GeomError::*;
        let (code, exit_code) = match &e {
            CoincidentPoints => ("coincident_points", EXIT_INPUT),
            OffLine { .. } => ("off_line", EXIT_INPUT),
            LineAtInfinity => ("line_at_infinity", EXIT_INPUT),
            NonFinite => ("non_finite", EXIT_INPUT),
            TooFewVertices => ("too_few_vertices", EXIT_INPUT),
            NotConvex { .. } => ("not_convex", EXIT_INPUT),
            NotInside { .. } => ("not_inside", EXIT_INPUT),
            CountMismatch { .. } => ("count_mismatch", EXIT_INPUT),
            TransversalMiss => ("transversal_miss", EXIT_INPUT),
            DomainError(_) => ("domain_error", EXIT_INPUT),
            NoRealRoots => ("no_real_roots", EXIT_INPUT),
            RootsOutOfRange => ("roots_out_of_range", EXIT_INPUT),
            SameOrder => ("same_order", EXIT_INPUT),
            PointsNotOnConic { .. } => ("points_not_on_conic", EXIT_INPUT),
            OffPlane { .. } => ("off_plane", EXIT_INPUT),
            InvalidGraph(_) => ("invalid_graph", EXIT_INPUT),
            TooLarge(_) => ("too_large", EXIT_INPUT),
            ParallelLines => ("parallel_lines", EXIT_DEGENERATE),
            DegenerateCevians => ("degenerate_cevians", EXIT_DEGENERATE),
            SingularMap => ("singular_map", EXIT_DEGENERATE),
            CenterOnLine => ("center_on_line", EXIT_DEGENERATE),
            TooManyCoincidences => ("too_many_coincidences", EXIT_DEGENERATE),
            SingularDenominator => ("singular_denominator", EXIT_DEGENERATE),
            RankDeficient => ("rank_deficient", EXIT_DEGENERATE),
            LineOnConic => ("line_on_conic", EXIT_DEGENERATE),
            DegenerateChain { .. } => ("degenerate_chain", EXIT_DEGENERATE),
            NotPerspective { .. } => ("not_perspective", EXIT_DEGENERATE),
        };
        CliError {
            code: code.into(),
            message: e.to_string(),
            exit_code,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Solver settings from the command line; `None` keeps the default.
pub fn solver_config(eps: Option<f64>, match_tol: Option<f64>) -> CliResult<SolverConfig> {
    let mut cfg = SolverConfig::default();
    for (name, value, slot) in [("eps", eps, &mut cfg.eps), ("match-tol", match_tol, &mut cfg.match_tol)] {
        if let Some(v) = value {
            if !(v.is_finite() && v > 0.0 && v < 1.0) {
                return Err(CliError::input("bad_tolerance", format!("--{name} must be in (0, 1), got {v}")));
            }
            *slot = v;
        }
    }
    Ok(cfg)
}

/// Reads a file, or stdin for `None` and `-`.
pub fn read_input(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| CliError::input("io_error", format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::input("io_error", format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn parse_instance(text: &str) -> CliResult<InstanceDocument> {
    let doc: InstanceDocument =
        serde_json::from_str(text).map_err(|e| CliError::input("parse_error", e.to_string()))?;
    check_schema(&doc.schema)?;
    Ok(doc)
}

fn check_schema(schema: &str) -> CliResult<()> {
    if schema != SCHEMA {
        return Err(CliError::input(
            "schema_mismatch",
            format!("expected schema {SCHEMA}, got {schema}"),
        ));
    }
    Ok(())
}

fn wrong_kind(doc: &InstanceDocument, want: &str) -> CliError {
    CliError::input(
        "wrong_kind",
        format!("expected a {want} document, got {}", doc.payload.kind()),
    )
}

fn result_document(
    command: &str,
    cfg: &SolverConfig,
    instance: &InstanceDocument,
    result: ResultBody,
    diagnostics: Diagnostics,
) -> ResultDocument {
    ResultDocument {
        schema: SCHEMA.into(),
        version: VERSION.into(),
        command: command.into(),
        tolerances: (*cfg).into(),
        instance: instance.clone(),
        result,
        diagnostics,
    }
}

fn candidate(sol: &SolutionPolygon, outer: &ConvexPolygon) -> Candidate {
    let vertices = sol
        .vertices(outer)
        .into_iter()
        .map(|p| p.is_finite().then_some(p))
        .collect();
    Candidate {
        shift: sol.shift,
        params: sol.params.iter().map(|&t| finite(t)).collect(),
        vertices,
        valid: sol.valid,
        reasons: sol.reasons.clone(),
        closure_residual: finite(sol.closure_residual),
    }
}

/// `solve-polygon`: every shift, the bound check and optionally the
/// brute-force oracle. Exit 3 when some shift's return map is the identity.
pub fn solve_polygon(
    doc: &InstanceDocument,
    cfg: &SolverConfig,
    oracle_grid: Option<usize>,
) -> CliResult<(ResultDocument, i32)> {
    let Payload::Polygon(p) = &doc.payload else {
        return Err(wrong_kind(doc, "polygon"));
    };
    let outer = ConvexPolygon::with_tolerance(p.outer.clone(), cfg.eps)?;
    let set = solve_all(&outer, &p.inner, cfg)?;

    let oracle = match oracle_grid {
        Some(grid) => Some(run_oracle(&outer, &p.inner, cfg, grid)?),
        None => None,
    };
    let expected_matched = match &doc.expected {
        Some(Expected::RegularFamily { polygons, .. }) => Some(
            set.count() == polygons.len()
                && polygons.iter().all(|k| {
                    set.solutions
                        .iter()
                        .any(|s| s.shift == k.shift && param_distance(&s.params, &k.params) < 1e-8)
                }),
        ),
        _ => None,
    };

    let mut diagnostics = Diagnostics {
        identity_detected: set.identity_detected(),
        ..Default::default()
    };
    if set.identity_detected() {
        diagnostics.warnings.push(
            "a return map is the identity; that shift has infinitely many closed chains and is not counted"
                .into(),
        );
    }
    if let Some(o) = &oracle {
        if !o.counts_agree {
            diagnostics.warnings.push("oracle and fixed points disagree on a root count".into());
        }
    }
    let body = PolygonResult {
        count: set.count(),
        bound: MAX_INSCRIBED,
        bound_satisfied: set.count() <= MAX_INSCRIBED,
        per_shift_counts: set.per_shift_counts.clone(),
        identity_flags: set.identity_flags.clone(),
        solutions: set.solutions.iter().map(|s| candidate(s, &outer)).collect(),
        rejected: set.rejected.iter().map(|s| candidate(s, &outer)).collect(),
        expected_matched,
        oracle,
    };
    let code = if set.identity_detected() { EXIT_DEGENERATE } else { EXIT_OK };
    Ok((
        result_document("solve-polygon", cfg, doc, ResultBody::Polygon(body), diagnostics),
        code,
    ))
}

fn run_oracle(outer: &ConvexPolygon, inner: &[Point], cfg: &SolverConfig, grid: usize) -> CliResult<OracleReport> {
    let base = PolygonInstance::new(outer.clone(), inner.to_vec(), 0, cfg.eps)?;
    let mut shifts = Vec::new();
    let mut counts_agree = true;
    let mut worst: Option<f64> = None;
    for k in 0..base.n() {
        let inst = base.with_shift(k);
        let fixed = fixed_params_in_unit(&inst, cfg)?;
        let scan = brute_force_scan(&inst, grid);
        if fixed.len() == scan.len() {
            for (a, b) in fixed.iter().zip(&scan) {
                let d = (a - b).abs();
                worst = Some(worst.map_or(d, |w| w.max(d)));
            }
        } else {
            counts_agree = false;
        }
        shifts.push(OracleShift {
            shift: k,
            fixed_points: fixed,
            scan_roots: scan,
        });
    }
    Ok(OracleReport {
        grid: grid.max(100),
        shifts,
        counts_agree,
        max_discrepancy: worst,
    })
}

fn polyhedron_of(p: &PolyhedronPayload) -> CliResult<(PolyhedronGraph, GammaSpec)> {
    let g = PolyhedronGraph::new(p.vertices.clone(), p.faces.clone())?;
    if p.gamma.len() != g.faces.len() {
        return Err(GeomError::CountMismatch {
            expected: g.faces.len(),
            got: p.gamma.len(),
        }
        .into());
    }
    Ok((g, GammaSpec { faces: p.gamma.clone() }))
}

/// `solve-polyhedron`: graph validation, parity, and the stitched solutions.
pub fn solve_polyhedron(doc: &InstanceDocument, cfg: &SolverConfig) -> CliResult<(ResultDocument, i32)> {
    let Payload::Polyhedron(p) = &doc.payload else {
        return Err(wrong_kind(doc, "polyhedron"));
    };
    let (g, gamma) = polyhedron_of(p)?;
    let report = validate_graph(&g);
    if !report.ok() {
        let mut problems = Vec::new();
        for (e, count) in &report.bad_edges {
            problems.push(format!("edge {}-{} lies on {count} faces", e.0, e.1));
        }
        if !report.nonplanar_faces.is_empty() {
            problems.push(format!("nonplanar faces {:?}", report.nonplanar_faces));
        }
        if !report.nonconvex_faces.is_empty() {
            problems.push(format!("nonconvex faces {:?}", report.nonconvex_faces));
        }
        return Err(CliError::input("invalid_graph", problems.join("; ")));
    }
    let solved = solve_graph(&g, &gamma, cfg)?;
    let expected_matched = match &doc.expected {
        Some(Expected::InscribedGraphs { graphs }) => Some(
            solved.solutions.len() == graphs.len()
                && graphs
                    .iter()
                    .all(|b| solved.solutions.iter().any(|s| s.distance_to(b) < 1e-8)),
        ),
        _ => None,
    };
    let mut diagnostics = Diagnostics::default();
    if !solved.parity.all_even {
        diagnostics
            .warnings
            .push("some vertex meets an odd number of faces; no inscribed graph can close there".into());
    }
    let body = PolyhedronResult {
        global_count: solved.solutions.len(),
        vertices: report.vertices,
        edges: report.edges,
        faces: report.faces,
        euler: report.euler,
        per_face_counts: solved.per_face_counts,
        unsolvable_faces: solved.unsolvable_faces,
        parity: solved.parity,
        bound_satisfied: solved.bound_satisfied,
        solutions: solved
            .solutions
            .into_iter()
            .map(|s| GraphOut {
                edge_params: s.edge_params,
                per_face_choice: s.per_face_choice,
            })
            .collect(),
        expected_matched,
    };
    Ok((
        result_document("solve-polyhedron", cfg, doc, ResultBody::Polyhedron(body), diagnostics),
        EXIT_OK,
    ))
}

pub fn lines_of(p: &LinesPayload) -> CliResult<Vec<Line>> {
    p.lines
        .iter()
        .map(|[a, b]| line_through(*a, *b).map_err(CliError::from))
        .collect()
}

/// `conic-locus`: samples the chain locus and fits a conic.
pub fn conic_locus(doc: &InstanceDocument, cfg: &SolverConfig, samples: usize) -> CliResult<(ResultDocument, i32)> {
    let Payload::ConicChain(p) = &doc.payload else {
        return Err(wrong_kind(doc, "conic-chain"));
    };
    if samples < MIN_LOCUS_SAMPLES {
        return Err(CliError::input(
            "too_few_samples",
            format!("--samples {samples}: need at least {MIN_LOCUS_SAMPLES}"),
        ));
    }
    let lines = lines_of(p)?;
    let centers = &p.points;
    let n = lines.len();
    let locus = mb_locus(&lines, centers, samples)?;
    let f = fit(&locus)?;

    let mut membership = BTreeMap::new();
    membership.insert("c_first".to_string(), f.conic.residual(centers[0]));
    membership.insert("c_last".to_string(), f.conic.residual(centers[n - 1]));
    if n == 3 {
        let named = [
            ("apex", intersect_lines(&lines[1], &lines[2]).ok()),
            (
                "p",
                line_through(centers[1], centers[2])
                    .and_then(|l| intersect_lines(&lines[1], &l))
                    .ok(),
            ),
            (
                "q",
                line_through(centers[0], centers[1])
                    .and_then(|l| intersect_lines(&lines[2], &l))
                    .ok(),
            ),
        ];
        for (name, pt) in named {
            if let Some(pt) = pt {
                membership.insert(name.to_string(), f.conic.residual(pt));
            }
        }
    }
    let residuals: Vec<f64> = locus.iter().map(|q| f.conic.residual(*q)).collect();
    let degenerate = f.conic.is_degenerate(1e-10);
    let diagnostics = Diagnostics {
        degenerate,
        warnings: if degenerate {
            vec!["the locus is a degenerate conic (a line pair)".into()]
        } else {
            Vec::new()
        },
        ..Default::default()
    };
    let body = ConicResult {
        conic: f.conic.coefficients(),
        degenerate,
        samples: locus.len(),
        max_residual: f.max_residual,
        mean_residual: residuals.iter().sum::<f64>() / residuals.len() as f64,
        membership,
        locus,
    };
    let code = if degenerate { EXIT_DEGENERATE } else { EXIT_OK };
    Ok((result_document("conic-locus", cfg, doc, ResultBody::Conic(body), diagnostics), code))
}

/// `enumerate-generalized`: closed polygons on full lines over every order
/// and assignment. Exit 3 when an identity sub-problem was excluded.
pub fn enumerate(doc: &InstanceDocument, cfg: &SolverConfig) -> CliResult<(ResultDocument, i32)> {
    let Payload::Generalized(p) = &doc.payload else {
        return Err(wrong_kind(doc, "generalized"));
    };
    let n = p.lines.len();
    if n > CLI_MAX_GENERALIZED_N {
        return Err(CliError::input(
            "too_large",
            format!("n = {n}: enumerate-generalized accepts n <= {CLI_MAX_GENERALIZED_N}"),
        ));
    }
    let lines = lines_of(p)?;
    let report = enumerate_generalized(&lines, &p.points, cfg)?;
    let mut diagnostics = Diagnostics {
        identity_detected: report.infinite_family,
        degenerate: report.degenerate_skipped > 0,
        ..Default::default()
    };
    if report.infinite_family {
        diagnostics
            .warnings
            .push("an infinite family was excluded from the count".into());
    }
    let body = GeneralizedResult {
        count: report.count,
        bound: report.bound,
        bound_satisfied: report.bound_satisfied,
        infinite_family: report.infinite_family,
        degenerate_skipped: report.degenerate_skipped,
        polygons: report.solutions.into_iter().map(|s| s.vertices).collect(),
    };
    let code = if report.infinite_family { EXIT_DEGENERATE } else { EXIT_OK };
    Ok((
        result_document("enumerate-generalized", cfg, doc, ResultBody::Generalized(body), diagnostics),
        code,
    ))
}

/// `gen-regular`: the regular instance with its four known solutions.
pub fn gen_regular(n: usize, a: f64, construct: bool) -> CliResult<InstanceDocument> {
    let spec = RegularGonSpec::new(n, a)?;
    let fam = make_regular_instance(&spec)?;
    let construction = if construct { Some(construct_appendix_a(n, a)?) } else { None };
    let mut metadata = BTreeMap::new();
    metadata.insert("generator".into(), "gen-regular".into());
    metadata.insert("n".into(), n.to_string());
    metadata.insert("a".into(), a.to_string());
    Ok(InstanceDocument {
        schema: SCHEMA.into(),
        payload: Payload::Polygon(PolygonPayload {
            outer: fam.outer.vertices().to_vec(),
            inner: fam.inner,
        }),
        metadata,
        expected: Some(Expected::RegularFamily {
            n,
            a,
            x_values: fam.x_values,
            polygons: fam.polygons,
            construction,
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solid {
    Octahedron,
    Tetrahedron,
    Cube,
}

/// `gen-octahedron`: a solid with the regular inner triangle (or square) on
/// every face. Only the single octahedron carries known solutions.
pub fn gen_octahedron(solid: Solid, glued: usize) -> CliResult<InstanceDocument> {
    let mut metadata = BTreeMap::new();
    metadata.insert("generator".into(), "gen-octahedron".into());
    let (graph, gamma, expected) = match (solid, glued) {
        (Solid::Octahedron, 1) => {
            let ex = make_octahedron_example()?;
            (ex.graph, ex.gamma, Some(Expected::InscribedGraphs { graphs: ex.betas }))
        }
        (Solid::Octahedron, k) => {
            let g = make_glued_octahedra(k)?;
            let gamma = example1_gamma(&g)?;
            (g, gamma, None)
        }
        (other, 1) => {
            let g = match other {
                Solid::Tetrahedron => make_tetrahedron(),
                Solid::Cube => make_cube(),
                Solid::Octahedron => make_octahedron(),
            };
            let gamma = example1_gamma(&g)?;
            (g, gamma, None)
        }
        (_, _) => {
            return Err(CliError::input("domain_error", "--glued applies to the octahedron only"));
        }
    };
    metadata.insert(
        "solid".into(),
        match solid {
            Solid::Octahedron => "octahedron",
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
        }
        .into(),
    );
    metadata.insert("glued".into(), glued.to_string());
    Ok(InstanceDocument {
        schema: SCHEMA.into(),
        payload: Payload::Polyhedron(PolyhedronPayload {
            vertices: graph.vertices,
            faces: graph.faces,
            gamma: gamma.faces,
        }),
        metadata,
        expected,
    })
}

/// Either document kind accepted by `render`.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDocument {
    Instance(InstanceDocument),
    Result(Box<ResultDocument>),
}

pub fn parse_any(text: &str) -> CliResult<AnyDocument> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::input("parse_error", e.to_string()))?;
    if value.get("result").is_some() {
        let doc: ResultDocument =
            serde_json::from_value(value).map_err(|e| CliError::input("parse_error", e.to_string()))?;
        check_schema(&doc.schema)?;
        Ok(AnyDocument::Result(Box::new(doc)))
    } else {
        let doc: InstanceDocument =
            serde_json::from_value(value).map_err(|e| CliError::input("parse_error", e.to_string()))?;
        check_schema(&doc.schema)?;
        Ok(AnyDocument::Instance(doc))
    }
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}
