use inscribe_core::polygon::param_distance;
use inscribe_core::polygon::polygon_from_start;
use inscribe_core::polyhedron::{
    example1_gamma, face_instance, make_cube, make_glued_octahedra, make_octahedron,
    make_octahedron_example, make_tetrahedron, parity_check, solve_graph, validate_graph,
    FaceFrame, GammaSpec, InscribedGraphSolution, Point3, PolyhedronGraph,
};
use inscribe_core::regular::{make_regular_instance, RegularGonSpec};
use inscribe_core::{GeomError, Point, SolverConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn octahedron_is_valid() {
    let r = validate_graph(&make_octahedron());
    assert!(r.ok());
    assert_eq!((r.vertices, r.edges, r.faces, r.euler), (6, 12, 8, 2));
}

#[test]
fn warped_cube_has_three_nonplanar_faces() {
    let mut g = make_cube();
    g.vertices[7] = g.vertices[7] + Point3::new(0.1, 0.1, 0.1);
    let r = validate_graph(&g);
    assert_eq!(r.nonplanar_faces.len(), 3);
}

#[test]
fn glued_octahedra_validate() {
    for k in 1..=4 {
        let g = make_glued_octahedra(k).unwrap();
        let r = validate_graph(&g);
        assert!(r.bad_edges.is_empty(), "k = {k}");
        assert!(r.ok(), "k = {k}: {r:?}");
        assert_eq!(r.euler, 2);
        assert_eq!((r.vertices, r.edges, r.faces), (3 * k + 3, 9 * k + 3, 6 * k + 2));
    }
    assert_eq!(make_glued_octahedra(1).unwrap(), make_octahedron());
    assert!(make_glued_octahedra(0).is_err());
}

#[test]
fn parity_of_the_platonic_examples() {
    let octa = parity_check(&make_octahedron());
    assert!(octa.all_even && octa.face_degree.iter().all(|&d| d == 4));
    for g in [make_tetrahedron(), make_cube()] {
        let p = parity_check(&g);
        assert!(!p.all_even && p.face_degree.iter().all(|&d| d == 3));
    }
}

#[test]
fn face_instances_are_isometric_and_deterministic() {
    let cfg = SolverConfig::default();
    for g in [make_octahedron(), make_cube(), make_glued_octahedra(3).unwrap()] {
        let gamma = example1_gamma(&g).unwrap();
        for f in 0..g.faces.len() {
            let (inst, _) = face_instance(&g, f, &gamma, &cfg).unwrap();
            let (again, _) = face_instance(&g, f, &gamma, &cfg).unwrap();
            assert_eq!(inst, again);
            let pts3 = g.face_points(f);
            let pts2 = inst.outer().vertices();
            for i in 0..pts3.len() {
                for j in 0..pts3.len() {
                    assert!((pts3[i].dist(pts3[j]) - pts2[i].dist(pts2[j])).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn octahedron_face_matches_the_regular_triangle() {
    let cfg = SolverConfig::default();
    let g = make_octahedron();
    let gamma = example1_gamma(&g).unwrap();
    let (inst, _) = face_instance(&g, 0, &gamma, &cfg).unwrap();
    let a = g.vertices[g.faces[0][0]].dist(g.vertices[g.faces[0][1]]) / 2.0;
    let fam = make_regular_instance(&RegularGonSpec::new(3, a).unwrap()).unwrap();
    // compare distances from every outer vertex to every inner point
    for i in 0..3 {
        for j in 0..3 {
            let d1 = inst.outer().vertex(i).dist(inst.inner()[j]);
            let d2 = fam.outer.vertex(i).dist(fam.inner[j]);
            assert!((d1 - d2).abs() < 1e-12);
        }
    }
}

#[test]
fn gamma_off_the_face_plane_is_rejected() {
    let cfg = SolverConfig::default();
    let g = make_octahedron();
    let mut gamma = example1_gamma(&g).unwrap();
    let frame = FaceFrame::of(&g.face_points(2)).unwrap();
    gamma.faces[2][1] = gamma.faces[2][1] + frame.normal * 0.01;
    assert_eq!(
        face_instance(&g, 2, &gamma, &cfg).unwrap_err(),
        GeomError::OffPlane { face: 2, index: 1 }
    );
    assert!(solve_graph(&g, &gamma, &cfg).is_err());
}

#[test]
fn octahedron_example_round_trip() {
    let cfg = SolverConfig::default();
    let ex = make_octahedron_example().unwrap();
    assert!(validate_graph(&ex.graph).ok());
    assert!(parity_check(&ex.graph).all_even);
    let report = solve_graph(&ex.graph, &ex.gamma, &cfg).unwrap();
    assert_eq!(report.solutions.len(), 4);
    assert!(report.bound_satisfied);
    for beta in &ex.betas {
        assert!(report.solutions.iter().any(|s| s.distance_to(beta) < 1e-8));
    }
    // edges carry x / 2a for x in {a/2, 0.8a}, from either end
    for beta in &ex.betas {
        for p in beta {
            let ok = [0.25, 0.4, 0.6, 0.75].iter().any(|v| (p.t - v).abs() < 1e-12);
            assert!(ok, "edge {:?} at {}", p.edge, p.t);
        }
    }
}

fn rotate_gamma_face(g: &PolyhedronGraph, gamma: &mut GammaSpec, f: usize, angle: f64) {
    let frame = FaceFrame::of(&g.face_points(f)).unwrap();
    let pts: Vec<Point> = gamma.faces[f].iter().map(|&p| frame.to_2d(p)).collect();
    let c = pts.iter().fold(Point::new(0.0, 0.0), |s, &p| s + p) * (1.0 / pts.len() as f64);
    let (co, si) = (angle.cos(), angle.sin());
    gamma.faces[f] = pts
        .iter()
        .map(|&p| {
            let d = p - c;
            frame.to_3d(c + Point::new(co * d.x - si * d.y, si * d.x + co * d.y))
        })
        .collect();
}

#[test]
fn rotating_one_face_breaks_consistency() {
    let cfg = SolverConfig::default();
    let ex = make_octahedron_example().unwrap();
    let mut gamma = ex.gamma.clone();
    rotate_gamma_face(&ex.graph, &mut gamma, 3, 0.037);
    let report = solve_graph(&ex.graph, &gamma, &cfg).unwrap();
    assert!(report.solutions.is_empty());
}

#[test]
fn odd_degree_solids_have_no_graphs() {
    let cfg = SolverConfig::default();
    for g in [make_tetrahedron(), make_cube()] {
        let gamma = example1_gamma(&g).unwrap();
        let report = solve_graph(&g, &gamma, &cfg).unwrap();
        assert!(report.solutions.is_empty());
        assert!(!report.parity.all_even);
    }
}

fn revalidate(g: &PolyhedronGraph, gamma: &GammaSpec, sol: &InscribedGraphSolution, cfg: &SolverConfig) {
    for f in 0..g.faces.len() {
        let (inst, _) = face_instance(g, f, gamma, cfg).unwrap();
        let params: Vec<f64> = g
            .face_sides(f)
            .iter()
            .map(|&(u, v)| {
                let t = sol.param((u.min(v), u.max(v))).unwrap();
                if u < v {
                    t
                } else {
                    1.0 - t
                }
            })
            .collect();
        let n = params.len();
        let passes = (0..n).any(|k| {
            let cand = polygon_from_start(&inst.with_shift(k), params[0], cfg).unwrap();
            cand.valid && param_distance(&cand.params, &params) < 1e-7
        });
        assert!(passes, "face {f} fails planar validation: {params:?}");
    }
}

#[test]
fn returned_graphs_pass_per_face_validation() {
    let cfg = SolverConfig::default();
    let ex = make_octahedron_example().unwrap();
    let report = solve_graph(&ex.graph, &ex.gamma, &cfg).unwrap();
    for sol in &report.solutions {
        revalidate(&ex.graph, &ex.gamma, sol, &cfg);
    }
    for k in 1..=3 {
        let g = make_glued_octahedra(k).unwrap();
        let gamma = example1_gamma(&g).unwrap();
        let report = solve_graph(&g, &gamma, &cfg).unwrap();
        assert!(!report.solutions.is_empty() && report.solutions.len() <= 4, "k = {k}");
        for sol in &report.solutions {
            revalidate(&g, &gamma, sol, &cfg);
        }
    }
}

#[test]
fn random_inner_polygons_stay_within_the_bound() {
    let cfg = SolverConfig::default();
    let g = make_octahedron();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..50 {
        let mut gamma = example1_gamma(&g).unwrap();
        for f in 0..g.faces.len() {
            if rng.gen_bool(0.5) {
                rotate_gamma_face(&g, &mut gamma, f, rng.gen_range(-0.2..0.2));
            }
        }
        let report = solve_graph(&g, &gamma, &cfg).unwrap();
        assert!(report.solutions.len() <= 4);
        assert!(report.bound_satisfied);
    }
}
