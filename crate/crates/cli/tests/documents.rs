use inscribe_cli::doc::{Expected, InstanceDocument, LinesPayload, Payload, ResultBody, SCHEMA};
use inscribe_cli::render::{render, Axis};
use inscribe_cli::*;
use inscribe_core::{Point, SolverConfig};

fn chain(kind: &str) -> InstanceDocument {
    let p = |x: f64, y: f64| Point::new(x, y);
    let payload = LinesPayload {
        lines: vec![[p(0.0, 0.0), p(4.0, 0.0)], [p(4.0, 0.0), p(3.0, 3.0)], [p(3.0, 3.0), p(0.0, 2.0)]],
        points: vec![p(1.5, 0.8), p(2.6, 1.2), p(1.4, 1.6)],
    };
    InstanceDocument {
        schema: SCHEMA.into(),
        payload: if kind == "generalized" {
            Payload::Generalized(payload)
        } else {
            Payload::ConicChain(payload)
        },
        metadata: Default::default(),
        expected: None,
    }
}

fn round_trip_instance(doc: &InstanceDocument) {
    let text = to_json(doc);
    assert_eq!(&parse_instance(&text).unwrap(), doc);
    match parse_any(&text).unwrap() {
        AnyDocument::Instance(d) => assert_eq!(&d, doc),
        AnyDocument::Result(_) => panic!("instance read as result"),
    }
}

fn round_trip_result(doc: &doc::ResultDocument) {
    let text = to_json(doc);
    match parse_any(&text).unwrap() {
        AnyDocument::Result(d) => assert_eq!(&*d, doc),
        AnyDocument::Instance(_) => panic!("result read as instance"),
    }
    // emitting again gives the same bytes
    assert_eq!(to_json(&*match parse_any(&text).unwrap() {
        AnyDocument::Result(d) => d,
        _ => unreachable!(),
    }), text);
}

#[test]
fn instances_round_trip() {
    for n in [3, 4, 5, 9] {
        round_trip_instance(&gen_regular(n, 1.0, true).unwrap());
    }
    round_trip_instance(&gen_regular(7, 2.5, false).unwrap());
    round_trip_instance(&gen_octahedron(Solid::Octahedron, 1).unwrap());
    round_trip_instance(&gen_octahedron(Solid::Octahedron, 3).unwrap());
    round_trip_instance(&gen_octahedron(Solid::Cube, 1).unwrap());
    round_trip_instance(&chain("conic-chain"));
    round_trip_instance(&chain("generalized"));
}

#[test]
fn results_round_trip() {
    let cfg = SolverConfig::default();
    let poly = gen_regular(5, 1.0, false).unwrap();
    let (r, code) = solve_polygon(&poly, &cfg, Some(2000)).unwrap();
    assert_eq!(code, EXIT_OK);
    assert!(matches!(r.result, ResultBody::Polygon(_)));
    round_trip_result(&r);

    let (r, _) = solve_polyhedron(&gen_octahedron(Solid::Octahedron, 1).unwrap(), &cfg).unwrap();
    assert!(matches!(r.result, ResultBody::Polyhedron(_)));
    round_trip_result(&r);

    let (r, _) = conic_locus(&chain("conic-chain"), &cfg, 20).unwrap();
    assert!(matches!(r.result, ResultBody::Conic(_)));
    round_trip_result(&r);

    let (r, _) = enumerate(&chain("generalized"), &cfg).unwrap();
    assert!(matches!(r.result, ResultBody::Generalized(_)));
    round_trip_result(&r);
}

#[test]
fn error_document_round_trips() {
    let err = gen_regular(2, 1.0, false).unwrap_err();
    assert_eq!(err.exit_code, EXIT_INPUT);
    let d = err.to_document();
    let back: doc::ErrorDocument = serde_json::from_str(&to_json(&d)).unwrap();
    assert_eq!(back, d);
    assert_eq!(back.schema, SCHEMA);
}

#[test]
fn schema_defaults_and_mismatch() {
    let text = r#"{"kind":"polygon","payload":{"outer":[[0,0],[1,0],[0,1]],"inner":[[0.3,0.1],[0.4,0.4],[0.1,0.3]]}}"#;
    assert_eq!(parse_instance(text).unwrap().schema, SCHEMA);
    let bad = text.replacen('{', r#"{"schema":"inscribe/9","#, 1);
    let err = parse_instance(&bad).unwrap_err();
    assert_eq!(err.code, "schema_mismatch");
    assert_eq!(err.exit_code, EXIT_INPUT);
}

#[test]
fn generated_regular_carries_x_values() {
    let d = gen_regular(5, 1.0, false).unwrap();
    let Some(Expected::RegularFamily { x_values, polygons, .. }) = d.expected else {
        panic!("no expected block");
    };
    let c = 36f64.to_radians().cos();
    let want = [0.5, 1.0 / (1.0 + c * c)];
    let mut got = x_values;
    got.sort_by(f64::total_cmp);
    assert!((got[0] - want[0]).abs() < 1e-12 && (got[1] - want[1]).abs() < 1e-12, "{got:?}");
    assert_eq!(polygons.len(), 4);
}

#[test]
fn tolerance_validation() {
    assert!(solver_config(Some(1e-8), None).is_ok());
    for bad in [0.0, -1e-9, 1.0, f64::NAN] {
        assert_eq!(solver_config(Some(bad), None).unwrap_err().code, "bad_tolerance");
        assert_eq!(solver_config(None, Some(bad)).unwrap_err().code, "bad_tolerance");
    }
}

#[test]
fn wrong_kind_is_input_error() {
    let cfg = SolverConfig::default();
    let err = solve_polygon(&chain("conic-chain"), &cfg, None).unwrap_err();
    assert_eq!(err.exit_code, EXIT_INPUT);
}

#[test]
fn generalized_identity_exits_degenerate() {
    let mut d = chain("generalized");
    if let Payload::Generalized(p) = &mut d.payload {
        p.points = vec![Point::new(1.5, 1.0); 3];
    }
    let (r, code) = enumerate(&d, &SolverConfig::default()).unwrap();
    assert_eq!(code, EXIT_DEGENERATE);
    let ResultBody::Generalized(g) = r.result else { panic!() };
    assert!(g.infinite_family);
    assert_eq!(g.count, 0);
}

#[test]
fn render_is_deterministic_and_counts_shapes() {
    let cfg = SolverConfig::default();
    let (r, _) = solve_polygon(&gen_regular(4, 1.0, false).unwrap(), &cfg, None).unwrap();
    let doc = AnyDocument::Result(Box::new(r));
    let a = render(&doc, Axis::Z).unwrap();
    assert_eq!(a, render(&doc, Axis::Z).unwrap());
    // outer, four solutions, inner
    assert_eq!(a.matches("<polygon").count(), 6);
    assert_eq!(a.matches("<circle").count(), 4);
    assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));

    let oct = AnyDocument::Instance(gen_octahedron(Solid::Octahedron, 1).unwrap());
    let z = render(&oct, Axis::Z).unwrap();
    // 8 faces, 8 inner triangles, 4 graphs drawn on every face
    assert_eq!(z.matches("<polygon").count(), 8 + 8 + 4 * 8);
    assert_ne!(z, render(&oct, Axis::X).unwrap());

    let ch = AnyDocument::Instance(chain("conic-chain"));
    let s = render(&ch, Axis::Z).unwrap();
    assert!(s.matches("<polyline").count() >= 1);
    assert_eq!(s.matches("<line ").count(), 3);
}
