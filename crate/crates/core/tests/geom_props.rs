use inscribe_core::geom::{
    intersect_lines, line_through, orientation, reflect_point, segment_param, Orientation, Segment,
};
use inscribe_core::{ConvexPolygon, GeomError, Point};
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = Point> {
    (-100.0..100.0f64, -100.0..100.0f64).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn line_through_contains_both_points(p in pt(), q in pt()) {
        prop_assume!(p.dist(q) > 1e-3);
        let l = line_through(p, q).unwrap();
        let scale = 1.0 + p.norm().max(q.norm());
        prop_assert!(l.eval(p).abs() < 1e-12 * scale);
        prop_assert!(l.eval(q).abs() < 1e-12 * scale);
    }

    #[test]
    fn two_lines_through_a_point_meet_there(p in pt(), a in 0.0..std::f64::consts::PI, da in 0.2..2.9f64) {
        let d1 = Point::new(a.cos(), a.sin());
        let d2 = Point::new((a + da).cos(), (a + da).sin());
        let l1 = line_through(p, p + d1).unwrap();
        let l2 = line_through(p, p + d2).unwrap();
        let x = intersect_lines(&l1, &l2).unwrap();
        prop_assert!(x.dist(p) < 1e-10 * (1.0 + p.norm()));
    }

    #[test]
    fn reflection_is_an_involution(p in pt(), q in pt(), r in pt()) {
        prop_assume!(q.dist(r) > 1e-3);
        let l = line_through(q, r).unwrap();
        let back = reflect_point(reflect_point(p, &l), &l);
        let scale = 1.0 + p.norm().max(q.norm()).max(r.norm());
        prop_assert!(back.dist(p) < 1e-12 * scale * 10.0);
    }

    #[test]
    fn orientation_flips_under_swap(p in pt(), q in pt(), r in pt()) {
        let o1 = orientation(p, q, r).sign();
        let o2 = orientation(q, p, r).sign();
        prop_assert_eq!(o1, -o2);
    }

    #[test]
    fn segment_param_round_trip(p in pt(), q in pt(), t in -2.0..3.0f64) {
        prop_assume!(p.dist(q) > 1e-2);
        let s = Segment::new(p, q).unwrap();
        let got = segment_param(s.point_at(t), &s).unwrap();
        prop_assert!((got - t).abs() < 1e-9);
    }
}

#[test]
fn parallel_lines_are_rejected() {
    let l1 = line_through(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).unwrap();
    let l2 = line_through(Point::new(0.0, 1.0), Point::new(1.0, 1.0)).unwrap();
    assert_eq!(intersect_lines(&l1, &l2), Err(GeomError::ParallelLines));
}

#[test]
fn coincident_points_do_not_define_a_line() {
    let p = Point::new(1.0, 2.0);
    assert_eq!(line_through(p, p).unwrap_err(), GeomError::CoincidentPoints);
}

#[test]
fn orientation_of_ccw_triangle() {
    let o = orientation(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0));
    assert_eq!(o, Orientation::CounterClockwise);
}

#[test]
fn convex_polygon_rejects_clockwise_and_reflex() {
    let cw = vec![Point::new(0.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 0.0)];
    assert!(matches!(ConvexPolygon::new(cw), Err(GeomError::NotConvex { .. })));
    let dart = vec![
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(1.0, 0.5),
        Point::new(1.0, 2.0),
    ];
    assert!(ConvexPolygon::new(dart).is_err());
    let tri = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
    assert_eq!(ConvexPolygon::new(tri).unwrap_err(), GeomError::TooFewVertices);
}
