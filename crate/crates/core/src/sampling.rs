//! Random instances for property tests, campaigns and benchmarks.

use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{line_through, ConvexPolygon, Line, Point};

/// Strictly convex counterclockwise n-gon: sorted angles on the unit circle
/// (no gap below a fraction of the mean gap), then a random
/// orientation-preserving affine map.
pub fn random_convex_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ConvexPolygon {
    let min_gap = 0.25 * TAU / n as f64;
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|i| {
            let next = if i + 1 < n { angles[i + 1] } else { angles[0] + TAU };
            next - angles[i] > min_gap
        });
        if !gaps_ok {
            continue;
        }
        let (m00, m01, m10, m11) = (
            rng.gen_range(0.5..2.0),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(0.5..2.0),
        );
        if m00 * m11 - m01 * m10 < 0.2 {
            continue;
        }
        let shift = Point::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let pts = angles
            .iter()
            .map(|a| {
                let (x, y) = (a.cos(), a.sin());
                Point::new(m00 * x + m01 * y, m10 * x + m11 * y) + shift
            })
            .collect();
        if let Ok(p) = ConvexPolygon::new(pts) {
            return p;
        }
    }
}

/// An instance with one known solution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeededInstance {
    pub outer: ConvexPolygon,
    pub inner: Vec<Point>,
    pub shift: usize,
    /// Parameters of the planted polygon on the sides of `outer`.
    pub b_params: Vec<f64>,
}

/// Picks `B_i` inside side `i` of a random polygon, then `C_i` inside
/// `B_{k+i} B_{k+i+1}` for a random shift `k`.
pub fn seeded_instance<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SeededInstance {
    let outer = random_convex_polygon(rng, n);
    let b_params: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..0.9)).collect();
    let b: Vec<Point> = (0..n).map(|i| outer.side(i).point_at(b_params[i])).collect();
    let shift = rng.gen_range(0..n);
    let inner = (0..n)
        .map(|i| {
            let u = rng.gen_range(0.1..0.9);
            b[(shift + i) % n].lerp(b[(shift + i + 1) % n], u)
        })
        .collect();
    SeededInstance {
        outer,
        inner,
        shift,
        b_params,
    }
}

/// `n` lines through random points with random directions, and `n` random
/// points, all in a box around the origin.
pub fn random_line_configuration<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (Vec<Line>, Vec<Point>) {
    let mut rp = |r: f64| Point::new(rng.gen_range(-r..r), rng.gen_range(-r..r));
    let lines = (0..n)
        .map(|_| loop {
            let p = rp(2.0);
            let q = rp(2.0);
            if let Ok(l) = line_through(p, q) {
                break l;
            }
        })
        .collect();
    let points = (0..n).map(|_| rp(1.5)).collect();
    (lines, points)
}
