//! Fixture builders shared by the benchmarks.
//!
//! Everything is seeded so runs compare like with like.

use inscribe_core::polygon::PolygonInstance;
use inscribe_core::polyhedron::{make_octahedron_example, OctahedronExample};
use inscribe_core::sampling::{random_line_configuration, seeded_instance, SeededInstance};
use inscribe_core::{Line, Point, SolverConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x1b5c_7e02;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// `count` planted n-gon instances.
pub fn polygon_instances(n: usize, count: usize) -> Vec<SeededInstance> {
    let mut r = rng(n as u64);
    (0..count).map(|_| seeded_instance(&mut r, n)).collect()
}

/// One planted instance at its own shift, ready for the scan.
pub fn scan_instance(n: usize) -> PolygonInstance {
    let s = polygon_instances(n, 1).remove(0);
    PolygonInstance::new(s.outer, s.inner, s.shift, SolverConfig::default().eps)
        .expect("planted instances are valid")
}

/// A chain of `n` lines and centers whose locus is a proper conic.
pub fn chain(n: usize) -> (Vec<Line>, Vec<Point>) {
    let mut r = rng(0x100 + n as u64);
    loop {
        let (lines, pts) = random_line_configuration(&mut r, n);
        if inscribe_core::conic::mb_locus(&lines, &pts, 8)
            .and_then(|s| inscribe_core::conic::fit(&s))
            .is_ok()
        {
            return (lines, pts);
        }
    }
}

pub fn octahedron() -> OctahedronExample {
    make_octahedron_example().expect("octahedron example builds")
}
