//! Polygons inscribed in a convex polygon and circumscribed about a set of
//! points, solved through central projections and their fixed points.

pub mod conic;
pub mod error;
pub mod geom;
pub mod polygon;
pub mod polyhedron;
pub mod projective;
pub mod regular;
pub mod sampling;

pub use error::{GeomError, Result};
pub use geom::{ConvexPolygon, Line, Point, Segment, EPS};
pub use polygon::{solve_all, PolygonInstance, SolutionPolygon, SolutionSet, SolverConfig};
pub use projective::{MoebiusMap, ProjParam};
