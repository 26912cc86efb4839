use super::{intersect_lines, line_through, strictly_interior, Line, Point, Segment, EPS};
use crate::error::{GeomError, Result};

fn interior_param(p: Point, from: Point, to: Point) -> Option<f64> {
    let seg = Segment::new(from, to).ok()?;
    let t = seg.param_of(p).ok()?;
    strictly_interior(t, EPS).then_some(t)
}

/// Ratios for two cevians `BD`, `CE` of triangle `ABC` meeting at `G` and a
/// transversal through `G` cutting `BE` at `F` and `CD` at `H`.
///
/// Returns `(|BF| / |FE|, |DH| / |HC|)`. For every admissible configuration
/// the first ratio is strictly larger; the function only measures, it does
/// not enforce that.
pub fn lemma21_ratios(
    tri: [Point; 3],
    d_on_ac: Point,
    e_on_ab: Point,
    transversal: &Line,
) -> Result<(f64, f64)> {
    let [a, b, c] = tri;
    if interior_param(d_on_ac, a, c).is_none() {
        return Err(GeomError::DomainError("D must lie strictly inside AC".into()));
    }
    if interior_param(e_on_ab, a, b).is_none() {
        return Err(GeomError::DomainError("E must lie strictly inside AB".into()));
    }
    let bd = line_through(b, d_on_ac)?;
    let ce = line_through(c, e_on_ab)?;
    let g = intersect_lines(&bd, &ce).map_err(|_| GeomError::DegenerateCevians)?;

    let scale = 1.0 + a.dist(b).max(b.dist(c)).max(c.dist(a));
    if transversal.eval(g).abs() > 1e3 * EPS * scale {
        return Err(GeomError::TransversalMiss);
    }

    let be = line_through(b, e_on_ab)?;
    let cd = line_through(c, d_on_ac)?;
    let f = intersect_lines(transversal, &be).map_err(|_| GeomError::TransversalMiss)?;
    let h = intersect_lines(transversal, &cd).map_err(|_| GeomError::TransversalMiss)?;
    if interior_param(f, b, e_on_ab).is_none() || interior_param(h, c, d_on_ac).is_none() {
        return Err(GeomError::TransversalMiss);
    }

    Ok((b.dist(f) / f.dist(e_on_ab), d_on_ac.dist(h) / h.dist(c)))
}
