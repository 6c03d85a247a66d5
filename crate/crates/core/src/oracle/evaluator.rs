use crate::error::Result;
use crate::geometry::PointSet;
use crate::measure::{Moments, partial_moments};
use crate::rational::{Rational, int};

/// Refinement depth used when the caller does not choose one.
pub const DEFAULT_MAX_DEPTH: u32 = 40;

/// Moments of `P` over each projected Voronoi cell, left to right.
pub fn cell_moments(points: &PointSet, max_depth: u32) -> Result<Vec<Moments>> {
    let mut cells = Vec::with_capacity(points.len());
    let mut below = Moments::zero();
    for b in points.cell_boundaries() {
        let upto = partial_moments(&b, max_depth)?;
        cells.push(&upto - &below);
        below = upto;
    }
    cells.push(&Moments::total() - &below);
    Ok(cells)
}

/// `V(P; α) = ∫ min_{p ∈ α} ρ(x, p) dP(x)`, exact.
///
/// Over a cell with moments `(w, s_1, s_2)` served by `(a, a + 1/j)` the
/// integral of `ρ` is `s_2 - 2a s_1 + a^2 w + (a + 1/j)^2 w`. Fails with
/// `DepthExceeded` when a cell boundary needs more than `max_depth`
/// refinements to be resolved.
pub fn exact_distortion(points: &PointSet, max_depth: u32) -> Result<Rational> {
    Ok(distortion_from_cells(points, &cell_moments(points, max_depth)?))
}

pub(crate) fn distortion_from_cells(points: &PointSet, cells: &[Moments]) -> Rational {
    points
        .points()
        .iter()
        .zip(cells)
        .map(|(p, m)| {
            let y = p.y();
            m.squared_deviation(p.x()) + &y * &y * &m.mass
        })
        .fold(int(0), |acc, v| acc + v)
}
