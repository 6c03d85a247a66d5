use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{PointSet, u_inverse};
use crate::measure::Moments;
use crate::rational::Rational;

use super::evaluator::{cell_moments, distortion_from_cells};

/// One constrained Lloyd update: every point moves to `U_n^{-1}` of the mean
/// of `P` over its projected Voronoi cell. Optimal sets are fixed points.
pub fn lloyd_step(points: &PointSet, max_depth: u32) -> Result<PointSet> {
    centroid_update(points, &cell_moments(points, max_depth)?)
}

fn centroid_update(points: &PointSet, cells: &[Moments]) -> Result<PointSet> {
    let n = points.n();
    let next = cells
        .iter()
        .enumerate()
        .map(|(index, cell)| {
            let mean = cell.mean().ok_or(Error::EmptyCell { index })?;
            u_inverse(n, &mean)
        })
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(n, next, points.split_set().to_vec())
}

#[derive(Debug, Clone)]
pub struct LloydRun {
    pub points: PointSet,
    pub steps: usize,
    pub converged: bool,
    /// Distortion of the start and of every iterate.
    pub distortions: Vec<Rational>,
    /// Points dropped because their cell carried no mass.
    pub pruned: usize,
}

/// Iterates the Lloyd update until an exact fixed point or `max_steps`.
///
/// A point whose cell has zero probability is dropped before the update.
/// Its neighbours' new common boundary lies inside the dropped cell, so
/// every remaining cell keeps its mass and the distortion is unchanged.
pub fn lloyd_iterate(start: &PointSet, max_steps: usize, max_depth: u32) -> Result<LloydRun> {
    let mut current = start.clone();
    let mut cells = cell_moments(&current, max_depth)?;
    let mut distortions = vec![distortion_from_cells(&current, &cells)];
    let mut pruned = 0;
    for steps in 0..max_steps {
        if cells.iter().any(|c| c.mass.is_zero()) {
            let (kept, kept_cells): (Vec<_>, Vec<_>) = current
                .points()
                .iter()
                .cloned()
                .zip(cells)
                .filter(|(_, c)| !c.mass.is_zero())
                .unzip();
            pruned += current.len() - kept.len();
            current = PointSet::new(current.n(), kept, current.split_set().to_vec())?;
            cells = kept_cells;
        }
        let next = centroid_update(&current, &cells)?;
        if next == current {
            return Ok(LloydRun { points: current, steps, converged: true, distortions, pruned });
        }
        current = next;
        cells = cell_moments(&current, max_depth)?;
        distortions.push(distortion_from_cells(&current, &cells));
    }
    Ok(LloydRun { points: current, steps: max_steps, converged: false, distortions, pruned })
}
