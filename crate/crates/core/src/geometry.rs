//! The constraint segments `S_j`, the squared distance `ρ` from the real
//! axis to the plane, and the perpendicular-foot bijections `U_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::measure::Word;
use crate::rational::{Rational, frac, int};

/// A point of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanePoint { x, y }
    }

    /// `ρ(t, (a, b)) = (t - a)^2 + b^2`: squared distance from `(t, 0)`.
    pub fn rho(&self, t: &Rational) -> Rational {
        let dx = t - &self.x;
        &dx * &dx + &self.y * &self.y
    }
}

/// A point `(x, x + 1/j)` on `S_j`. Only `(j, x)` is stored, so the point
/// can never leave its line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintPoint {
    j: u64,
    x: Rational,
}

impl ConstraintPoint {
    /// Fails unless `-1/j <= x <= 1`.
    pub fn new(j: u64, x: Rational) -> Result<Self> {
        if j == 0 {
            return Err(Error::ZeroIndex);
        }
        if x < -offset(j) || x > int(1) {
            return Err(Error::OffConstraint { j, x });
        }
        Ok(ConstraintPoint { j, x })
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> Rational {
        &self.x + offset(self.j)
    }

    pub fn to_plane(&self) -> PlanePoint {
        PlanePoint::new(self.x.clone(), self.y())
    }
}

impl fmt::Display for ConstraintPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y())
    }
}

fn offset(j: u64) -> Rational {
    Rational::new(1.into(), j.into())
}

/// `ρ(x, p) = (x - p.x)^2 + (p.x + 1/j)^2`.
pub fn rho(x: &Rational, p: &ConstraintPoint) -> Rational {
    let dx = x - p.x();
    let y = p.y();
    &dx * &dx + &y * &y
}

/// `U_j(x, x + 1/j) = 2x + 1/j`, where the perpendicular to `S_j` through
/// the point meets the real axis.
pub fn u_forward(p: &ConstraintPoint) -> Rational {
    int(2) * p.x() + offset(p.j())
}

/// `U_j^{-1}(t) = (½(t - 1/j), ½(t - 1/j) + 1/j)`. Never clamps: `t` must be
/// in `U_j(S_j) = [-1/j, 2 + 1/j]`.
pub fn u_inverse(j: u64, t: &Rational) -> Result<ConstraintPoint> {
    if j == 0 {
        return Err(Error::ZeroIndex);
    }
    let x = (t - offset(j)) / int(2);
    ConstraintPoint::new(j, x).map_err(|_| Error::OutsideImage { j, t: t.clone() })
}

/// Abscissa range `[-1/(2n), 1/2 - 1/(2n)]` of `U_n^{-1}([0, 1])`.
pub fn feasible_window(n: u64) -> (Rational, Rational) {
    let h = Rational::new(1.into(), (2 * n).into());
    (-h.clone(), frac(1, 2) - h)
}

/// An ordered codebook on `S_n`, together with the split set that produced
/// it (empty for sets not built from a split set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    n: u64,
    points: Vec<ConstraintPoint>,
    split_set: Vec<Word>,
}

impl PointSet {
    /// Sorts by abscissa and drops duplicates. All points must lie on `S_n`
    /// and at most `n` distinct points may remain.
    pub fn new(n: u64, mut points: Vec<ConstraintPoint>, split_set: Vec<Word>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(p) = points.iter().find(|p| p.j() != n) {
            return Err(Error::WrongConstraint { n, found: p.j() });
        }
        points.sort_by(|a, b| a.x().cmp(b.x()));
        points.dedup();
        if points.len() as u64 > n {
            return Err(Error::TooManyPoints { n, count: points.len() });
        }
        Ok(PointSet { n, points, split_set })
    }

    pub fn from_abscissas(n: u64, xs: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let points = xs
            .into_iter()
            .map(|x| ConstraintPoint::new(n, x))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(n, points, Vec::new())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn points(&self) -> &[ConstraintPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn split_set(&self) -> &[Word] {
        &self.split_set
    }

    pub fn abscissas(&self) -> Vec<Rational> {
        self.points.iter().map(|p| p.x().clone()).collect()
    }

    /// `U_n` images, ascending.
    pub fn projections(&self) -> Vec<Rational> {
        self.points.iter().map(u_forward).collect()
    }

    /// Boundaries of the projected Voronoi cells: the midpoints of
    /// consecutive `U_n` images.
    pub fn cell_boundaries(&self) -> Vec<Rational> {
        let t = self.projections();
        t.windows(2).map(|w| (&w[0] + &w[1]) / int(2)).collect()
    }

    pub fn within_window(&self) -> bool {
        let (lo, hi) = feasible_window(self.n);
        self.points.iter().all(|p| *p.x() >= lo && *p.x() <= hi)
    }

    /// Nearest point by `ρ`, ties to the left.
    pub fn nearest(&self, x: &Rational) -> usize {
        let mut best = 0;
        let mut best_d = rho(x, &self.points[0]);
        for (i, p) in self.points.iter().enumerate().skip(1) {
            let d = rho(x, p);
            if d < best_d {
                best = i;
                best_d = d;
            }
        }
        best
    }
}

/// Minimum of `ρ(x, ·)` over the whole segment `S_t`.
pub fn min_rho_on_segment(x: &Rational, t: u64) -> Rational {
    // the foot of the perpendicular is at abscissa ½(x - 1/t), clamped to S_t
    let (lo, hi) = (-offset(t), int(1));
    let mut a = (x - offset(t)) / int(2);
    if a < lo {
        a = lo;
    } else if a > hi {
        a = hi;
    }
    rho(x, &ConstraintPoint { j: t, x: a })
}
