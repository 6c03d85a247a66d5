//! Exact constrained quantization of the middle-third Cantor distribution.
//!
//! Codebook points are restricted to the segments
//! `S_j = {(x, x + 1/j) : -1/j <= x <= 1}` in the plane while the measure
//! lives on the real axis. Every closed-form quantity (optimal point sets,
//! distortion errors, the split into unconstrained error plus the offset
//! term) is computed in exact rational arithmetic. The [`oracle`] module
//! checks the closed forms independently with an exact distortion
//! evaluator, a constrained Lloyd map and a global dynamic-programming
//! search. Only [`asymptotics`] produces floating point values.

pub mod asymptotics;
pub mod closed_form;
pub mod error;
pub mod geometry;
pub mod measure;
pub mod oracle;
pub mod rational;

pub use asymptotics::{AsymptoticSample, coefficient_sequence, dimension_sequence, v_infinity};
pub use closed_form::{
    DistortionReport, a_term, build_alpha, canonical_split_set, count_optimal_sets,
    distortion_closed_form, level_of, optimal_error, split_sets, unconstrained_baseline,
};
pub use error::{Error, Result};
pub use geometry::{ConstraintPoint, PlanePoint, PointSet, feasible_window, rho, u_forward, u_inverse};
pub use measure::{BasicInterval, Moments, Word, apply_map, basic_interval, centroid};
pub use oracle::{DpOptimum, Partition, dp_optimal, exact_distortion, lloyd_step};
pub use rational::Rational;
