//! Independent checks of the closed forms: an exact distortion evaluator
//! for arbitrary codebooks on `S_n`, the constrained Lloyd map, and a global
//! dynamic-programming search over interval partitions.
//!
//! Voronoi cells on `S_n` are handled through their projection: the
//! boundary between two consecutive points on the real axis is the midpoint
//! of their `U_n` images, so cells are intervals and no plane geometry is
//! needed.

mod dp;
mod evaluator;
mod lloyd;

pub use dp::{DpOptimum, Partition, dp_optimal, partition_cost};
pub use evaluator::{DEFAULT_MAX_DEPTH, cell_moments, exact_distortion};
pub use lloyd::{LloydRun, lloyd_iterate, lloyd_step};
