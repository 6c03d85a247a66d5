//! Shared inputs for the criterion benchmarks in `benches/`.

use cantor_quant::{PointSet, Rational, build_alpha, canonical_split_set};

/// Codebook sizes that exercise both powers of two and split levels.
pub const SIZES: [u64; 5] = [2, 5, 16, 33, 100];

pub fn canonical_alpha(n: u64) -> PointSet {
    build_alpha(n, &canonical_split_set(n)).expect("canonical split set is admissible")
}

/// A perturbed start for Lloyd runs: `α_n` shifted right by `1/(7n)` where
/// that stays on `S_n`.
pub fn shifted_alpha(n: u64) -> PointSet {
    let shift = Rational::new(1.into(), (7 * n).into());
    let xs = canonical_alpha(n).abscissas().into_iter().map(|x| x + &shift);
    PointSet::from_abscissas(n, xs).expect("shift stays on S_n")
}
