//! Test-only oracles, kept independent of the library's evaluation paths.
#![allow(dead_code)]

use cantor_quant::{PointSet, Rational};
use num_bigint::BigInt;
use rand::Rng;

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow3(k: usize) -> i64 {
    3i64.pow(k as u32)
}

/// Left endpoint and centroid of the level-k interval with lexicographic
/// index `idx`, straight from the ternary digits: `J_σ = [Σ 2(σ_i - 1)/3^i,
/// … + 3^{-k}]`, centroid at the midpoint.
pub fn interval(k: usize, idx: u64) -> (Rational, Rational, Rational) {
    let mut left = 0i64;
    for i in 0..k {
        let bit = (idx >> (k - 1 - i)) & 1;
        left = 3 * left + 2 * bit as i64;
    }
    let den = pow3(k);
    let l = q(left, den);
    let r = q(left + 1, den);
    let mid = (&l + &r) / q(2, 1);
    (l, r, mid)
}

/// Squared plane distance from `(t, 0)` to `(x, x + 1/j)`.
pub fn dist2(t: &Rational, x: &Rational, j: u64) -> Rational {
    let y = x + q(1, j as i64);
    let dx = t - x;
    &dx * &dx + &y * &y
}

/// Index of the nearest codebook point by direct distance comparison, or
/// `None` on an exact tie.
pub fn nearest_strict(t: &Rational, set: &PointSet) -> Option<usize> {
    let d: Vec<Rational> = set.points().iter().map(|p| dist2(t, p.x(), p.j())).collect();
    let min = d.iter().min().unwrap();
    let hits: Vec<usize> = (0..d.len()).filter(|&i| d[i] == *min).collect();
    (hits.len() == 1).then(|| hits[0])
}

/// Distortion by brute-force refinement of basic intervals. An interval is
/// credited whole once both endpoints have the same nearest point; that
/// suffices because the difference of two squared distances is affine in
/// `t`. Returns `None` if some boundary is still unresolved at `max_level`.
pub fn brute_distortion(set: &PointSet, max_level: usize) -> Option<Rational> {
    fn walk(set: &PointSet, k: usize, idx: u64, max_level: usize, acc: &mut Rational) -> bool {
        let (l, r, mid) = interval(k, idx);
        let nl = nearest_strict(&l, set);
        let nr = nearest_strict(&r, set);
        if let (Some(a), Some(b)) = (nl, nr) {
            if a == b {
                let p = &set.points()[a];
                let mass = q(1, 1) / Rational::from_integer(BigInt::from(2).pow(k as u32));
                let within = q(1, 8) / Rational::from_integer(BigInt::from(9).pow(k as u32));
                *acc += mass * (within + dist2(&mid, p.x(), p.j()));
                return true;
            }
        }
        if k == max_level {
            return false;
        }
        walk(set, k + 1, 2 * idx, max_level, acc) && walk(set, k + 1, 2 * idx + 1, max_level, acc)
    }
    let mut acc = q(0, 1);
    walk(set, 0, 0, max_level, &mut acc).then_some(acc)
}

/// Probability of each point's cell, counted over level-k intervals;
/// `None` if some interval straddles a boundary.
pub fn cell_masses_by_counting(
    k: usize,
    nearest: impl Fn(&Rational) -> Option<usize>,
    cells: usize,
) -> Option<Vec<Rational>> {
    let mut counts = vec![0i64; cells];
    for idx in 0..1u64 << k {
        let (l, r, _) = interval(k, idx);
        let a = nearest(&l)?;
        if nearest(&r)? != a {
            return None;
        }
        counts[a] += 1;
    }
    Some(counts.into_iter().map(|c| q(c, 1i64 << k)).collect())
}

/// `count` distinct abscissas on the lattice `lo + (hi - lo)·r/den`.
pub fn random_abscissas<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational, count: usize, den: i64) -> Vec<Rational> {
    let mut picks: Vec<i64> = Vec::new();
    while picks.len() < count {
        let r = rng.gen_range(0..=den);
        if !picks.contains(&r) {
            picks.push(r);
        }
    }
    picks.into_iter().map(|r| lo + (hi - lo) * q(r, den)).collect()
}
