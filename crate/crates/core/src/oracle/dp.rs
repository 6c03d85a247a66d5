//! Global search over partitions of the `2^k` level-`k` basic intervals
//! into consecutive groups.
//!
//! Each group is served by `U_n^{-1}` of its mean, which is the best point
//! on `S_n` for that group. The search is therefore exact among all
//! codebooks whose projected cell boundaries fall in level-`k` gaps.
//!
//! Costs are compared in `f64` first; candidates within [`TIE_TOLERANCE`] of
//! the running best are re-compared exactly, so exact ties (there are many:
//! every split set is optimal) are broken deterministically towards the
//! smallest cut index.

use std::collections::HashMap;
use std::ops::Range;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{PointSet, u_inverse};
use crate::measure::centroid_numerators;
use crate::rational::{Rational, int, pow};

/// Far above the rounding error of a sum of at most a few dozen O(1) terms.
const TIE_TOLERANCE: f64 = 1e-11;

/// A split of the level-`k` intervals `0..2^k` into consecutive nonempty
/// groups, given by the indices where a new group starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub level: u32,
    pub boundaries: Vec<usize>,
}

impl Partition {
    pub fn new(level: u32, boundaries: Vec<usize>) -> Result<Self> {
        let count = 1usize << level;
        let increasing = boundaries.windows(2).all(|w| w[0] < w[1]);
        let in_range = boundaries.iter().all(|&b| 0 < b && b < count);
        if !increasing || !in_range {
            return Err(Error::InvalidPartition { level, boundaries });
        }
        Ok(Partition { level, boundaries })
    }

    pub fn groups(&self) -> Vec<Range<usize>> {
        let end = 1usize << self.level;
        let mut starts = vec![0];
        starts.extend(&self.boundaries);
        let mut ends = self.boundaries.clone();
        ends.push(end);
        starts.into_iter().zip(ends).map(|(s, e)| s..e).collect()
    }
}

#[derive(Debug, Clone)]
pub struct DpOptimum {
    pub points: PointSet,
    pub value: Rational,
    pub partition: Partition,
}

/// Prefix sums of the level-`k` centroid numerators `s = a(σ)·2·3^k`.
struct Level {
    k: u32,
    n: u64,
    count: usize,
    sum: Vec<i128>,
    sum_sq: Vec<i128>,
    // f64 constants
    unit_mass: f64,
    within: f64,
    denom: f64,
    inv_n: f64,
}

impl Level {
    fn new(n: u64, k: u32) -> Result<Self> {
        let nums = centroid_numerators(k)?;
        let mut sum = vec![0i128];
        let mut sum_sq = vec![0i128];
        for &s in &nums {
            let s = s as i128;
            sum.push(sum.last().unwrap() + s);
            sum_sq.push(sum_sq.last().unwrap() + s * s);
        }
        Ok(Level {
            k,
            n,
            count: nums.len(),
            sum,
            sum_sq,
            unit_mass: 0.5f64.powi(k as i32),
            within: 1.0 / (8.0 * 9f64.powi(k as i32)),
            denom: 2.0 * 3f64.powi(k as i32),
            inv_n: 1.0 / n as f64,
        })
    }

    fn sums(&self, group: &Range<usize>) -> (i128, i128, i128) {
        let cnt = (group.end - group.start) as i128;
        let s1 = self.sum[group.end] - self.sum[group.start];
        let s2 = self.sum_sq[group.end] - self.sum_sq[group.start];
        (cnt, s1, s2)
    }

    /// `2^{-k}[cnt·9^{-k}/8 + (cnt·S2 - S1^2)/(cnt·D^2) + ½cnt(S1/(cnt·D) + 1/n)^2]`
    fn cost_f64(&self, group: Range<usize>) -> f64 {
        let (cnt, s1, s2) = self.sums(&group);
        let spread = (cnt * s2 - s1 * s1) as f64;
        let c = cnt as f64;
        let m = s1 as f64 / (c * self.denom) + self.inv_n;
        self.unit_mass * (c * self.within + spread / (c * self.denom * self.denom) + 0.5 * c * m * m)
    }

    fn mean(&self, group: &Range<usize>) -> Rational {
        let (cnt, s1, _) = self.sums(group);
        Rational::new(BigInt::from(s1), BigInt::from(cnt) * BigInt::from(2) * pow(3, self.k as i64).to_integer())
    }

    fn cost_exact(&self, group: Range<usize>) -> Rational {
        let (cnt, s1, s2) = self.sums(&group);
        let cnt_r = Rational::from_integer(cnt.into());
        let d = Rational::from_integer(BigInt::from(2)) * pow(3, self.k as i64);
        let spread = Rational::from_integer(BigInt::from(cnt * s2 - s1 * s1)) / (&cnt_r * &d * &d);
        let m = self.mean(&group) + Rational::new(1.into(), self.n.into());
        pow(2, -(self.k as i64))
            * (&cnt_r * pow(9, -(self.k as i64)) / int(8) + spread + &cnt_r * &m * &m / int(2))
    }
}

/// Suffix tables: `best[g][i]` is the cheapest split of intervals `i..` into
/// `g` groups, `choice[g][i]` the exclusive end of its first group.
struct Tables<'a> {
    level: &'a Level,
    best: Vec<Vec<f64>>,
    choice: Vec<Vec<usize>>,
    exact: HashMap<(usize, usize), Rational>,
}

impl Tables<'_> {
    fn exact_best(&mut self, g: usize, i: usize) -> Rational {
        if let Some(v) = self.exact.get(&(g, i)) {
            return v.clone();
        }
        let end = self.choice[g][i];
        let mut v = self.level.cost_exact(i..end);
        if g > 1 {
            v += self.exact_best(g - 1, end);
        }
        self.exact.insert((g, i), v.clone());
        v
    }

    fn candidate_exact(&mut self, g: usize, i: usize, end: usize) -> Rational {
        let head = self.level.cost_exact(i..end);
        if g > 1 { head + self.exact_best(g - 1, end) } else { head }
    }
}

/// Exact minimum distortion over codebooks of `n` points on `S_n` whose
/// projected cell boundaries fall in level-`level` gaps.
pub fn dp_optimal(n: u64, level: u32) -> Result<DpOptimum> {
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if n == 0 || (level < 64 && n > 1u64 << level) {
        return Err(Error::TooManyGroups { n, level });
    }
    let lv = Level::new(n, level)?;
    let count = lv.count;
    let groups = n as usize;
    let mut t = Tables {
        level: &lv,
        best: vec![vec![f64::INFINITY; count + 1]; groups + 1],
        choice: vec![vec![usize::MAX; count + 1]; groups + 1],
        exact: HashMap::new(),
    };
    for i in 0..count {
        t.best[1][i] = lv.cost_f64(i..count);
        t.choice[1][i] = count;
    }
    for g in 2..=groups {
        // i must leave at least g intervals
        for i in 0..=count - g {
            let mut best = f64::INFINITY;
            let mut best_end = usize::MAX;
            let mut best_exact: Option<Rational> = None;
            for end in i + 1..=count - (g - 1) {
                let v = lv.cost_f64(i..end) + t.best[g - 1][end];
                if v < best - TIE_TOLERANCE {
                    best = v;
                    best_end = end;
                    best_exact = None;
                } else if v <= best + TIE_TOLERANCE {
                    let incumbent = match best_exact.take() {
                        Some(e) => e,
                        None => t.candidate_exact(g, i, best_end),
                    };
                    let challenger = t.candidate_exact(g, i, end);
                    if challenger < incumbent {
                        best = v;
                        best_end = end;
                        best_exact = Some(challenger);
                    } else {
                        best_exact = Some(incumbent);
                    }
                }
            }
            t.best[g][i] = best;
            t.choice[g][i] = best_end;
        }
    }

    let mut boundaries = Vec::with_capacity(groups - 1);
    let mut start = 0;
    for g in (1..=groups).rev() {
        let end = t.choice[g][start];
        if g > 1 {
            boundaries.push(end);
        }
        start = end;
    }
    let partition = Partition { level, boundaries };
    let value = partition_cost(n, &partition)?;
    let points = partition
        .groups()
        .iter()
        .map(|g| u_inverse(n, &lv.mean(g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DpOptimum { points: PointSet::new(n, points, Vec::new())?, value, partition })
}

/// Exact distortion of a partition with every group served by `U_n^{-1}` of
/// its mean.
pub fn partition_cost(n: u64, partition: &Partition) -> Result<Rational> {
    let lv = Level::new(n, partition.level)?;
    Ok(partition.groups().into_iter().map(|g| lv.cost_exact(g)).sum())
}
