//! Closed-form optimal sets `α_n(I)` and their errors.
//!
//! For `2^ℓ <= n < 2^{ℓ+1}` an optimal set is obtained from the `2^ℓ`
//! level-`ℓ` centroids by splitting the words of a split set `I`
//! (`|I| = n - 2^ℓ`) into their two children and mapping every centroid to
//! `S_n` with `U_n^{-1}`. Every choice of `I` is optimal.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::geometry::{PointSet, u_inverse};
use crate::measure::{Word, centroid};
use crate::rational::{Rational, frac, int, pow};

/// `ℓ(n) = ⌊log2 n⌋`.
pub fn level_of(n: u64) -> u32 {
    assert!(n >= 1, "level_of requires n >= 1");
    63 - n.leading_zeros()
}

fn split_count(n: u64) -> u64 {
    n - (1 << level_of(n))
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSplitSet { n, reason: "n must be positive".into() });
    }
    Ok(())
}

pub fn validate_split_set(n: u64, split: &[Word]) -> Result<()> {
    check_n(n)?;
    let level = level_of(n) as usize;
    let need = split_count(n) as usize;
    let bad = |reason: String| Err(Error::InvalidSplitSet { n, reason });
    if split.len() != need {
        return bad(format!("expected {need} words, got {}", split.len()));
    }
    if let Some(w) = split.iter().find(|w| w.len() != level) {
        return bad(format!("word {w:?} does not have length {level}"));
    }
    if !split.iter().all_unique() {
        return bad("repeated word".into());
    }
    Ok(())
}

/// The lexicographically smallest `n - 2^ℓ` words of length `ℓ`.
pub fn canonical_split_set(n: u64) -> Vec<Word> {
    Word::all(level_of(n)).take(split_count(n) as usize).collect()
}

/// Every admissible split set for `n`, in lexicographic order of the
/// chosen words. There are [`count_optimal_sets`]`(n)` of them.
pub fn split_sets(n: u64) -> impl Iterator<Item = Vec<Word>> {
    Word::all(level_of(n)).combinations(split_count(n) as usize)
}

/// `C(2^ℓ, n - 2^ℓ)`.
pub fn count_optimal_sets(n: u64) -> BigUint {
    let level = level_of(n);
    num_integer::binomial(BigUint::from(1u64) << level, BigUint::from(split_count(n)))
}

/// Words whose basic intervals are the cells of `α_n(I)`, left to right,
/// paired with the probability of each cell.
pub fn cell_words(n: u64, split: &[Word]) -> Result<Vec<Word>> {
    validate_split_set(n, split)?;
    let mut words = Vec::with_capacity(n as usize);
    for w in Word::all(level_of(n)) {
        if split.contains(&w) {
            words.push(w.child(1));
            words.push(w.child(2));
        } else {
            words.push(w);
        }
    }
    Ok(words)
}

/// `α_n(I)`. For `n = 1` (`I = ∅`) this is `{(-1/4, 3/4)}`.
pub fn build_alpha(n: u64, split: &[Word]) -> Result<PointSet> {
    let points = cell_words(n, split)?
        .iter()
        .map(|w| u_inverse(n, &centroid(w)))
        .collect::<Result<Vec<_>>>()?;
    let mut split = split.to_vec();
    split.sort();
    PointSet::new(n, points, split)
}

/// The offset term `A = Σ_c P(c) ρ(a_c, U_n^{-1}(a_c))` over the cells `c`
/// of `α_n(I)`: what the codebook loses by sitting on `S_n` instead of on
/// the real axis.
///
/// Each summand is `½(a_c + 1/n)^2 P(c)`. Writing every centroid at level
/// `K = ℓ + 1` as `s_c / (2·3^K)` (unsplit cells have `s = 3·s_ℓ` and twice
/// the mass), the sum is accumulated as one integer numerator over
/// `2^{K+1} (2·3^K)^2 n^2`.
pub fn a_term(n: u64, split: &[Word]) -> Result<Rational> {
    let cells = cell_words(n, split)?;
    let top = level_of(n) + 1;
    let denom = BigInt::from(2) * BigInt::from(3).pow(top);
    let n_big = BigInt::from(n);
    let mut num = BigInt::from(0);
    for w in &cells {
        let weight = if w.len() as u32 == top { 1 } else { 2 };
        let scaled = scaled_numerator(w, top);
        let s = scaled * &n_big + &denom;
        num += s.pow(2) * weight;
    }
    let den = (BigInt::from(1) << (top + 1)) * denom.pow(2) * &n_big * &n_big;
    Ok(Rational::new(num, den))
}

/// `a(σ)·2·3^top` for `|σ| <= top`.
fn scaled_numerator(w: &Word, top: u32) -> BigInt {
    let k = w.len() as u32;
    let digits = w
        .letters()
        .iter()
        .fold(BigInt::from(0), |acc, &l| acc * 3 + BigInt::from(l - 1));
    (BigInt::from(1) + digits * 4) * BigInt::from(3).pow(top - k)
}

/// `18^{-ℓ} V (2^{ℓ+1} - n + (n - 2^ℓ)/9) = (17·2^ℓ - 8n) / (72·18^ℓ)`: the
/// unconstrained `n`-means error.
pub fn unconstrained_error(n: u64) -> Rational {
    let level = level_of(n);
    let num = BigInt::from(17) * (BigInt::from(1) << level) - BigInt::from(8) * BigInt::from(n);
    Rational::new(num, BigInt::from(72) * BigInt::from(18).pow(level))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistortionReport {
    pub n: u64,
    pub total: Rational,
    pub variance_term: Rational,
    pub a_term: Rational,
    pub split_set: Vec<Word>,
}

pub fn distortion_closed_form(n: u64, split: &[Word]) -> Result<DistortionReport> {
    let a = a_term(n, split)?;
    let variance_term = unconstrained_error(n);
    let mut split_set = split.to_vec();
    split_set.sort();
    Ok(DistortionReport { n, total: &variance_term + &a, variance_term, a_term: a, split_set })
}

/// The unconstrained optimal `n`-means `U_n(α_n(I))` and their error.
pub fn unconstrained_baseline(n: u64, split: &[Word]) -> Result<(Vec<Rational>, Rational)> {
    let means = cell_words(n, split)?.iter().map(centroid).collect();
    Ok((means, unconstrained_error(n)))
}

/// `A` at `n = 2^ℓ`: `(2^ℓ + 1)/(2·4^ℓ) + (3·9^ℓ - 1)/(16·9^ℓ)`.
pub fn a_term_power_of_two(level: u32) -> Rational {
    let l = level as i64;
    (pow(2, l) + int(1)) / (int(2) * pow(4, l))
        + (int(3) * pow(9, l) - int(1)) / (int(16) * pow(9, l))
}

/// `V_{2^ℓ} = (2^{3-2ℓ} + 2^{3-ℓ} + 9^{-ℓ} + 3)/16`.
pub fn power_of_two_error(level: u32) -> Rational {
    let l = level as i64;
    (pow(2, 3 - 2 * l) + pow(2, 3 - l) + pow(9, -l) + int(3)) / int(16)
}

/// `V_n` for any `n >= 1` in O(1) big-rational operations.
///
/// Writing `w_c`, `m_c` for the mass and mean of each optimal cell,
/// `A = Σ w_c ½(m_c + 1/n)^2`. Since `Σ w_c m_c = E X = 1/2` and
/// `Σ w_c m_c^2 = E X^2 - W_n = 3/8 - W_n`, this collapses to
/// `V_n = W_n + A = 3/16 + W_n/2 + 1/(2n) + 1/(2n^2)`.
pub fn optimal_error(n: u64) -> Rational {
    // single fraction over 144·18^ℓ·n^2
    let level = level_of(n);
    let n_big = BigInt::from(n);
    let eighteen = BigInt::from(18).pow(level);
    let spread = BigInt::from(17) * (BigInt::from(1) << level) - BigInt::from(8) * &n_big;
    let num = spread * &n_big * &n_big + BigInt::from(72) * &eighteen * (&n_big + 1);
    frac(3, 16) + Rational::new(num, BigInt::from(144) * eighteen * &n_big * &n_big)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rho;
    use crate::measure::variance;

    fn words(s: &[&str]) -> Vec<Word> {
        s.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn level_examples() {
        assert_eq!(level_of(1), 0);
        assert_eq!(level_of(5), 2);
        assert_eq!(level_of(8), 3);
        assert_eq!(level_of(u64::MAX), 63);
    }

    #[test]
    fn build_alpha_examples() {
        assert_eq!(build_alpha(2, &[]).unwrap().abscissas(), vec![frac(-1, 6), frac(1, 6)]);
        assert_eq!(
            build_alpha(4, &[]).unwrap().abscissas(),
            vec![frac(-7, 72), frac(1, 72), frac(17, 72), frac(25, 72)]
        );
        assert_eq!(
            build_alpha(3, &words(&["2"])).unwrap().abscissas(),
            vec![frac(-1, 12), frac(7, 36), frac(11, 36)]
        );
        let one = build_alpha(1, &[]).unwrap();
        assert_eq!(one.points()[0].x(), &frac(-1, 4));
        assert_eq!(one.points()[0].y(), frac(3, 4));
    }

    #[test]
    fn build_alpha_rejects_bad_split_sets() {
        assert!(matches!(build_alpha(3, &[]), Err(Error::InvalidSplitSet { n: 3, .. })));
        assert!(build_alpha(3, &words(&["12"])).is_err());
        assert!(build_alpha(6, &words(&["12", "12"])).is_err());
        assert!(build_alpha(4, &words(&["1"])).is_err());
        assert!(build_alpha(0, &[]).is_err());
    }

    #[test]
    fn a_term_examples() {
        assert_eq!(a_term(2, &[]).unwrap(), frac(5, 9));
        let a1 = a_term(3, &words(&["1"])).unwrap();
        let a2 = a_term(3, &words(&["2"])).unwrap();
        assert_eq!(a1, a2);
        assert_eq!(a1, frac(526, 1296));
    }

    #[test]
    fn a_term_matches_rho_summation() {
        for n in 1..40u64 {
            for split in split_sets(n).take(5) {
                let by_rho: Rational = cell_words(n, &split)
                    .unwrap()
                    .iter()
                    .map(|w| {
                        let a = centroid(w);
                        w.probability() * rho(&a, &u_inverse(n, &a).unwrap())
                    })
                    .sum();
                assert_eq!(by_rho, a_term(n, &split).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn power_of_two_form_matches_direct_sum() {
        for level in 1..=10 {
            assert_eq!(a_term(1 << level, &[]).unwrap(), a_term_power_of_two(level));
        }
    }

    #[test]
    fn distortion_examples() {
        assert_eq!(distortion_closed_form(1, &[]).unwrap().total, frac(5, 4));
        assert_eq!(distortion_closed_form(2, &[]).unwrap().total, frac(41, 72));
        assert_eq!(distortion_closed_form(3, &words(&["1"])).unwrap().total, frac(536, 1296));
        for level in 1..=8 {
            assert_eq!(distortion_closed_form(1 << level, &[]).unwrap().total, power_of_two_error(level));
        }
    }

    #[test]
    fn report_decomposes() {
        let r = distortion_closed_form(11, &canonical_split_set(11)).unwrap();
        assert_eq!(r.total, &r.variance_term + &r.a_term);
        assert_eq!(r.split_set, words(&["111", "112", "121"]));
    }

    #[test]
    fn baseline_examples() {
        assert_eq!(unconstrained_baseline(2, &[]).unwrap(), (vec![frac(1, 6), frac(5, 6)], frac(1, 72)));
        assert_eq!(unconstrained_baseline(1, &[]).unwrap(), (vec![frac(1, 2)], frac(1, 8)));
        assert_eq!(
            unconstrained_baseline(4, &[]).unwrap(),
            (vec![frac(1, 18), frac(5, 18), frac(13, 18), frac(17, 18)], frac(1, 648))
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_optimal_sets(1), BigUint::from(1u32));
        assert_eq!(count_optimal_sets(2), BigUint::from(1u32));
        assert_eq!(count_optimal_sets(3), BigUint::from(2u32));
        assert_eq!(count_optimal_sets(6), BigUint::from(6u32));
        for n in 1..40 {
            assert_eq!(BigUint::from(split_sets(n).count()), count_optimal_sets(n));
        }
    }

    #[test]
    fn canonical_is_lexicographically_first() {
        assert_eq!(canonical_split_set(6), words(&["11", "12"]));
        assert_eq!(canonical_split_set(8), Vec::<Word>::new());
        assert_eq!(split_sets(6).next().unwrap(), canonical_split_set(6));
    }

    #[test]
    fn unconstrained_error_matches_grouped_form() {
        for n in 1..=200u64 {
            let level = level_of(n) as i64;
            let n_r = Rational::from_integer(n.into());
            let base = pow(2, level);
            let grouped = pow(18, -level) * variance() * (int(2) * &base - &n_r + (&n_r - &base) / int(9));
            assert_eq!(unconstrained_error(n), grouped);
        }
    }

    #[test]
    fn fast_error_matches_direct_sum() {
        for n in 1..=256 {
            assert_eq!(optimal_error(n), distortion_closed_form(n, &canonical_split_set(n)).unwrap().total, "n = {n}");
        }
    }
}
