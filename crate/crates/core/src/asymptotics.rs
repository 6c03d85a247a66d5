//! Limits of `V_n`: the limiting error `V_∞`, the dimension estimates
//! `2 ln n / -ln(V_n - V_∞)` and the scaled excess `n^2 (V_n - V_∞)`.
//!
//! Excesses are exact rationals; they shrink like `2^{-ℓ}`, so floats are
//! produced only at the final logarithm or scaling.

use num_traits::Signed;

use crate::closed_form::{optimal_error, power_of_two_error};
use crate::rational::{self, Rational, frac, int};

/// `V_∞ = lim V_n = 3/16`.
pub fn v_infinity() -> Rational {
    frac(3, 16)
}

/// `V_n - V_∞`, exact.
pub fn excess(n: u64) -> Rational {
    optimal_error(n) - v_infinity()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticSample {
    pub level: u32,
    pub n: u64,
    pub v_n: Rational,
    pub excess: Rational,
    /// `2 ln n / -ln(excess)`; `None` unless `0 < excess < 1`.
    pub dim_estimate: Option<f64>,
    pub coeff_exact: Rational,
    pub coeff_estimate: f64,
}

impl AsymptoticSample {
    fn from_parts(level: u32, n: u64, v_n: Rational) -> Self {
        let excess = &v_n - v_infinity();
        let dim_estimate = (excess.is_positive() && excess < int(1))
            .then(|| 2.0 * (n as f64).ln() / -rational::ln(&excess));
        let n_r = Rational::from_integer(n.into());
        let coeff_exact = &n_r * &n_r * &excess;
        let coeff_estimate = rational::to_f64(&coeff_exact);
        AsymptoticSample { level, n, v_n, excess, dim_estimate, coeff_exact, coeff_estimate }
    }

    /// Sample at an arbitrary `n`, from the general closed form.
    pub fn at(n: u64) -> Self {
        AsymptoticSample::from_parts(crate::closed_form::level_of(n), n, optimal_error(n))
    }

    /// Sample at `n = 2^ℓ`, from the power-of-two closed form.
    pub fn at_level(level: u32) -> Self {
        AsymptoticSample::from_parts(level, 1u64 << level, power_of_two_error(level))
    }
}

fn power_of_two_samples(max_level: u32) -> Vec<AsymptoticSample> {
    assert!(max_level < 64, "n = 2^level must fit in u64");
    (1..=max_level).map(AsymptoticSample::at_level).collect()
}

/// Samples at `n = 2, 4, …, 2^max_level`; the dimension estimates climb to 2.
pub fn dimension_sequence(max_level: u32) -> Vec<AsymptoticSample> {
    power_of_two_samples(max_level)
}

/// Samples at `n = 2, 4, …, 2^max_level`; `n^2 (V_n - V_∞)` grows like
/// `2^{ℓ-1}` and is unbounded.
pub fn coefficient_sequence(max_level: u32) -> Vec<AsymptoticSample> {
    power_of_two_samples(max_level)
}
