mod common;

use cantor_quant::asymptotics::{AsymptoticSample, excess};
use cantor_quant::closed_form::{optimal_error, power_of_two_error};
use cantor_quant::{coefficient_sequence, dimension_sequence, v_infinity};
use common::q;
use num_traits::Signed;

#[test]
fn excess_is_positive_up_to_two_to_the_twentieth() {
    let floor = v_infinity();
    for n in 1..=1u64 << 20 {
        assert!(optimal_error(n) > floor, "n = {n}");
    }
    assert!(excess(1 << 20).is_positive());
}

#[test]
fn errors_sandwiched_between_powers_of_two() {
    for n in 2..=256u64 {
        let level = cantor_quant::level_of(n);
        let v = optimal_error(n);
        assert!(power_of_two_error(level + 1) <= v && v <= power_of_two_error(level), "n = {n}");
    }
}

#[test]
fn dimension_estimates_approach_two_at_the_expected_rate() {
    for s in dimension_sequence(62).iter().filter(|s| s.level >= 10) {
        let d = s.dim_estimate.unwrap();
        assert!(d < 2.0);
        assert!(2.0 - d <= 1.2 * 2.0 / (s.level as f64 + 1.0), "level {}: {d}", s.level);
    }
}

#[test]
fn coefficient_grows_without_bound() {
    let seq = coefficient_sequence(62);
    for w in seq.windows(2).filter(|w| w[0].level >= 3) {
        assert!(w[1].coeff_exact > w[0].coeff_exact);
    }
    // n^2 (V_n - V_∞) = (8 + 8·2^ℓ + (4/9)^ℓ)/16 at n = 2^ℓ
    for s in &seq {
        let l = s.level as i64;
        let expected = (q(8, 1) + q(8, 1) * q(1 << l.min(62), 1) + four_ninths_pow(l)) / q(16, 1);
        assert_eq!(s.coeff_exact, expected);
    }
    assert!(seq.last().unwrap().coeff_estimate > 1e18);
}

fn four_ninths_pow(l: i64) -> cantor_quant::Rational {
    cantor_quant::rational::pow(4, l) / cantor_quant::rational::pow(9, l)
}

#[test]
fn general_samples_cover_non_powers() {
    let s = AsymptoticSample::at(3);
    assert_eq!(s.v_n, q(536, 1296));
    assert_eq!(s.excess, q(536, 1296) - q(3, 16));
    assert!(s.dim_estimate.unwrap() > 0.0);
}
