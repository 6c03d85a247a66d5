//! Exact rational numbers and small helpers on top of `num-rational`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` as an exact rational; negative exponents give reciprocals.
pub fn pow(base: i64, exp: i64) -> Rational {
    let b = int(base);
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b.recip(), (-exp) as usize)
    }
}

/// Lossless wire form: always `p/q`, including integers (`3/1`).
pub fn to_wire(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn from_wire(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.trim().parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

fn ln_biguint(v: &BigUint) -> f64 {
    // keep the top 64 bits and add back the dropped binary exponent
    let bits = v.bits();
    if bits <= 64 {
        return v.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational, accurate even when the value
/// underflows `f64`.
pub fn ln(r: &Rational) -> f64 {
    if !r.is_positive() {
        return f64::NAN;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    ln_biguint(num) - ln_biguint(den)
}

pub fn to_f64(r: &Rational) -> f64 {
    match r.to_f64() {
        Some(v) if v.is_finite() && (v != 0.0 || r.is_zero()) => v,
        _ => {
            let mag = ln(&r.abs()).exp();
            if r.is_negative() { -mag } else { mag }
        }
    }
}
