//! The Cantor IFS `T_1(x) = x/3`, `T_2(x) = x/3 + 2/3` and its self-similar
//! probability measure `P`.
//!
//! Word convention: a [`Word`] `σ = σ_1 σ_2 … σ_k` is stored first letter
//! first, and `T_σ = T_{σ_1} ∘ T_{σ_2} ∘ … ∘ T_{σ_k}`, so the *last* letter
//! is applied to the argument first. The first letter therefore picks the
//! coarsest third: `J_1 = [0, 1/3]`, `J_12 = [2/9, 1/3]`, `J_21 = [2/3, 7/9]`.
//! Words of one length enumerated in lexicographic order are ordered left to
//! right on the line.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::PlanePoint;
use crate::rational::{Rational, frac, int, pow};

/// Largest level that is enumerated explicitly; closed forms take over above.
pub const DEFAULT_LEVEL_LIMIT: u32 = 20;

/// Mean of `P`.
pub fn mean() -> Rational {
    frac(1, 2)
}

/// Variance of `P`.
pub fn variance() -> Rational {
    frac(1, 8)
}

/// A finite word over `{1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: &[u8]) -> Result<Self> {
        match letters.iter().find(|&&l| l != 1 && l != 2) {
            Some(&bad) => Err(Error::InvalidLetter(char::from(b'0'.wrapping_add(bad)))),
            None => Ok(Word(letters.to_vec())),
        }
    }

    /// The `index`-th word of length `len` in lexicographic order.
    pub fn from_index(len: u32, index: u64) -> Self {
        Word(
            (0..len)
                .map(|i| 1 + ((index >> (len - 1 - i)) & 1) as u8)
                .collect(),
        )
    }

    /// Position of this word among words of its length in lexicographic order.
    pub fn index(&self) -> u64 {
        self.0.iter().fold(0, |acc, &l| (acc << 1) | u64::from(l - 1))
    }

    /// All words of length `len`, lexicographically (= left to right).
    pub fn all(len: u32) -> impl Iterator<Item = Word> {
        (0..1u64 << len).map(move |i| Word::from_index(len, i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// `σ` followed by `letter`.
    pub fn child(&self, letter: u8) -> Word {
        debug_assert!(letter == 1 || letter == 2);
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    /// `P(J_σ) = 2^{-|σ|}`.
    pub fn probability(&self) -> Rational {
        pow(2, -(self.len() as i64))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// `T_σ(x)`; the empty word is the identity.
pub fn apply_map(word: &Word, x: &Rational) -> Rational {
    let third = frac(1, 3);
    let two_thirds = frac(2, 3);
    word.letters().iter().rev().fold(x.clone(), |acc, &l| {
        let y = acc * &third;
        if l == 2 { y + &two_thirds } else { y }
    })
}

/// A level-`k` interval `J_σ = T_σ([0, 1])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicInterval {
    pub word: Word,
    pub left: Rational,
    pub right: Rational,
}

impl BasicInterval {
    pub fn length(&self) -> Rational {
        &self.right - &self.left
    }

    pub fn children(&self) -> [BasicInterval; 2] {
        [basic_interval(&self.word.child(1)), basic_interval(&self.word.child(2))]
    }
}

pub fn basic_interval(word: &Word) -> BasicInterval {
    BasicInterval {
        word: word.clone(),
        left: apply_map(word, &int(0)),
        right: apply_map(word, &int(1)),
    }
}

/// `a(σ) = E(X | X ∈ J_σ) = T_σ(1/2)`.
pub fn centroid(word: &Word) -> Rational {
    apply_map(word, &mean())
}

/// Numerators of `a(σ)·2·3^k` over all words of length `k`, ascending.
///
/// `T_σ(1/2) = Σ_i 2(σ_i - 1)/3^i + 1/(2·3^k)`, so the numerator is
/// `1 + 4 Σ_i (σ_i - 1) 3^{k-i}`.
pub fn centroid_numerators(k: u32) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::ZeroLevel);
    }
    if k > DEFAULT_LEVEL_LIMIT {
        return Err(Error::LevelTooLarge { level: k, limit: DEFAULT_LEVEL_LIMIT });
    }
    let powers: Vec<u64> = (0..k).rev().map(|e| 3u64.pow(e)).collect();
    Ok((0..1u64 << k)
        .map(|idx| {
            let digits: u64 = powers
                .iter()
                .enumerate()
                .filter(|&(i, _)| (idx >> (k as usize - 1 - i)) & 1 == 1)
                .map(|(_, p)| p)
                .sum();
            1 + 4 * digits
        })
        .collect())
}

/// `Σ_{x ∈ 𝔠_k} x^m` by direct enumeration of the centroid numerators.
pub fn moment_sum_enumerated(k: u32, m: u32) -> Result<BigUint> {
    if !(1..=2).contains(&m) {
        return Err(Error::MomentOrder(m));
    }
    let nums = centroid_numerators(k)?;
    let total: u128 = nums.iter().map(|&x| (x as u128).pow(m)).sum();
    Ok(BigUint::from(total))
}

/// `6^k` for `m = 1`, `2^{k-1}(3·9^k - 1)` for `m = 2`.
pub fn moment_sum_closed_form(k: u32, m: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroLevel);
    }
    match m {
        1 => Ok(BigUint::from(6u32).pow(k)),
        2 => {
            let nine_k = BigUint::from(9u32).pow(k);
            Ok(BigUint::from(2u32).pow(k - 1) * (nine_k * 3u32 - 1u32))
        }
        other => Err(Error::MomentOrder(other)),
    }
}

/// Moment sum over `𝔠_k`: enumerated up to [`DEFAULT_LEVEL_LIMIT`], closed
/// form beyond it.
pub fn moment_sum(k: u32, m: u32) -> Result<BigUint> {
    if k <= DEFAULT_LEVEL_LIMIT {
        moment_sum_enumerated(k, m)
    } else {
        moment_sum_closed_form(k, m)
    }
}

/// Conditional distortion `∫_{J_σ} ρ(x, p) dP / P(J_σ) = 9^{-|σ|}/8 + ρ(a(σ), p)`.
pub fn self_similar_distortion(word: &Word, p: &PlanePoint) -> Rational {
    let scale = pow(9, -(word.len() as i64));
    scale * variance() + p.rho(&centroid(word))
}

/// Zeroth, first and second moments of `P` restricted to some set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moments {
    pub mass: Rational,
    pub first: Rational,
    pub second: Rational,
}

impl Moments {
    pub fn zero() -> Self {
        Moments { mass: int(0), first: int(0), second: int(0) }
    }

    /// Moments of the whole measure: `(1, 1/2, 3/8)`.
    pub fn total() -> Self {
        Moments { mass: int(1), first: mean(), second: variance() + mean() * mean() }
    }

    /// Moments of `P` restricted to `J_σ`.
    pub fn of_word(word: &Word) -> Self {
        let mass = word.probability();
        let a = centroid(word);
        let within = pow(9, -(word.len() as i64)) * variance();
        Moments {
            first: &mass * &a,
            second: &mass * (within + &a * &a),
            mass,
        }
    }

    /// `None` on zero mass.
    pub fn mean(&self) -> Option<Rational> {
        if self.mass.is_zero() { None } else { Some(&self.first / &self.mass) }
    }

    /// `∫ (x - c)^2 dP` over the set.
    pub fn squared_deviation(&self, c: &Rational) -> Rational {
        &self.second - int(2) * c * &self.first + c * c * &self.mass
    }

    fn as_array(&self) -> [Rational; 3] {
        [self.mass.clone(), self.first.clone(), self.second.clone()]
    }

    fn from_array([mass, first, second]: [Rational; 3]) -> Self {
        Moments { mass, first, second }
    }
}

impl Add for Moments {
    type Output = Moments;
    fn add(self, o: Moments) -> Moments {
        Moments { mass: self.mass + o.mass, first: self.first + o.first, second: self.second + o.second }
    }
}

impl Sub for &Moments {
    type Output = Moments;
    fn sub(self, o: &Moments) -> Moments {
        Moments {
            mass: &self.mass - &o.mass,
            first: &self.first - &o.first,
            second: &self.second - &o.second,
        }
    }
}

/// `v ↦ M v + c` on moment triples; `M` is lower triangular.
#[derive(Debug, Clone)]
struct Affine {
    m: [[Rational; 3]; 3],
    c: [Rational; 3],
}

impl Affine {
    fn identity() -> Self {
        let z = || int(0);
        Affine {
            m: [[int(1), z(), z()], [z(), int(1), z()], [z(), z(), int(1)]],
            c: [z(), z(), z()],
        }
    }

    /// Moments on `[0, y]` from moments on `[0, 3y]`, for `y <= 1/3`.
    fn left_branch() -> Self {
        let z = || int(0);
        Affine {
            m: [[frac(1, 2), z(), z()], [z(), frac(1, 6), z()], [z(), z(), frac(1, 18)]],
            c: [z(), z(), z()],
        }
    }

    /// Moments on `[0, y]` from moments on `[0, 3y - 2]`, for `y >= 2/3`.
    fn right_branch() -> Self {
        let z = || int(0);
        Affine {
            m: [
                [frac(1, 2), z(), z()],
                [frac(1, 3), frac(1, 6), z()],
                [frac(2, 9), frac(2, 9), frac(1, 18)],
            ],
            c: left_half(),
        }
    }

    fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(self.c[i].clone(), |acc, k| acc + &self.m[i][k] * &v[k])
        })
    }

    /// `self ∘ inner`.
    fn compose(&self, inner: &Affine) -> Affine {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(int(0), |acc, k| acc + &self.m[i][k] * &inner.m[k][j])
            })
        });
        Affine { m, c: self.apply(&inner.c) }
    }

    /// The unique `v` with `v = M v + c`, by forward substitution.
    fn fixed_point(&self) -> [Rational; 3] {
        let mut v: [Rational; 3] = std::array::from_fn(|_| int(0));
        for i in 0..3 {
            let rhs = (0..i).fold(self.c[i].clone(), |acc, k| acc + &self.m[i][k] * &v[k]);
            v[i] = rhs / (int(1) - &self.m[i][i]);
        }
        v
    }
}

/// Moments of `P` on `[0, 1/3]`, which equal those on `[0, y]` for any `y` in
/// the first gap.
fn left_half() -> [Rational; 3] {
    [frac(1, 2), frac(1, 12), frac(1, 48)]
}

/// Moments of `P` on `(-∞, x]` for rational `x`, exact.
///
/// Walks down the basic intervals containing `x`, rescaling `x` into the
/// current interval at each step. The walk stops once the rescaled point
/// reaches a gap or an endpoint. If it returns to an earlier position, `x` is
/// a point of the Cantor set with eventually periodic ternary digits and the
/// remaining mass is fixed by self-similarity. Otherwise the walk fails after
/// `max_depth` refinements.
pub fn partial_moments(x: &Rational, max_depth: u32) -> Result<Moments> {
    let zero = int(0);
    let one = int(1);
    if *x <= zero {
        return Ok(Moments::zero());
    }
    if *x >= one {
        return Ok(Moments::total());
    }
    let (lo, hi) = (frac(1, 3), frac(2, 3));
    let mut y = x.clone();
    // (position, map from moments at that position to moments at x)
    let mut path: Vec<(Rational, Affine)> = Vec::new();
    let mut acc = Affine::identity();
    loop {
        let tail = if y <= zero {
            Some(Moments::zero().as_array())
        } else if y >= one {
            Some(Moments::total().as_array())
        } else if y >= lo && y <= hi {
            Some(left_half())
        } else {
            None
        };
        if let Some(v) = tail {
            return Ok(Moments::from_array(acc.apply(&v)));
        }
        if let Some(start) = path.iter().position(|(seen, _)| *seen == y) {
            // acc = path[start].1 ∘ cycle
            let head = &path[start].1;
            let mut cycle = Affine::identity();
            for (pos, _) in &path[start..] {
                let step = if *pos < lo { Affine::left_branch() } else { Affine::right_branch() };
                cycle = cycle.compose(&step);
            }
            return Ok(Moments::from_array(head.apply(&cycle.fixed_point())));
        }
        if path.len() as u32 >= max_depth {
            return Err(Error::DepthExceeded { max_depth, boundary: x.clone() });
        }
        let step = if y < lo { Affine::left_branch() } else { Affine::right_branch() };
        path.push((y.clone(), acc.clone()));
        acc = acc.compose(&step);
        y = if y < lo { &y * int(3) } else { &y * int(3) - int(2) };
    }
}

/// Moments of `P` on `[left, right]`.
pub fn interval_moments(left: &Rational, right: &Rational, max_depth: u32) -> Result<Moments> {
    Ok(&partial_moments(right, max_depth)? - &partial_moments(left, max_depth)?)
}
