//! Exponent vectors of the two principal ideals and their fan ordering.
//!
//! An [`ExponentPair`] holds `a` and `b` with the variables reindexed so that
//! the ratios `a[i] / b[i]` are non-increasing. Every other module assumes
//! this ordering.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted exponent. Keeps every product formed downstream
/// (ratio cross-multiplications, lifts `max(a r, b s)`, series degrees)
/// comfortably inside `u64`.
pub const MAX_EXPONENT: u64 = 1 << 24;

/// A nonnegative ratio `num / den` in lowest terms; `den == 0` encodes infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Reduces `num / den`. Returns `None` for `0 / 0`.
    pub fn new(num: u64, den: u64) -> Option<Self> {
        if num == 0 && den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        Some(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn infinity() -> Self {
        Ratio { num: 1, den: 0 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        ratio_cmp(*self, *other)
    }
}

/// Exact comparison by cross-multiplication. Infinity is equal to itself and
/// greater than every finite ratio.
pub fn ratio_cmp(lhs: Ratio, rhs: Ratio) -> Ordering {
    match (lhs.is_infinite(), rhs.is_infinite()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => {
            let l = u128::from(lhs.num) * u128::from(rhs.den);
            let r = u128::from(rhs.num) * u128::from(lhs.den);
            l.cmp(&r)
        }
    }
}

/// The exponent vectors `a` (of `I = (x^a)`) and `b` (of `J = (x^b)`) in fan order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentPair {
    a: Vec<u64>,
    b: Vec<u64>,
    /// `perm[i]` is the input position of the variable placed at fan position `i`.
    perm: Vec<usize>,
}

impl ExponentPair {
    /// Validates and fan-orders nonnegative exponent vectors.
    pub fn new(a: &[u64], b: &[u64]) -> Result<Self> {
        let to_signed = |v: &[u64]| -> Vec<i64> {
            v.iter()
                .map(|&x| i64::try_from(x).unwrap_or(i64::MAX))
                .collect()
        };
        normalize_fan_order(&to_signed(a), &to_signed(b))
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `(a_i, b_i)` for `i in 0..=n+1`, using the sentinels
    /// `a_0 = b_{n+1} = 1` and `a_{n+1} = b_0 = 0`; `1..=n` are the
    /// fan-ordered variables.
    pub fn extended(&self, i: usize) -> (u64, u64) {
        let n = self.n();
        match i {
            0 => (1, 0),
            i if i == n + 1 => (0, 1),
            i if i <= n => (self.a[i - 1], self.b[i - 1]),
            _ => panic!("extended index {i} out of range 0..={}", n + 1),
        }
    }

    /// Reduced ratio `a_i / b_i` for an extended index.
    pub fn ratio(&self, i: usize) -> Ratio {
        let (a, b) = self.extended(i);
        Ratio::new(a, b).expect("validated pairs are never (0, 0)")
    }

    /// Vectors in the caller's original variable order.
    pub fn restore(&self) -> (Vec<u64>, Vec<u64>) {
        let mut a = vec![0; self.n()];
        let mut b = vec![0; self.n()];
        for (pos, &orig) in self.perm.iter().enumerate() {
            a[orig] = self.a[pos];
            b[orig] = self.b[pos];
        }
        (a, b)
    }

    /// True when every consecutive ratio, sentinels included, is strictly decreasing.
    pub fn is_non_degenerate(&self) -> bool {
        (0..=self.n()).all(|i| ratio_cmp(self.ratio(i), self.ratio(i + 1)) == Ordering::Greater)
    }
}

/// Validates raw exponent vectors and reorders the variables so that the
/// ratios `a_i / b_i` are non-increasing. The sort is stable, so tied ratios
/// keep their input order.
pub fn normalize_fan_order(a_raw: &[i64], b_raw: &[i64]) -> Result<ExponentPair> {
    if a_raw.len() != b_raw.len() {
        return Err(Error::LengthMismatch {
            a: a_raw.len(),
            b: b_raw.len(),
        });
    }
    if a_raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    let check = |vector: char, v: &[i64]| -> Result<Vec<u64>> {
        v.iter()
            .enumerate()
            .map(|(index, &value)| {
                if value < 0 {
                    Err(Error::NegativeEntry {
                        vector,
                        index,
                        value,
                    })
                } else if value as u64 > MAX_EXPONENT {
                    Err(Error::EntryTooLarge {
                        vector,
                        index,
                        value,
                        max: MAX_EXPONENT,
                    })
                } else {
                    Ok(value as u64)
                }
            })
            .collect()
    };
    let a = check('a', a_raw)?;
    let b = check('b', b_raw)?;
    if let Some(i) = (0..a.len()).find(|&i| a[i] == 0 && b[i] == 0) {
        return Err(Error::ZeroPair(i));
    }

    let ratio = |i: usize| Ratio::new(a[i], b[i]).expect("zero pairs rejected above");
    let mut perm: Vec<usize> = (0..a.len()).collect();
    perm.sort_by(|&i, &j| ratio_cmp(ratio(j), ratio(i)));

    Ok(ExponentPair {
        a: perm.iter().map(|&i| a[i]).collect(),
        b: perm.iter().map(|&i| b[i]).collect(),
        perm,
    })
}
