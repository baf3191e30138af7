//! Multigraded Hilbert series in the variables `(r, s, m_1, ..., m_n)`.
//!
//! The denominator comes in closed form from the completely fundamental
//! elements. The numerator is recovered numerically: the lattice-point
//! counting series, truncated by total degree, times the denominator.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diophantine::{boundary_rays, build_phi, enumerate_members};
use crate::exponents::ExponentPair;

/// A denominator factor `(1 - z^exponent)^multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeriesFactor {
    /// Exponents of `(r, s, m_1, ..., m_n)`.
    pub exponent: Vec<u64>,
    pub multiplicity: u32,
}

impl SeriesFactor {
    fn degree(&self) -> u64 {
        self.exponent.iter().sum()
    }
}

/// A power series in `n + 2` variables, kept up to total degree `degree_cap`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    /// Nonzero coefficients keyed by exponent `(r, s, m_1, ..., m_n)`.
    pub coefficients: BTreeMap<Vec<u64>, i64>,
    pub degree_cap: u64,
}

impl TruncatedSeries {
    pub fn one(vars: usize, degree_cap: u64) -> Self {
        TruncatedSeries {
            coefficients: BTreeMap::from([(vec![0; vars], 1)]),
            degree_cap,
        }
    }

    pub fn coefficient(&self, exponent: &[u64]) -> i64 {
        self.coefficients.get(exponent).copied().unwrap_or(0)
    }

    /// Largest total degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<u64> {
        self.coefficients.keys().map(|e| e.iter().sum()).max()
    }

    /// Truncated product of two series with the smaller of the two caps.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.degree_cap.min(other.degree_cap);
        let mut out: BTreeMap<Vec<u64>, i64> = BTreeMap::new();
        for (e1, c1) in &self.coefficients {
            let d1: u64 = e1.iter().sum();
            if d1 > cap {
                continue;
            }
            for (e2, c2) in &other.coefficients {
                if d1 + e2.iter().sum::<u64>() > cap {
                    continue;
                }
                let e: Vec<u64> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                *out.entry(e).or_default() += c1 * c2;
            }
        }
        out.retain(|_, c| *c != 0);
        TruncatedSeries {
            coefficients: out,
            degree_cap: cap,
        }
    }

    /// Multiplies in place by `1 - z^exponent`.
    fn mul_one_minus(&mut self, exponent: &[u64]) {
        let shift: u64 = exponent.iter().sum();
        let mut out = self.coefficients.clone();
        for (e, c) in &self.coefficients {
            if e.iter().sum::<u64>() + shift > self.degree_cap {
                continue;
            }
            let shifted: Vec<u64> = e.iter().zip(exponent).map(|(x, y)| x + y).collect();
            *out.entry(shifted).or_default() -= c;
        }
        out.retain(|_, c| *c != 0);
        self.coefficients = out;
    }
}

/// Denominator factors: `(1 - m_i)` for each variable, then
/// `(1 - r^q s^p ∏ m_j^{max(a_j q, b_j p)})` for each distinct primitive
/// boundary ray `(q, p)` from `(0, 1)` to `(1, 0)`.
pub fn hilbert_series_denominator(ep: &ExponentPair) -> Vec<SeriesFactor> {
    let n = ep.n();
    let variables = (0..n).map(|i| {
        let mut exponent = vec![0; n + 2];
        exponent[2 + i] = 1;
        SeriesFactor {
            exponent,
            multiplicity: 1,
        }
    });
    let rays = boundary_rays(ep).into_iter().map(|ray| {
        let mut exponent = vec![ray.r, ray.s];
        exponent.extend(
            ep.a()
                .iter()
                .zip(ep.b())
                .map(|(&a, &b)| (a * ray.r).max(b * ray.s)),
        );
        SeriesFactor {
            exponent,
            multiplicity: 1,
        }
    });
    variables.chain(rays).collect()
}

/// No factor's exponent is a rational multiple of another's. A necessary
/// condition for the factors to form the reduced denominator.
pub fn denominator_is_reduced(factors: &[SeriesFactor]) -> bool {
    let parallel = |u: &[u64], v: &[u64]| {
        (0..u.len()).all(|i| {
            (0..u.len())
                .all(|j| u128::from(u[i]) * u128::from(v[j]) == u128::from(u[j]) * u128::from(v[i]))
        })
    };
    factors.iter().enumerate().all(|(i, f)| {
        factors[i + 1..]
            .iter()
            .all(|g| !parallel(&f.exponent, &g.exponent))
    })
}

/// `Σ z^(r, s, m)` over the algebra's monomials of total degree at most `cap`.
pub fn counting_series(ep: &ExponentPair, degree_cap: u64) -> TruncatedSeries {
    let n = ep.n();
    let mut coefficients = BTreeMap::new();
    for v in enumerate_members(&build_phi(ep), degree_cap, degree_cap) {
        let mut e = vec![v.r(), v.s()];
        e.extend((0..n).map(|t| v.m(t)));
        if e.iter().sum::<u64>() <= degree_cap {
            coefficients.insert(e, 1);
        }
    }
    TruncatedSeries {
        coefficients,
        degree_cap,
    }
}

/// Numerator of the Hilbert series, correct through total degree `cap`.
pub fn hilbert_series_numerator_truncated(ep: &ExponentPair, degree_cap: u64) -> TruncatedSeries {
    let mut series = counting_series(ep, degree_cap);
    for f in hilbert_series_denominator(ep) {
        for _ in 0..f.multiplicity {
            series.mul_one_minus(&f.exponent);
        }
    }
    series
}

/// Expansion of `1 / ∏ (1 - z^e)^mult` through total degree `cap`.
pub fn expand_inverse(factors: &[SeriesFactor], vars: usize, degree_cap: u64) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(vars, degree_cap);
    for f in factors {
        let d = f.degree();
        assert!(d > 0, "denominator factors have positive degree");
        let geometric = TruncatedSeries {
            coefficients: (0..=degree_cap / d)
                .map(|k| (f.exponent.iter().map(|x| x * k).collect(), 1))
                .collect(),
            degree_cap,
        };
        for _ in 0..f.multiplicity {
            acc = acc.mul(&geometric);
        }
    }
    acc
}
