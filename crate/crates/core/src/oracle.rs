//! Brute-force reference computations.
//!
//! Everything here works directly from the defining inequalities
//! `m_t ≥ max(a_t r, b_t s)` and from raw cone rays. The only items taken
//! from the rest of the crate are data types, so each oracle stays
//! independent of the code it is compared against.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cones::{Cone2D, LatticePoint2};
use crate::diophantine::EPhiElement;
use crate::error::{Error, Result};
use crate::exponents::ExponentPair;

/// Search box: `r, s ≤ rs_bound`, every `x`-exponent `≤ m_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub rs_bound: u64,
    pub m_bound: u64,
    pub multiplier_bound: u64,
}

impl Default for BoxSpec {
    fn default() -> Self {
        BoxSpec {
            rs_bound: 25,
            m_bound: 25,
            multiplier_bound: 4,
        }
    }
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

fn reduce(r: u64, s: u64) -> (u64, u64) {
    let g = gcd(r, s);
    (r / g, s / g)
}

impl BoxSpec {
    /// A box sized from the fan: `rs_bound` is twice the largest coordinate
    /// of any corner `high + low` of a fundamental parallelogram (every
    /// Hilbert basis point lies below it), and `m_bound` covers every
    /// monomial over that `(r, s)` range with room for the positive shift.
    pub fn for_pair(ep: &ExponentPair) -> Self {
        let n = ep.n();
        let mut rays = vec![(0u64, 1u64)];
        rays.extend(ep.a().iter().zip(ep.b()).map(|(&a, &b)| reduce(b, a)));
        rays.push((1, 0));
        let corner = rays
            .windows(2)
            .map(|w| (w[0].0 + w[1].0).max(w[0].1 + w[1].1))
            .max()
            .unwrap_or(1);
        let rs_bound = (2 * corner).max(2);
        let m_bound = (0..n)
            .map(|t| (ep.a()[t] * rs_bound).max(ep.b()[t] * rs_bound))
            .max()
            .unwrap_or(0)
            + 1;
        BoxSpec {
            rs_bound,
            m_bound,
            multiplier_bound: 4,
        }
    }
}

/// Exponent vector of the generator of `I^r ∩ J^s`: `m_t = max(a_t r, b_t s)`.
pub fn oracle_intersection_exponents(ep: &ExponentPair, r: u64, s: u64) -> Vec<u64> {
    ep.a()
        .iter()
        .zip(ep.b())
        .map(|(&a, &b)| (a * r).max(b * s))
        .collect()
}

fn in_cone(c: &Cone2D, r: u64, s: u64) -> bool {
    let (lr, ls) = (i128::from(c.ray_low.r), i128::from(c.ray_low.s));
    let (hr, hs) = (i128::from(c.ray_high.r), i128::from(c.ray_high.s));
    let (r, s) = (i128::from(r), i128::from(s));
    lr * s - ls * r >= 0 && r * hs - s * hr >= 0
}

/// Points of `Q = C ∩ Z²` in the box that are not the sum of two nonzero
/// points of `Q`. Sorted.
pub fn oracle_hilbert_basis(c: &Cone2D, bx: &BoxSpec) -> Result<Vec<LatticePoint2>> {
    let low = reduce(c.ray_low.r, c.ray_low.s);
    let high = reduce(c.ray_high.r, c.ray_high.s);
    let required = (low.0 + high.0).max(low.1 + high.1);
    if bx.rs_bound < required {
        return Err(Error::BoxTooSmall {
            bound: bx.rs_bound,
            required,
        });
    }
    let b = bx.rs_bound;
    let points: Vec<(u64, u64)> = (0..=b)
        .flat_map(|r| (0..=b).map(move |s| (r, s)))
        .filter(|&(r, s)| (r, s) != (0, 0) && in_cone(c, r, s))
        .collect();
    let out = points
        .iter()
        .filter(|&&(r, s)| {
            !points.iter().any(|&(yr, ys)| {
                (yr, ys) != (r, s) && yr <= r && ys <= s && in_cone(c, r - yr, s - ys)
            })
        })
        .map(|&(r, s)| LatticePoint2::new(r, s))
        .collect();
    Ok(out)
}

/// Full `E` vector over `(r, s)` with the given `x`-exponents.
fn full_vector(ep: &ExponentPair, r: u64, s: u64, m: &[u64]) -> Vec<u64> {
    let mut v = vec![r, s];
    for t in 0..ep.n() {
        v.extend([m[t] - ep.a()[t] * r, m[t] - ep.b()[t] * s, m[t]]);
    }
    v
}

/// Strictly positive elements of `E` in the box that are minimal under the
/// componentwise order. Sorted.
///
/// Minimality is certified relative to the box; since anything below a box
/// element is in the box too, the only caveat is completeness, which
/// [`BoxSpec::for_pair`] addresses by sizing.
pub fn oracle_minimal_positive(ep: &ExponentPair, bx: &BoxSpec) -> Vec<EPhiElement> {
    // Over each (r, s) every positive element dominates the one with
    // m_t = max(a_t r, b_t s) + 1, so only those candidates matter.
    let mut candidates = Vec::new();
    for r in 1..=bx.rs_bound {
        for s in 1..=bx.rs_bound {
            let m: Vec<u64> = oracle_intersection_exponents(ep, r, s)
                .iter()
                .map(|x| x + 1)
                .collect();
            if m.iter().all(|&x| x <= bx.m_bound) {
                candidates.push(full_vector(ep, r, s, &m));
            }
        }
    }
    let le = |x: &[u64], y: &[u64]| x.iter().zip(y).all(|(a, b)| a <= b);
    let mut out: Vec<EPhiElement> = candidates
        .iter()
        .filter(|x| !candidates.iter().any(|y| y != *x && le(y, x)))
        .map(|x| EPhiElement::from_vec(x.clone()))
        .collect();
    out.sort();
    out
}

/// All N-combinations of `gens` inside the box. Vectors are read as
/// `(m_1, ..., m_k, r, s)`: the last two coordinates are bounded by
/// `rs_bound`, the others by `m_bound`.
pub fn oracle_semigroup_closure(gens: &[Vec<u64>], bx: &BoxSpec) -> BTreeSet<Vec<u64>> {
    let dim = gens.first().map_or(0, Vec::len);
    let inside = |v: &[u64]| {
        v.iter().enumerate().all(|(i, &x)| {
            if i + 2 >= dim {
                x <= bx.rs_bound
            } else {
                x <= bx.m_bound
            }
        })
    };
    let mut seen = BTreeSet::from([vec![0; dim]]);
    let mut queue = VecDeque::from([vec![0; dim]]);
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(x, y)| x + y).collect();
            if inside(&w) && !seen.contains(&w) {
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Every element of `E` with `r, s ≤ rs_bound` and all `m_t ≤ m_bound`, as
/// full vectors `(r, s, h_1, k_1, m_1, ...)`. Sorted.
pub fn oracle_members(ep: &ExponentPair, rs_bound: u64, m_bound: u64) -> Vec<Vec<u64>> {
    let n = ep.n();
    let mut out = Vec::new();
    for r in 0..=rs_bound {
        for s in 0..=rs_bound {
            let floor = oracle_intersection_exponents(ep, r, s);
            if floor.iter().any(|&f| f > m_bound) {
                continue;
            }
            let mut m = floor.clone();
            'fiber: loop {
                out.push(full_vector(ep, r, s, &m));
                for t in 0..n {
                    if m[t] < m_bound {
                        m[t] += 1;
                        continue 'fiber;
                    }
                    m[t] = floor[t];
                }
                break;
            }
        }
    }
    out.sort();
    out
}

/// Splits `factor · v` (an element of `E`) as `γ + δ` with `γ, δ ∈ E`, both
/// nonzero, `γ` not a multiple of `v`. Returns `γ` as a full vector.
///
/// With `factor = 1` this decides whether `v` is not fundamental; with
/// larger factors it searches for the decompositions that rule out complete
/// fundamentality.
pub fn oracle_non_multiple_split(ep: &ExponentPair, v: &[u64], factor: u64) -> Option<Vec<u64>> {
    let n = ep.n();
    let (r, s) = (v[0], v[1]);
    let m: Vec<u64> = (0..n).map(|t| factor * v[4 + 3 * t]).collect();
    let (cr, cs) = (factor * r, factor * s);
    if (r, s) == (0, 0) {
        // multiples of v are j·m on a diagonal of the box [0, factor·m]
        let t = (0..n).find(|&t| v[4 + 3 * t] >= 2).or_else(|| {
            let mut positive = (0..n).filter(|&t| m[t] > 0);
            positive.next().filter(|_| positive.next().is_some())
        })?;
        let mut gamma_m = vec![0; n];
        gamma_m[t] = 1;
        return Some(full_vector(ep, 0, 0, &gamma_m));
    }
    for r1 in 0..=cr {
        for s1 in 0..=cs {
            let lo = oracle_intersection_exponents(ep, r1, s1);
            let rest = oracle_intersection_exponents(ep, cr - r1, cs - s1);
            if (0..n).any(|t| lo[t] + rest[t] > m[t]) {
                continue;
            }
            let hi: Vec<u64> = (0..n).map(|t| m[t] - rest[t]).collect();
            // with (r, s) nonzero at most one multiple j·v sits over (r1, s1)
            let multiple = (0..=factor).find(|&j| j * r == r1 && j * s == s1);
            let gamma_m = match multiple {
                None => lo.clone(),
                Some(j) => {
                    let jm: Vec<u64> = (0..n).map(|t| j * v[4 + 3 * t]).collect();
                    // any admissible m' other than j·m gives a non-multiple
                    let Some(t) = (0..n).find(|&t| lo[t] != jm[t] || hi[t] != jm[t]) else {
                        continue;
                    };
                    let mut g = jm.clone();
                    g[t] = if lo[t] != jm[t] { lo[t] } else { hi[t] };
                    g
                }
            };
            let gamma = full_vector(ep, r1, s1, &gamma_m);
            let delta_zero = r1 == cr && s1 == cs && (0..n).all(|t| gamma_m[t] == m[t]);
            if gamma.iter().any(|&x| x > 0) && !delta_zero {
                return Some(gamma);
            }
        }
    }
    None
}

/// `v` admits no decomposition into two nonzero elements of `E`.
pub fn oracle_is_fundamental(ep: &ExponentPair, v: &[u64]) -> bool {
    v.iter().any(|&x| x > 0) && oracle_non_multiple_split(ep, v, 1).is_none()
}
