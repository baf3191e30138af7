//! The fan of two-dimensional cones attached to an exponent pair, and the
//! Hilbert bases of the semigroups `Q_i = C_i ∩ Z²`.
//!
//! Cone `C_i` is spanned by the rays `(b_i, a_i)` and `(b_{i+1}, a_{i+1})`
//! with the sentinel rays `(0, 1)` and `(1, 0)` at the two ends, so the
//! cones sweep the closed first quadrant from the `s`-axis down to the
//! `r`-axis.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::ExponentPair;

/// An integer point `(r, s)`: `r` is the power of `I` (degree in `u`), `s`
/// the power of `J` (degree in `v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint2 {
    pub r: u64,
    pub s: u64,
}

impl LatticePoint2 {
    pub const ZERO: LatticePoint2 = LatticePoint2 { r: 0, s: 0 };

    pub const fn new(r: u64, s: u64) -> Self {
        LatticePoint2 { r, s }
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.s == 0
    }

    /// `self ≤ other` in both coordinates.
    pub fn le(&self, other: &LatticePoint2) -> bool {
        self.r <= other.r && self.s <= other.s
    }
}

impl std::ops::Add for LatticePoint2 {
    type Output = LatticePoint2;
    fn add(self, rhs: LatticePoint2) -> LatticePoint2 {
        LatticePoint2::new(self.r + rhs.r, self.s + rhs.s)
    }
}

impl fmt::Display for LatticePoint2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

impl From<(u64, u64)> for LatticePoint2 {
    fn from((r, s): (u64, u64)) -> Self {
        LatticePoint2::new(r, s)
    }
}

/// Divides `p` by `gcd(r, s)`.
pub fn primitive(p: LatticePoint2) -> Result<LatticePoint2> {
    if p.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = p.r.gcd(&p.s);
    Ok(LatticePoint2::new(p.r / g, p.s / g))
}

/// `u.r * v.s - u.s * v.r`; positive when `v` is counter-clockwise of `u`.
fn cross(u: LatticePoint2, v: LatticePoint2) -> i128 {
    i128::from(u.r) * i128::from(v.s) - i128::from(u.s) * i128::from(v.r)
}

/// Cone `C_i` between `ray_low` (flatter) and `ray_high` (steeper).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone2D {
    pub index: usize,
    pub ray_low: LatticePoint2,
    pub ray_high: LatticePoint2,
    pub primitive_low: LatticePoint2,
    pub primitive_high: LatticePoint2,
    /// The two rays are parallel and the cone is a single ray.
    pub degenerate: bool,
}

impl Cone2D {
    /// Builds the cone spanned by two nonzero rays, `high` at least as steep as `low`.
    pub fn new(index: usize, ray_low: LatticePoint2, ray_high: LatticePoint2) -> Result<Self> {
        let primitive_low = primitive(ray_low)?;
        let primitive_high = primitive(ray_high)?;
        debug_assert!(
            cross(ray_low, ray_high) >= 0,
            "ray_high must not be flatter than ray_low"
        );
        Ok(Cone2D {
            index,
            ray_low,
            ray_high,
            primitive_low,
            primitive_high,
            degenerate: primitive_low == primitive_high,
        })
    }

    /// Half-plane membership: `p` is not below `ray_low` and not above `ray_high`.
    pub fn contains(&self, p: LatticePoint2) -> bool {
        cross(self.ray_low, p) >= 0 && cross(p, self.ray_high) >= 0
    }

    /// Twice the area of the fundamental parallelogram of the primitive rays.
    pub fn determinant(&self) -> u64 {
        cross(self.primitive_low, self.primitive_high) as u64
    }
}

/// The fan `Σ_{a,b}`: cones `C_0, ..., C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub cones: Vec<Cone2D>,
    pub ep: ExponentPair,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

/// `(b_i, a_i)` for an extended index `i`.
pub(crate) fn boundary_ray(ep: &ExponentPair, i: usize) -> LatticePoint2 {
    let (a, b) = ep.extended(i);
    LatticePoint2::new(b, a)
}

pub fn build_fan(ep: &ExponentPair) -> Fan {
    let cones = (0..=ep.n())
        .map(|i| {
            Cone2D::new(i, boundary_ray(ep, i + 1), boundary_ray(ep, i))
                .expect("validated exponent pairs have nonzero rays")
        })
        .collect();
    Fan {
        cones,
        ep: ep.clone(),
    }
}

/// The Hilbert basis of one cone, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub cone_index: usize,
    pub points: Vec<LatticePoint2>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint2) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

/// Hilbert basis of `Q = C ∩ Z²`.
///
/// Every irreducible element of `Q` lies in the closed parallelogram spanned
/// by the primitive rays, so the candidates are the lattice points of that
/// parallelogram. A candidate is dropped when it splits as `y + z` with
/// `y, z` nonzero points of `Q`; the summand `y` can be taken to be a basis
/// element, hence a candidate itself.
pub fn hilbert_basis(c: &Cone2D) -> HilbertBasis {
    if c.degenerate {
        return HilbertBasis {
            cone_index: c.index,
            points: vec![c.primitive_high],
        };
    }
    let low = c.primitive_low;
    let high = c.primitive_high;
    let det = cross(low, high);

    let mut candidates = Vec::new();
    for r in 0..=low.r + high.r {
        for s in 0..=low.s + high.s {
            let p = LatticePoint2::new(r, s);
            if p.is_zero() {
                continue;
            }
            let along_high = cross(low, p);
            let along_low = cross(p, high);
            if (0..=det).contains(&along_high) && (0..=det).contains(&along_low) {
                candidates.push(p);
            }
        }
    }

    let reducible = |x: &LatticePoint2| {
        candidates
            .iter()
            .any(|y| y != x && y.le(x) && c.contains(LatticePoint2::new(x.r - y.r, x.s - y.s)))
    };
    let mut points: Vec<LatticePoint2> = candidates
        .iter()
        .filter(|x| !reducible(x))
        .copied()
        .collect();
    points.sort();
    HilbertBasis {
        cone_index: c.index,
        points,
    }
}

/// Hilbert bases of every cone of the fan, in cone order.
pub fn hilbert_bases(fan: &Fan) -> Vec<HilbertBasis> {
    fan.cones.par_iter().map(hilbert_basis).collect()
}

/// The smallest `i` with `p ∈ Q_i`. Points on a shared face belong to both
/// neighbouring cones; the lower index is reported.
pub fn cone_assignment(fan: &Fan, p: LatticePoint2) -> usize {
    fan.cones
        .iter()
        .position(|c| c.contains(p))
        .expect("the fan covers the first quadrant")
}
