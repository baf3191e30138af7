//! The intersection algebra as the semigroup ring of a linear diophantine
//! system.
//!
//! A monomial `x^m u^r v^s` lies in the algebra exactly when
//! `m_t = a_t r + h_t = b_t s + k_t` for some `h_t, k_t ≥ 0`. Collecting the
//! unknowns as `(r, s, h_1, k_1, m_1, ..., h_n, k_n, m_n)` turns the
//! exponent semigroup into `E = { β ∈ N^{3n+2} : Φ β = 0 }`. This module
//! builds `Φ`, lists the fundamental and completely fundamental elements of
//! `E`, and its minimal positive elements.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::GradedMonomial;
use crate::cones::{boundary_ray, build_fan, hilbert_bases, primitive, LatticePoint2};
use crate::error::{Error, Result};
use crate::exponents::ExponentPair;

/// Column of `h_t` (0-based variable `t`); `k_t` and `m_t` follow it.
const fn h_col(t: usize) -> usize {
    2 + 3 * t
}

/// The `2n × (3n+2)` matrix `Φ`. Rows `2t` and `2t+1` encode
/// `a_t r + h_t - m_t = 0` and `b_t s + k_t - m_t = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMatrix {
    rows: Vec<Vec<i64>>,
}

impl PhiMatrix {
    pub fn n(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        3 * self.n() + 2
    }

    pub fn a(&self, t: usize) -> u64 {
        self.rows[2 * t][0] as u64
    }

    pub fn b(&self, t: usize) -> u64 {
        self.rows[2 * t + 1][1] as u64
    }
}

pub fn build_phi(ep: &ExponentPair) -> PhiMatrix {
    let n = ep.n();
    let mut rows = vec![vec![0i64; 3 * n + 2]; 2 * n];
    for t in 0..n {
        let h = h_col(t);
        rows[2 * t][0] = ep.a()[t] as i64;
        rows[2 * t][h] = 1;
        rows[2 * t][h + 2] = -1;
        rows[2 * t + 1][1] = ep.b()[t] as i64;
        rows[2 * t + 1][h + 1] = 1;
        rows[2 * t + 1][h + 2] = -1;
    }
    PhiMatrix { rows }
}

/// A solution `(r, s, h_1, k_1, m_1, ..., h_n, k_n, m_n)` of `Φ β = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EPhiElement(Vec<u64>);

impl EPhiElement {
    /// Wraps a raw vector of length `3n + 2`. No membership check is made;
    /// use [`is_member`] for that.
    pub fn from_vec(v: Vec<u64>) -> Self {
        assert!(
            v.len() >= 2 && (v.len() - 2).is_multiple_of(3),
            "length must be 3n+2"
        );
        EPhiElement(v)
    }

    pub fn zero(n: usize) -> Self {
        EPhiElement(vec![0; 3 * n + 2])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn n(&self) -> usize {
        (self.0.len() - 2) / 3
    }

    pub fn r(&self) -> u64 {
        self.0[0]
    }

    pub fn s(&self) -> u64 {
        self.0[1]
    }

    pub fn point(&self) -> LatticePoint2 {
        LatticePoint2::new(self.r(), self.s())
    }

    pub fn h(&self, t: usize) -> u64 {
        self.0[h_col(t)]
    }

    pub fn k(&self, t: usize) -> u64 {
        self.0[h_col(t) + 1]
    }

    pub fn m(&self, t: usize) -> u64 {
        self.0[h_col(t) + 2]
    }

    /// `π_t(β) = (r, s, h_t, k_t, m_t)`.
    pub fn pi(&self, t: usize) -> [u64; 5] {
        [self.r(), self.s(), self.h(t), self.k(t), self.m(t)]
    }

    /// Every coordinate is at least 1.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &EPhiElement) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }

    pub fn add(&self, other: &EPhiElement) -> EPhiElement {
        EPhiElement(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    /// Drops the `h_t, k_t` coordinates: the exponent vector `(m, r, s)` of
    /// the corresponding monomial.
    pub fn project(&self) -> GradedMonomial {
        GradedMonomial::new(
            (0..self.n()).map(|t| self.m(t)).collect(),
            self.r(),
            self.s(),
        )
    }
}

impl fmt::Display for EPhiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The element of `E` over `(r, s)` with the smallest `m_t = max(a_t r, b_t s)`.
pub fn lift(ep: &ExponentPair, p: LatticePoint2) -> EPhiElement {
    let mut v = Vec::with_capacity(3 * ep.n() + 2);
    v.extend([p.r, p.s]);
    for (&a, &b) in ep.a().iter().zip(ep.b()) {
        let m = (a * p.r).max(b * p.s);
        v.extend([m - a * p.r, m - b * p.s, m]);
    }
    EPhiElement(v)
}

/// `α_t`: the element with `π_t = (0, 0, 1, 1, 1)` and zeros elsewhere; it
/// corresponds to the variable `x_t`.
pub fn alpha(n: usize, t: usize) -> EPhiElement {
    let mut v = vec![0; 3 * n + 2];
    v[h_col(t)..h_col(t) + 3].fill(1);
    EPhiElement(v)
}

/// Nonnegativity and `Φ v = 0`.
pub fn is_member(phi: &PhiMatrix, v: &[i64]) -> Result<bool> {
    if v.len() != phi.cols() {
        return Err(Error::VectorLength {
            expected: phi.cols(),
            found: v.len(),
        });
    }
    if v.iter().any(|&x| x < 0) {
        return Ok(false);
    }
    Ok(phi.rows.iter().all(|row| {
        row.iter()
            .zip(v)
            .map(|(&c, &x)| i128::from(c) * i128::from(x))
            .sum::<i128>()
            == 0
    }))
}

/// A fundamental element coming from a Hilbert basis point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundBeta {
    /// Lowest cone index whose basis contains the point.
    pub cone_index: usize,
    pub point: LatticePoint2,
    pub element: EPhiElement,
}

/// The fundamental elements `A ∪ B` of `E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundSet {
    pub alphas: Vec<EPhiElement>,
    pub betas: Vec<FundBeta>,
}

impl FundSet {
    /// All fundamental elements, sorted.
    pub fn elements(&self) -> Vec<EPhiElement> {
        let mut all: Vec<EPhiElement> = self
            .alphas
            .iter()
            .cloned()
            .chain(self.betas.iter().map(|b| b.element.clone()))
            .collect();
        all.sort();
        all
    }

    pub fn len(&self) -> usize {
        self.alphas.len() + self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn fund_elements(ep: &ExponentPair) -> FundSet {
    let n = ep.n();
    let alphas = (0..n).map(|t| alpha(n, t)).collect();
    let mut seen = BTreeSet::new();
    let mut betas = Vec::new();
    for hb in hilbert_bases(&build_fan(ep)) {
        for &p in &hb.points {
            if seen.insert(p) {
                betas.push(FundBeta {
                    cone_index: hb.cone_index,
                    point: p,
                    element: lift(ep, p),
                });
            }
        }
    }
    FundSet { alphas, betas }
}

/// The distinct primitive boundary rays `(q_i, p_i)`, `i = 0..=n+1`, from
/// `(0, 1)` down to `(1, 0)`.
pub fn boundary_rays(ep: &ExponentPair) -> Vec<LatticePoint2> {
    let mut rays: Vec<LatticePoint2> = Vec::with_capacity(ep.n() + 2);
    for i in 0..=ep.n() + 1 {
        let ray = primitive(boundary_ray(ep, i)).expect("boundary rays are nonzero");
        if rays.last() != Some(&ray) {
            rays.push(ray);
        }
    }
    rays
}

/// Completely fundamental elements: the `α_t` and the lift of every distinct
/// primitive boundary ray. Sorted.
pub fn cf_elements(ep: &ExponentPair) -> Vec<EPhiElement> {
    let n = ep.n();
    let mut out: Vec<EPhiElement> = (0..n)
        .map(|t| alpha(n, t))
        .chain(boundary_rays(ep).into_iter().map(|p| lift(ep, p)))
        .collect();
    out.sort();
    out
}

/// Minimal positive elements of `E` for a non-degenerate pair: every
/// fundamental element other than the `α_t`, `β(1,0)` and `β(0,1)`, shifted
/// by one in each `h_t, k_t, m_t` coordinate. Sorted.
pub fn minimal_positive(ep: &ExponentPair) -> Result<Vec<EPhiElement>> {
    if !ep.is_non_degenerate() {
        return Err(Error::DegenerateInput);
    }
    let axis = [LatticePoint2::new(1, 0), LatticePoint2::new(0, 1)];
    let mut out: Vec<EPhiElement> = fund_elements(ep)
        .betas
        .into_iter()
        .filter(|b| !axis.contains(&b.point))
        .map(|b| {
            let mut v = b.element.into_vec();
            v[2..].iter_mut().for_each(|x| *x += 1);
            EPhiElement(v)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Steps `m` to the next vector of the box `floor ≤ m ≤ cap` in
/// lexicographic order; false once the box is exhausted.
fn advance(m: &mut [u64], floor: &[u64], cap: u64) -> bool {
    for t in (0..m.len()).rev() {
        if m[t] < cap {
            m[t] += 1;
            return true;
        }
        m[t] = floor[t];
    }
    false
}

/// Every element of `E` with `r, s ≤ bound_rs` and every `m_t ≤ bound_m`,
/// sorted lexicographically. The `h_t, k_t` are determined by `(r, s, m_t)`.
pub fn enumerate_members(phi: &PhiMatrix, bound_rs: u64, bound_m: u64) -> Vec<EPhiElement> {
    let n = phi.n();
    let mut out: Vec<EPhiElement> = (0..=bound_rs)
        .into_par_iter()
        .flat_map_iter(|r| {
            let mut stripe = Vec::new();
            for s in 0..=bound_rs {
                let floor: Vec<u64> = (0..n).map(|t| (phi.a(t) * r).max(phi.b(t) * s)).collect();
                if floor.iter().any(|&f| f > bound_m) {
                    continue;
                }
                let mut m = floor.clone();
                loop {
                    let mut v = Vec::with_capacity(3 * n + 2);
                    v.extend([r, s]);
                    for t in 0..n {
                        v.extend([m[t] - phi.a(t) * r, m[t] - phi.b(t) * s, m[t]]);
                    }
                    stripe.push(EPhiElement(v));
                    if !advance(&mut m, &floor, bound_m) {
                        break;
                    }
                }
            }
            stripe
        })
        .collect();
    out.sort();
    out
}
