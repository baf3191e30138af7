//! Algebra-level invariants: generators and their minimality, the canonical
//! ideal, the Gorenstein property, counting formulas and the Krull dimension.
//!
//! Monomials `x^m u^r v^s` are handled through their exponent vectors, in
//! the order `(m_1, ..., m_n, r, s)`.

mod series;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use series::{
    counting_series, denominator_is_reduced, expand_inverse, hilbert_series_denominator,
    hilbert_series_numerator_truncated, SeriesFactor, TruncatedSeries,
};

use crate::cones::{build_fan, hilbert_bases, LatticePoint2};
use crate::diophantine::{minimal_positive, EPhiElement};
use crate::error::{Error, Result};
use crate::exponents::ExponentPair;
use crate::linalg;
use crate::oracle::{oracle_minimal_positive, BoxSpec};

/// A monomial `x_1^{m_1} ⋯ x_n^{m_n} u^r v^s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradedMonomial {
    pub m: Vec<u64>,
    pub r: u64,
    pub s: u64,
}

impl GradedMonomial {
    pub fn new(m: Vec<u64>, r: u64, s: u64) -> Self {
        GradedMonomial { m, r, s }
    }

    /// The generator of `(I^r ∩ J^s) u^r v^s`.
    pub fn over(ep: &ExponentPair, p: LatticePoint2) -> Self {
        let m = ep
            .a()
            .iter()
            .zip(ep.b())
            .map(|(&a, &b)| (a * p.r).max(b * p.s))
            .collect();
        GradedMonomial::new(m, p.r, p.s)
    }

    /// The variable `x_t` (0-based).
    pub fn variable(n: usize, t: usize) -> Self {
        let mut m = vec![0; n];
        m[t] = 1;
        GradedMonomial::new(m, 0, 0)
    }

    /// Exponent vector `(m_1, ..., m_n, r, s)`.
    pub fn log(&self) -> Vec<u64> {
        let mut v = self.m.clone();
        v.extend([self.r, self.s]);
        v
    }

    pub fn from_log(log: &[u64]) -> Self {
        let n = log.len() - 2;
        GradedMonomial::new(log[..n].to_vec(), log[n], log[n + 1])
    }

    /// `m_t ≥ max(a_t r, b_t s)` for every `t`.
    pub fn is_in_algebra(&self, ep: &ExponentPair) -> bool {
        self.m.len() == ep.n()
            && self
                .m
                .iter()
                .zip(ep.a().iter().zip(ep.b()))
                .all(|(&m, (&a, &b))| m >= (a * self.r).max(b * self.s))
    }
}

impl fmt::Display for GradedMonomial {
    /// Renders as `x1^6*u*v^3`; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .m
            .iter()
            .enumerate()
            .map(|(t, &e)| (format!("x{}", t + 1), e))
            .chain([("u".to_string(), self.r), ("v".to_string(), self.s)])
            .filter(|&(_, e)| e > 0)
            .map(|(name, e)| if e == 1 { name } else { format!("{name}^{e}") })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Generating set of the algebra over the field: one monomial per Hilbert
/// basis point of every cone (shared face points once) and the variables.
/// Sorted.
pub fn generators(ep: &ExponentPair) -> Vec<GradedMonomial> {
    let mut points: Vec<LatticePoint2> = hilbert_bases(&build_fan(ep))
        .into_iter()
        .flat_map(|hb| hb.points)
        .collect();
    points.sort();
    points.dedup();
    let mut out: Vec<GradedMonomial> = points
        .into_iter()
        .map(|p| GradedMonomial::over(ep, p))
        .chain((0..ep.n()).map(|t| GradedMonomial::variable(ep.n(), t)))
        .collect();
    out.sort();
    out
}

/// Outcome of [`check_minimality`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Minimality {
    Minimal,
    /// `gens[index]` equals the product of `gens[j]^c` over `witness`.
    Redundant {
        index: usize,
        witness: Vec<(usize, u64)>,
    },
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal)
    }
}

/// Decides whether some monomial is a product of the others.
pub fn check_minimality(gens: &[GradedMonomial]) -> Minimality {
    let logs: Vec<Vec<u64>> = gens.iter().map(GradedMonomial::log).collect();
    check_minimality_logs(&logs)
}

/// [`check_minimality`] on raw exponent vectors of a common length. All
/// vectors must be nonzero.
pub fn check_minimality_logs(logs: &[Vec<u64>]) -> Minimality {
    for (index, target) in logs.iter().enumerate() {
        let others: Vec<usize> = (0..logs.len()).filter(|&j| j != index).collect();
        if let Some(witness) = decompose(target, logs, &others) {
            return Minimality::Redundant { index, witness };
        }
    }
    Minimality::Minimal
}

/// Bounded coin-change: writes `target` as an N-combination of `logs[j]`,
/// `j ∈ allowed`. Unit vectors among the allowed generators absorb any slack
/// in their coordinate, so the search only branches over the others.
fn decompose(target: &[u64], logs: &[Vec<u64>], allowed: &[usize]) -> Option<Vec<(usize, u64)>> {
    let dim = target.len();
    let mut units: Vec<Option<usize>> = vec![None; dim];
    let mut branching = Vec::new();
    for &j in allowed {
        let v = &logs[j];
        let support: Vec<usize> = (0..dim).filter(|&c| v[c] > 0).collect();
        match support.as_slice() {
            [c] if v[*c] == 1 => {
                units[*c].get_or_insert(j);
            }
            _ => branching.push(j),
        }
    }

    struct Search<'a> {
        logs: &'a [Vec<u64>],
        branching: &'a [usize],
        units: &'a [Option<usize>],
        dead: HashSet<Vec<u64>>,
        path: Vec<usize>,
    }

    impl Search<'_> {
        fn done(&self, rem: &[u64]) -> bool {
            rem.iter()
                .zip(self.units)
                .all(|(&x, u)| x == 0 || u.is_some())
        }

        // `start` keeps the chosen indices non-decreasing; the dead set is
        // only valid for a fixed start, so it is keyed on both.
        fn run(&mut self, rem: &mut Vec<u64>, start: usize) -> bool {
            if self.done(rem) {
                return true;
            }
            let mut key = rem.clone();
            key.push(start as u64);
            if self.dead.contains(&key) {
                return false;
            }
            for pos in start..self.branching.len() {
                let j = self.branching[pos];
                let g = &self.logs[j];
                if g.iter().zip(rem.iter()).all(|(x, y)| x <= y) {
                    rem.iter_mut().zip(g).for_each(|(y, x)| *y -= x);
                    self.path.push(j);
                    if self.run(rem, pos) {
                        return true;
                    }
                    self.path.pop();
                    rem.iter_mut().zip(g).for_each(|(y, x)| *y += x);
                }
            }
            self.dead.insert(key);
            false
        }
    }

    let mut search = Search {
        logs,
        branching: &branching,
        units: &units,
        dead: HashSet::new(),
        path: Vec::new(),
    };
    let mut rem = target.to_vec();
    if !search.run(&mut rem, 0) {
        return None;
    }
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &j in &search.path {
        *counts.entry(j).or_default() += 1;
    }
    for (c, &x) in rem.iter().enumerate() {
        if x > 0 {
            *counts.entry(units[c].expect("done() checked")).or_default() += x;
        }
    }
    let mut witness: Vec<(usize, u64)> = counts.into_iter().collect();
    witness.sort();
    Some(witness)
}

/// Generators of the canonical ideal: the minimal positive elements of `E`
/// with their `h, k` coordinates dropped. Sorted.
pub fn canonical_ideal_generators(ep: &ExponentPair) -> Result<Vec<GradedMonomial>> {
    let mut out: Vec<GradedMonomial> = minimal_positive(ep)?
        .iter()
        .map(EPhiElement::project)
        .collect();
    out.sort();
    Ok(out)
}

/// Outcome of [`is_gorenstein`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    /// The unique minimal positive element when the algebra is Gorenstein.
    pub witness: Option<EPhiElement>,
    pub minimal_count: usize,
    /// The minimal elements came from a box scan rather than the closed form
    /// (degenerate input).
    pub from_box_scan: bool,
}

/// Gorenstein exactly when `E` has a unique minimal positive element.
/// Degenerate pairs fall back to a box scan sized by [`BoxSpec::for_pair`].
pub fn is_gorenstein(ep: &ExponentPair) -> GorensteinReport {
    let (minimal, from_box_scan) = match minimal_positive(ep) {
        Ok(m) => (m, false),
        Err(_) => (oracle_minimal_positive(ep, &BoxSpec::for_pair(ep)), true),
    };
    let gorenstein = minimal.len() == 1;
    GorensteinReport {
        gorenstein,
        witness: gorenstein.then(|| minimal[0].clone()),
        minimal_count: minimal.len(),
        from_box_scan,
    }
}

/// Number of canonical-ideal generators, `Σ |H_i| - (n + 2)`, with shared
/// face points counted in both adjacent bases.
pub fn count_minimal(ep: &ExponentPair) -> Result<usize> {
    if !ep.is_non_degenerate() {
        return Err(Error::DegenerateInput);
    }
    let total: usize = hilbert_bases(&build_fan(ep))
        .iter()
        .map(|hb| hb.len())
        .sum();
    Ok(total - (ep.n() + 2))
}

/// Upper bound `a - l + 1`, `a = b q + l`, on the number of minimal positive
/// elements in one variable.
pub fn minimal_count_bound(a: u64, b: u64) -> Result<u64> {
    if a <= b {
        return Err(Error::NotApplicable("requires a > b"));
    }
    if b == 1 {
        return Err(Error::NotApplicable("requires b >= 2"));
    }
    if a.is_multiple_of(b) {
        return Err(Error::NotApplicable("requires b not dividing a"));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let l = a % b;
    Ok(a - l + 1)
}

/// Rank of the lattice spanned by the generators' exponent vectors.
pub fn krull_dimension(ep: &ExponentPair) -> usize {
    let logs: Vec<Vec<u64>> = generators(ep).iter().map(GradedMonomial::log).collect();
    linalg::rank(&logs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(a: &[u64], b: &[u64]) -> ExponentPair {
        ExponentPair::new(a, b).unwrap()
    }

    fn mono(m: &[u64], r: u64, s: u64) -> GradedMonomial {
        GradedMonomial::new(m.to_vec(), r, s)
    }

    fn sorted(mut v: Vec<GradedMonomial>) -> Vec<GradedMonomial> {
        v.sort();
        v
    }

    #[test]
    fn rendering() {
        assert_eq!(mono(&[6], 1, 3).to_string(), "x1^6*u*v^3");
        assert_eq!(mono(&[1, 0], 0, 0).to_string(), "x1");
        assert_eq!(mono(&[0, 2], 0, 1).to_string(), "x2^2*v");
        assert_eq!(mono(&[0], 0, 0).to_string(), "1");
    }

    #[test]
    fn golden_generators() {
        let gens = generators(&ep(&[5], &[2]));
        let expected = sorted(vec![
            mono(&[2], 0, 1),
            mono(&[6], 1, 3),
            mono(&[10], 2, 5),
            mono(&[5], 1, 0),
            mono(&[5], 1, 1),
            mono(&[5], 1, 2),
            mono(&[1], 0, 0),
        ]);
        assert_eq!(gens, expected);

        let gens = generators(&ep(&[1], &[1]));
        assert_eq!(
            gens,
            sorted(vec![
                mono(&[1], 0, 1),
                mono(&[1], 1, 1),
                mono(&[1], 1, 0),
                mono(&[1], 0, 0)
            ])
        );
    }

    #[test]
    fn generators_lie_in_the_algebra() {
        for (a, b) in [
            (vec![5], vec![2]),
            (vec![3, 2], vec![1, 3]),
            (vec![0, 4, 1], vec![3, 0, 1]),
        ] {
            let e = ep(&a, &b);
            assert!(generators(&e).iter().all(|g| g.is_in_algebra(&e)));
        }
    }

    #[test]
    fn minimality_of_generators() {
        assert!(check_minimality(&generators(&ep(&[5], &[2]))).is_minimal());
        assert!(check_minimality(&generators(&ep(&[3, 2], &[1, 3]))).is_minimal());
    }

    #[test]
    fn planted_redundancy_is_found() {
        let gens = vec![mono(&[1], 1, 0), mono(&[1], 0, 1), mono(&[2], 1, 1)];
        assert_eq!(
            check_minimality(&gens),
            Minimality::Redundant {
                index: 2,
                witness: vec![(0, 1), (1, 1)]
            }
        );
        // duplicates are redundant
        let gens = vec![mono(&[1], 1, 0), mono(&[1], 1, 0)];
        assert!(!check_minimality(&gens).is_minimal());
        // slack absorbed by a variable
        let gens = vec![mono(&[1], 0, 0), mono(&[5], 1, 0), mono(&[7], 1, 0)];
        assert_eq!(
            check_minimality(&gens),
            Minimality::Redundant {
                index: 2,
                witness: vec![(0, 2), (1, 1)]
            }
        );
    }

    #[test]
    fn canonical_generators() {
        assert_eq!(
            canonical_ideal_generators(&ep(&[5], &[2])).unwrap(),
            sorted(vec![
                mono(&[7], 1, 3),
                mono(&[11], 2, 5),
                mono(&[6], 1, 1),
                mono(&[6], 1, 2)
            ])
        );
        assert_eq!(
            canonical_ideal_generators(&ep(&[1], &[1])).unwrap(),
            vec![mono(&[2], 1, 1)]
        );
        assert_eq!(
            canonical_ideal_generators(&ep(&[2, 1], &[4, 2])),
            Err(Error::DegenerateInput)
        );
    }

    #[test]
    fn canonical_generators_are_interior() {
        let e = ep(&[3, 2], &[1, 3]);
        for g in canonical_ideal_generators(&e).unwrap() {
            for t in 0..e.n() {
                assert!(g.m[t] > (e.a()[t] * g.r).max(e.b()[t] * g.s));
            }
        }
    }

    #[test]
    fn gorenstein_cases() {
        assert!(!is_gorenstein(&ep(&[5], &[2])).gorenstein);
        let report = is_gorenstein(&ep(&[1], &[1]));
        assert!(report.gorenstein);
        assert_eq!(
            report.witness,
            Some(EPhiElement::from_vec(vec![1, 1, 1, 1, 2]))
        );
        assert!(is_gorenstein(&ep(&[7], &[7])).gorenstein);
        let degenerate = is_gorenstein(&ep(&[2, 1], &[4, 2]));
        assert!(degenerate.from_box_scan);
    }

    #[test]
    fn counts() {
        assert_eq!(count_minimal(&ep(&[5], &[2])), Ok(4));
        assert_eq!(count_minimal(&ep(&[1], &[1])), Ok(1));
        assert_eq!(count_minimal(&ep(&[3, 2], &[1, 3])), Ok(5));
        assert_eq!(
            count_minimal(&ep(&[2, 1], &[4, 2])),
            Err(Error::DegenerateInput)
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(minimal_count_bound(5, 2), Ok(5));
        assert_eq!(minimal_count_bound(7, 3), Ok(7));
        assert_eq!(minimal_count_bound(3, 2), Ok(3));
        assert!(matches!(
            minimal_count_bound(5, 1),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            minimal_count_bound(6, 3),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            minimal_count_bound(2, 5),
            Err(Error::NotApplicable(_))
        ));
        assert_eq!(
            minimal_count_bound(10, 4),
            Err(Error::NotCoprime { a: 10, b: 4 })
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(krull_dimension(&ep(&[5], &[2])), 3);
        assert_eq!(krull_dimension(&ep(&[1], &[1])), 3);
        assert_eq!(krull_dimension(&ep(&[3, 2], &[1, 3])), 4);
        assert_eq!(krull_dimension(&ep(&[0, 2, 1], &[1, 0, 1])), 5);
    }
}
