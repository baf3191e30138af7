//! `verify`: fast computations against the brute-force oracles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use intersection_algebra::fanalg::{normality_check, IntersectionSemigroup};
use intersection_algebra::oracle::{
    oracle_hilbert_basis, oracle_is_fundamental, oracle_members, oracle_minimal_positive,
    oracle_non_multiple_split, oracle_semigroup_closure, BoxSpec,
};
use intersection_algebra::{
    build_fan, cf_elements, count_minimal, fund_elements, generators, hilbert_bases,
    krull_dimension, minimal_positive, EPhiElement, Error, ExponentPair, GradedMonomial,
};
use serde_json::Value;

use crate::JobSpec;

/// Largest number of box elements a decomposition or closure scan may visit.
const SCAN_LIMIT: u128 = 200_000;
/// Box side for the generator closure, by number of variables.
const CLOSURE_SIDE: [u64; 3] = [6, 4, 3];
const NORMALITY_SIDE: u64 = 12;
const CF_MULTIPLIER: u64 = 4;

/// Outcome per check; `None` means skipped (input degenerate or box too large).
pub struct Verification(BTreeMap<&'static str, Option<bool>>);

impl Verification {
    pub fn passed(&self) -> bool {
        self.0.values().all(|v| *v != Some(false))
    }

    pub fn json(&self) -> Value {
        self.0
            .iter()
            .map(|(k, v)| (k.to_string(), v.map_or(Value::Null, Value::Bool)))
            .collect()
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.0 {
            let verdict = match v {
                Some(true) => "agree",
                Some(false) => "DISAGREE",
                None => "skipped",
            };
            let _ = writeln!(out, "{k}: {verdict}");
        }
        out
    }
}

fn max_entry(ep: &ExponentPair) -> u64 {
    ep.a().iter().chain(ep.b()).copied().max().unwrap_or(1)
}

fn box_size(ep: &ExponentPair, rs: u64, m: u64) -> u128 {
    u128::from(rs + 1).pow(2) * u128::from(m + 1).pow(ep.n() as u32)
}

fn fund_and_cf(ep: &ExponentPair, rs_cap: u64) -> (Option<bool>, Option<bool>) {
    let rs = (BoxSpec::for_pair(ep).rs_bound / 2).min(rs_cap);
    let m = max_entry(ep) * rs;
    if box_size(ep, rs, m) > SCAN_LIMIT {
        return (None, None);
    }
    let fund: Vec<Vec<u64>> = oracle_members(ep, rs, m)
        .into_iter()
        .filter(|v| oracle_is_fundamental(ep, v))
        .collect();
    let cf: Vec<EPhiElement> = fund
        .iter()
        .filter(|v| (2..=CF_MULTIPLIER).all(|c| oracle_non_multiple_split(ep, v, c).is_none()))
        .cloned()
        .map(EPhiElement::from_vec)
        .collect();
    let fund: Vec<EPhiElement> = fund.into_iter().map(EPhiElement::from_vec).collect();
    (
        Some(fund == fund_elements(ep).elements()),
        Some(cf == cf_elements(ep)),
    )
}

fn closure(ep: &ExponentPair, rs_cap: u64, m_bound: Option<u64>) -> Option<bool> {
    let rs = CLOSURE_SIDE
        .get(ep.n() - 1)
        .copied()
        .unwrap_or(2)
        .min(rs_cap);
    let m = m_bound.unwrap_or(max_entry(ep) * rs);
    if box_size(ep, rs, m) > SCAN_LIMIT {
        return None;
    }
    let logs: Vec<Vec<u64>> = generators(ep).iter().map(GradedMonomial::log).collect();
    let bx = BoxSpec {
        rs_bound: rs,
        m_bound: m,
        multiplier_bound: 1,
    };
    let n = ep.n();
    let members: BTreeSet<Vec<u64>> = oracle_members(ep, rs, m)
        .into_iter()
        .map(|v| {
            let mut key: Vec<u64> = (0..n).map(|t| v[4 + 3 * t]).collect();
            key.extend([v[0], v[1]]);
            key
        })
        .collect();
    Some(oracle_semigroup_closure(&logs, &bx) == members)
}

pub fn run(job: &JobSpec) -> Result<Verification, Error> {
    let ep = &job.pair;
    let rs = job.options.rs_bound;
    let bx = BoxSpec {
        rs_bound: rs,
        m_bound: job.options.m_bound.unwrap_or(max_entry(ep) * rs + 1),
        multiplier_bound: job.options.multiplier_bound,
    };
    let mut checks = BTreeMap::new();

    let fan = build_fan(ep);
    let mut bases_agree = true;
    for (cone, hb) in fan.cones.iter().zip(hilbert_bases(&fan)) {
        bases_agree &= oracle_hilbert_basis(cone, &bx)? == hb.points;
    }
    checks.insert("hilbert_bases", Some(bases_agree));

    if ep.is_non_degenerate() {
        let oracle = oracle_minimal_positive(ep, &bx);
        checks.insert("minimal_positive", Some(oracle == minimal_positive(ep)?));
        checks.insert("count", Some(oracle.len() == count_minimal(ep)?));
    } else {
        checks.insert("minimal_positive", None);
        checks.insert("count", None);
    }

    let (fund, cf) = fund_and_cf(ep, rs);
    checks.insert("fund", fund);
    checks.insert("cf", cf);
    checks.insert("generator_closure", closure(ep, rs, job.options.m_bound));
    let normal = normality_check(
        &IntersectionSemigroup(ep),
        rs.min(NORMALITY_SIDE),
        bx.multiplier_bound.max(2),
    )?;
    checks.insert("normality", Some(normal.is_saturated()));
    checks.insert("dimension", Some(krull_dimension(ep) == ep.n() + 2));
    Ok(Verification(checks))
}
