#![allow(dead_code)]

use std::collections::BTreeMap;

use intersection_algebra::oracle::oracle_members;
use intersection_algebra::ExponentPair;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ep(a: &[u64], b: &[u64]) -> ExponentPair {
    ExponentPair::new(a, b).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random pair with `1 ≤ n ≤ max_n` and entries in `0..=max_entry`, never
/// both zero at one index.
pub fn random_pair(rng: &mut ChaCha8Rng, max_n: usize, max_entry: u64) -> ExponentPair {
    let n = rng.gen_range(1..=max_n);
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    while a.len() < n {
        let (x, y) = (rng.gen_range(0..=max_entry), rng.gen_range(0..=max_entry));
        if (x, y) != (0, 0) {
            a.push(x);
            b.push(y);
        }
    }
    ep(&a, &b)
}

pub fn random_non_degenerate(rng: &mut ChaCha8Rng, max_n: usize, max_entry: u64) -> ExponentPair {
    loop {
        let e = random_pair(rng, max_n, max_entry);
        if e.is_non_degenerate() {
            return e;
        }
    }
}

/// Every pair with `n ≤ max_n` and entries in `min_entry..=max_entry`, up to
/// reordering of the variables.
pub fn sweep(max_n: usize, min_entry: u64, max_entry: u64) -> Vec<ExponentPair> {
    let singles: Vec<(u64, u64)> = (min_entry..=max_entry)
        .flat_map(|x| (min_entry..=max_entry).map(move |y| (x, y)))
        .filter(|&p| p != (0, 0))
        .collect();
    let mut tuples: Vec<Vec<(u64, u64)>> = vec![vec![]];
    let mut seen = BTreeMap::new();
    for _ in 0..max_n {
        tuples = tuples
            .iter()
            .flat_map(|t| {
                singles.iter().map(move |&p| {
                    let mut t = t.clone();
                    t.push(p);
                    t
                })
            })
            .collect();
        for t in &tuples {
            let (a, b): (Vec<u64>, Vec<u64>) = t.iter().copied().unzip();
            let e = ep(&a, &b);
            seen.entry((e.a().to_vec(), e.b().to_vec())).or_insert(e);
        }
    }
    seen.into_values().collect()
}

/// Full solution vectors inside a box, from the defining inequalities.
pub fn members_in_box(e: &ExponentPair, rs: u64, m_bound: u64) -> Vec<Vec<u64>> {
    oracle_members(e, rs, m_bound)
}

/// Lattice-point counting series keyed by `(r, s, m_1, ..., m_n)`, total
/// degree at most `cap`.
pub fn counting_series(e: &ExponentPair, cap: u64) -> BTreeMap<Vec<u64>, i64> {
    let n = e.n();
    members_in_box(e, cap, cap)
        .into_iter()
        .map(|v| {
            let mut key = vec![v[0], v[1]];
            key.extend((0..n).map(|t| v[4 + 3 * t]));
            key
        })
        .filter(|k| k.iter().sum::<u64>() <= cap)
        .map(|k| (k, 1))
        .collect()
}
