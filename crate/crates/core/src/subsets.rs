//! Parallel sweeps over all subsets of a small ground set.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::graph::EdgeSubset;
use crate::poly::{Exponent, TriPoly, Var};

/// Ground sets at least this large are split across threads.
const PARALLEL_FROM: usize = 14;

/// Count how many subsets map to each exponent triple.
pub(crate) fn histogram<F>(ground: usize, f: F) -> HashMap<Exponent, u64>
where
    F: Fn(EdgeSubset) -> Exponent + Sync,
{
    let total = 1u64 << ground;
    if ground < PARALLEL_FROM {
        let mut h = HashMap::new();
        for bits in 0..total {
            *h.entry(f(EdgeSubset::from_bits(bits))).or_insert(0u64) += 1;
        }
        return h;
    }
    let chunk = 1u64 << (PARALLEL_FROM - 2);
    (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut h = HashMap::new();
            for bits in c * chunk..((c + 1) * chunk).min(total) {
                *h.entry(f(EdgeSubset::from_bits(bits))).or_insert(0u64) += 1;
            }
            h
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// `sum count * (X-1)^a (Y-1)^b (Z-1)^c` over the histogram.
pub(crate) fn expand_binomials(h: &HashMap<Exponent, u64>) -> TriPoly {
    let mut cache: [Vec<TriPoly>; 3] = Default::default();
    for (slot, v) in Var::ALL.into_iter().enumerate() {
        let d = h.keys().map(|e| e[slot]).max().unwrap_or(0);
        cache[slot] = (0..=d).map(|k| TriPoly::pow_binomial(v, k)).collect();
    }
    let mut keys: Vec<_> = h.keys().copied().collect();
    keys.sort_unstable();
    let mut out = TriPoly::zero();
    for e in keys {
        let term = &(&cache[0][e[0] as usize] * &cache[1][e[1] as usize]) * &cache[2][e[2] as usize];
        out += &term.scale(&BigInt::from(h[&e]));
    }
    out
}
