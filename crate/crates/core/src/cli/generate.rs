//! Seeded random instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use axicover::hypergraph::HypergraphDoc;
use axicover::representation::PointSetDoc;
use axicover::{Error, PartitionedHypergraph, Result, SimpleGraph};

pub fn points(rng: &mut impl Rng, d: usize, ell: usize, count: usize, range: i64) -> Result<PointSetDoc> {
    if d == 0 || range <= 0 {
        return Err(Error::Contract("need d >= 1 and a positive range".into()));
    }
    let capacity = (range as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if (count as u128) > capacity {
        return Err(Error::Contract(format!("{count} distinct points do not fit in [0,{range})^{d}")));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: Vec<i64> = (0..d).map(|_| rng.random_range(0..range)).collect();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(PointSetDoc { d, ell, points: out })
}

/// Distinct random tuples with `part_sizes[i]` candidates in part `i`.
pub fn hypergraph(rng: &mut impl Rng, part_sizes: &[usize], edges: usize) -> Result<HypergraphDoc> {
    if part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(Error::Contract("every part needs at least one candidate vertex".into()));
    }
    let capacity = part_sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s as u128)).unwrap_or(u128::MAX);
    if (edges as u128) > capacity {
        return Err(Error::Contract(format!("{edges} distinct edges exceed the {capacity} possible")));
    }
    let mut seen = BTreeSet::new();
    let mut tuples = Vec::with_capacity(edges);
    while tuples.len() < edges {
        let t: Vec<usize> = part_sizes.iter().map(|&s| rng.random_range(0..s)).collect();
        if seen.insert(t.clone()) {
            tuples.push(t);
        }
    }
    Ok(PartitionedHypergraph::from_tuples(part_sizes.len(), &tuples)?.to_document())
}

pub fn graph(rng: &mut impl Rng, n: usize, edges: usize) -> Result<SimpleGraph> {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    if edges > all.len() {
        return Err(Error::Contract(format!("{edges} edges exceed the {} possible on {n} vertices", all.len())));
    }
    all.shuffle(rng);
    let mut chosen = all[..edges].to_vec();
    chosen.sort_unstable();
    SimpleGraph::new(n, &chosen)
}
