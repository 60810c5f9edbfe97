//! Part labelings: which coordinates are free for the subspaces of each part.

use crate::error::{Error, Result};

/// Binomial coefficient, saturating at `usize::MAX`.
pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// All `ell`-subsets of `0..d` in lexicographic order.
pub fn subsets(d: usize, ell: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(ell);
    fn rec(start: usize, d: usize, ell: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == ell {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            if d - i < ell - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, d, ell, cur, out);
            cur.pop();
        }
    }
    rec(0, d, ell, &mut current, &mut out);
    out
}

/// Bijection from parts to the `ell`-subsets of the `d` coordinates.
///
/// Coordinates are 0-based internally; documents use 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartLabeling {
    d: usize,
    ell: usize,
    free_sets: Vec<Vec<usize>>,
}

fn check_dims(d: usize, ell: usize) -> Result<()> {
    if d < 2 || ell < 1 || ell > d - 1 {
        return Err(Error::InvalidLabeling(format!(
            "need d >= 2 and 1 <= ell <= d-1, got d={d}, ell={ell}"
        )));
    }
    Ok(())
}

impl PartLabeling {
    /// Part `i` gets the `i`-th subset in lexicographic order; for `ell = 1`
    /// that is part `i` ↔ `{i}`.
    pub fn canonical(d: usize, ell: usize) -> Result<Self> {
        check_dims(d, ell)?;
        Ok(PartLabeling {
            d,
            ell,
            free_sets: subsets(d, ell),
        })
    }

    /// Validates that `free_sets` (0-based) is a bijection onto the
    /// `ell`-subsets of `0..d`.
    pub fn new(d: usize, ell: usize, free_sets: Vec<Vec<usize>>) -> Result<Self> {
        check_dims(d, ell)?;
        let expected = binomial(d, ell);
        if free_sets.len() != expected {
            return Err(Error::InvalidLabeling(format!(
                "{} parts labeled, but C({d},{ell}) = {expected}",
                free_sets.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for (part, set) in free_sets.iter().enumerate() {
            if set.len() != ell {
                return Err(Error::InvalidLabeling(format!(
                    "part {} has {} free coordinates, expected {ell}",
                    part + 1,
                    set.len()
                )));
            }
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidLabeling(format!(
                    "free set of part {} is not strictly increasing",
                    part + 1
                )));
            }
            if set.iter().any(|&c| c >= d) {
                return Err(Error::InvalidLabeling(format!(
                    "free set of part {} exceeds dimension {d}",
                    part + 1
                )));
            }
            if !seen.insert(set.clone()) {
                return Err(Error::InvalidLabeling(format!(
                    "free set of part {} is used twice",
                    part + 1
                )));
            }
        }
        Ok(PartLabeling { d, ell, free_sets })
    }

    /// Reads the 1-based document form. The dimension is the largest listed
    /// coordinate, since a bijection onto all subsets covers every coordinate.
    pub fn from_document(sets: &[Vec<usize>]) -> Result<Self> {
        let Some(first) = sets.first() else {
            return Err(Error::InvalidLabeling("empty labeling".into()));
        };
        let ell = first.len();
        let mut d = 0;
        let mut zero_based = Vec::with_capacity(sets.len());
        for set in sets {
            let mut s = Vec::with_capacity(set.len());
            for &c in set {
                if c == 0 {
                    return Err(Error::InvalidLabeling("coordinates are 1-based".into()));
                }
                d = d.max(c);
                s.push(c - 1);
            }
            zero_based.push(s);
        }
        PartLabeling::new(d, ell, zero_based)
    }

    pub fn to_document(&self) -> Vec<Vec<usize>> {
        self.free_sets
            .iter()
            .map(|s| s.iter().map(|c| c + 1).collect())
            .collect()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn part_count(&self) -> usize {
        self.free_sets.len()
    }

    pub fn free_set(&self, part: usize) -> &[usize] {
        &self.free_sets[part]
    }

    pub fn is_free(&self, part: usize, axis: usize) -> bool {
        self.free_sets[part].binary_search(&axis).is_ok()
    }

    /// Parts whose subspaces have `axis` free: the cut associated with `axis`.
    pub fn cut_mask(&self, axis: usize) -> Vec<bool> {
        (0..self.part_count())
            .map(|p| self.is_free(p, axis))
            .collect()
    }

    /// Coordinates fixed for subspaces of `part`, ascending.
    pub fn fixed_axes(&self, part: usize) -> Vec<usize> {
        (0..self.d).filter(|&a| !self.is_free(part, a)).collect()
    }

    pub fn is_canonical(&self) -> bool {
        self.free_sets == subsets(self.d, self.ell)
    }

    /// Labeling that maps part `i` to subset `order[i]` of the lexicographic
    /// subset list.
    pub(crate) fn from_permutation(d: usize, ell: usize, all: &[Vec<usize>], order: &[usize]) -> Self {
        PartLabeling {
            d,
            ell,
            free_sets: order.iter().map(|&i| all[i].clone()).collect(),
        }
    }
}
