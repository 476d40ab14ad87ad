use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::mac::{Channel, CooperationStructure, Sequence, StructureEntry};
use crate::region::Bounds;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul(n - i) {
            Some(v) => acc = v / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

fn subset_count(items: usize, max_size: usize) -> u128 {
    (1..=max_size.min(items))
        .map(|j| binomial(items as u128, j as u128))
        .fold(0u128, u128::saturating_add)
}

/// Number of canonical structures with at most `max_u` distinct pairs of
/// nonempty input sets of size at most `max_set`.
pub fn census(channel: &Channel, n: usize, max_u: usize, max_set: usize) -> u128 {
    let s1 = channel.x1_alphabet().len().saturating_pow(n as u32);
    let s2 = channel.x2_alphabet().len().saturating_pow(n as u32);
    let pairs = subset_count(s1, max_set).saturating_mul(subset_count(s2, max_set));
    (1..=(max_u as u128).min(pairs))
        .map(|k| binomial(pairs, k))
        .try_fold(0u128, |acc, c| {
            let next = acc.saturating_add(c);
            // Stop once saturated; the tail can only add more.
            if next == u128::MAX {
                Err(next)
            } else {
                Ok(next)
            }
        })
        .unwrap_or_else(|v| v)
}

fn subsets(items: &[Sequence], max_size: usize) -> Vec<BTreeSet<Sequence>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        items: &[Sequence],
        start: usize,
        max_size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<Sequence>>,
    ) {
        for i in start..items.len() {
            current.push(i);
            out.push(current.iter().map(|&j| items[j].clone()).collect());
            if current.len() < max_size {
                go(items, i + 1, max_size, current, out);
            }
            current.pop();
        }
    }
    go(items, 0, max_size, &mut current, &mut out);
    out.sort();
    out
}

/// Streams canonical structures: every family of `k <= max_u` distinct
/// `(A, B)` pairs exactly once, pairs taken in sorted order, labels `u1..uk`.
pub struct StructureIter {
    n: usize,
    pairs: Vec<(BTreeSet<Sequence>, BTreeSet<Sequence>)>,
    max_k: usize,
    combo: Vec<usize>,
}

impl StructureIter {
    fn advance(&mut self) -> bool {
        let p = self.pairs.len();
        let k = self.combo.len();
        if k == 0 {
            if p == 0 || self.max_k == 0 {
                return false;
            }
            self.combo.push(0);
            return true;
        }
        // Next combination of the same size, else the first of size k + 1.
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.combo[i] < p - (k - i) {
                self.combo[i] += 1;
                for j in i + 1..k {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return true;
            }
        }
        if k < self.max_k {
            self.combo = (0..=k).collect();
            return true;
        }
        false
    }
}

impl Iterator for StructureIter {
    type Item = CooperationStructure;

    fn next(&mut self) -> Option<CooperationStructure> {
        if !self.advance() {
            self.combo.clear();
            self.max_k = 0;
            return None;
        }
        let entries = self
            .combo
            .iter()
            .enumerate()
            .map(|(i, &c)| StructureEntry {
                label: format!("u{}", i + 1),
                a: self.pairs[c].0.clone(),
                b: self.pairs[c].1.clone(),
            })
            .collect();
        Some(CooperationStructure::new(self.n, entries).expect("canonical structures are valid"))
    }
}

/// All canonical cooperation structures within `bounds`, refusing when their
/// number exceeds the budget.
pub fn enumerate_structures(channel: &Channel, n: usize, bounds: &Bounds) -> Result<StructureIter> {
    bounds.validate()?;
    if n == 0 {
        return Err(Error::InvalidBounds("blocklength must be positive".into()));
    }
    let (max_u, max_set) = bounds.resolved(channel, n);
    let needed = census(channel, n, max_u, max_set);
    if needed > bounds.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: bounds.budget,
        });
    }
    let a_sets = subsets(&channel.x1_sequences(n), max_set);
    let b_sets = subsets(&channel.x2_sequences(n), max_set);
    let pairs: Vec<_> = a_sets
        .iter()
        .flat_map(|a| b_sets.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    Ok(StructureIter {
        n,
        max_k: max_u.min(pairs.len()),
        pairs,
        combo: Vec::new(),
    })
}
