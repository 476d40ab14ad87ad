//! Direct search for zero-error codes, one message-count triple at a time.
//!
//! A code for `(mu0, mu1, mu2)` is a list of `mu0` blocks `(C1, C2)` with
//! `|C1| = mu1`, `|C2| = mu2` such that the output sets of all
//! `mu0 * mu1 * mu2` codeword pairs are pairwise disjoint. Blocks are cached
//! per size; each triple is decided on its own, so downward closure of the
//! result is a property to check, not an assumption.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::codec::oracle_decodable;
use crate::error::{Error, Result};
use crate::mac::{Channel, Code, MessageSpec, MuTriple, Sequence};
use crate::region::{Meter, RateRegion};

/// Triples decided by the direct search, with a witness code for each
/// achievable one. Triples excluded by counting alone are not listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRegion {
    pub region: RateRegion,
    pub tested: BTreeMap<MuTriple, Option<Code>>,
}

struct Block {
    c1: Vec<usize>,
    c2: Vec<usize>,
    outputs: Vec<usize>,
}

struct Outputs {
    s1: Vec<Sequence>,
    s2: Vec<Sequence>,
    /// Sorted output ids for each codeword pair, row-major in `(s1, s2)`.
    sets: Vec<Vec<usize>>,
    distinct: usize,
}

impl Outputs {
    fn new(channel: &Channel, n: usize) -> Result<Outputs> {
        let s1 = channel.x1_sequences(n);
        let s2 = channel.x2_sequences(n);
        let noise = channel.noise_sequences(n);
        let mut ids: BTreeMap<Sequence, usize> = BTreeMap::new();
        let mut sets = Vec::with_capacity(s1.len() * s2.len());
        for a in &s1 {
            for b in &s2 {
                let mut set = Vec::with_capacity(noise.len());
                for w in &noise {
                    let y = channel.transmit(a, b, w)?;
                    let next = ids.len();
                    set.push(*ids.entry(y).or_insert(next));
                }
                set.sort_unstable();
                set.dedup();
                sets.push(set);
            }
        }
        Ok(Outputs {
            s1,
            s2,
            sets,
            distinct: ids.len(),
        })
    }

    fn of(&self, a: usize, b: usize) -> &[usize] {
        &self.sets[a * self.s2.len() + b]
    }
}

fn combinations(items: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=items - (k - cur.len()) {
            cur.push(i);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    if k <= items {
        go(items, k, 0, &mut cur, &mut out);
    }
    out
}

/// Every block of the given size. One side is fixed as a whole combination,
/// the other grows one codeword at a time while outputs stay disjoint.
fn blocks(out: &Outputs, k1: usize, k2: usize, meter: &Meter) -> Result<Vec<Block>> {
    let (n1, n2) = (out.s1.len(), out.s2.len());
    let fix_first = combinations(n1, k1).len() <= combinations(n2, k2).len();
    let (fixed_count, fixed_k, grow_count, grow_k) = if fix_first { (n1, k1, n2, k2) } else { (n2, k2, n1, k1) };
    let pair = |f: usize, g: usize| if fix_first { out.of(f, g) } else { out.of(g, f) };

    let mut found = Vec::new();
    for fixed in combinations(fixed_count, fixed_k) {
        let mut used = vec![false; out.distinct];
        let mut grown = Vec::with_capacity(grow_k);
        grow(
            &pair,
            &fixed,
            grow_count,
            grow_k,
            0,
            &mut grown,
            &mut used,
            meter,
            &mut |g| {
                let (c1, c2) = if fix_first {
                    (fixed.clone(), g.to_vec())
                } else {
                    (g.to_vec(), fixed.clone())
                };
                let mut outputs: Vec<usize> = c1
                    .iter()
                    .flat_map(|&a| c2.iter().flat_map(move |&b| out.of(a, b).iter().copied()))
                    .collect();
                outputs.sort_unstable();
                found.push(Block { c1, c2, outputs });
            },
        )?;
    }
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn grow<'a>(
    pair: &impl Fn(usize, usize) -> &'a [usize],
    fixed: &[usize],
    count: usize,
    k: usize,
    start: usize,
    grown: &mut Vec<usize>,
    used: &mut Vec<bool>,
    meter: &Meter,
    emit: &mut impl FnMut(&[usize]),
) -> Result<()> {
    if grown.len() == k {
        emit(grown);
        return Ok(());
    }
    for g in start..count {
        if count - g < k - grown.len() {
            break;
        }
        meter.tick(1)?;
        // The fixed codewords against g must not collide with each other
        // or with anything already placed.
        let mut placed = Vec::new();
        let mut clash = false;
        'outer: for &f in fixed {
            for &y in pair(f, g) {
                if used[y] {
                    clash = true;
                    break 'outer;
                }
                used[y] = true;
                placed.push(y);
            }
        }
        if !clash {
            grown.push(g);
            grow(pair, fixed, count, k, g + 1, grown, used, meter, emit)?;
            grown.pop();
        }
        for y in placed {
            used[y] = false;
        }
    }
    Ok(())
}

/// Finds `need` blocks with pairwise disjoint outputs, in increasing index
/// order.
fn disjoint_blocks(blocks: &[Block], need: usize, distinct: usize, meter: &Meter) -> Result<Option<Vec<usize>>> {
    fn go(
        blocks: &[Block],
        cands: &[usize],
        need: usize,
        room: usize,
        smallest: usize,
        chosen: &mut Vec<usize>,
        meter: &Meter,
    ) -> Result<bool> {
        if chosen.len() == need {
            return Ok(true);
        }
        let left = need - chosen.len();
        if cands.len() < left || room < left * smallest {
            return Ok(false);
        }
        for (i, &c) in cands.iter().enumerate() {
            if cands.len() - i < left {
                break;
            }
            meter.tick(1)?;
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&d| sorted_disjoint(&blocks[c].outputs, &blocks[d].outputs))
                .collect();
            chosen.push(c);
            if go(
                blocks,
                &next,
                need,
                room - blocks[c].outputs.len(),
                smallest,
                chosen,
                meter,
            )? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    let smallest = blocks.iter().map(|b| b.outputs.len()).min().unwrap_or(0);
    let all: Vec<usize> = (0..blocks.len()).collect();
    let mut chosen = Vec::with_capacity(need);
    if go(blocks, &all, need, distinct, smallest, &mut chosen, meter)? {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn sorted_disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn witness(out: &Outputs, n: usize, mu: MuTriple, blocks: &[Block], chosen: &[usize]) -> Result<Code> {
    let mut gamma1 = BTreeMap::new();
    let mut gamma2 = BTreeMap::new();
    for (m0, &b) in chosen.iter().enumerate() {
        for (m1, &a) in blocks[b].c1.iter().enumerate() {
            gamma1.insert((m0 + 1, m1 + 1), out.s1[a].clone());
        }
        for (m2, &x) in blocks[b].c2.iter().enumerate() {
            gamma2.insert((m0 + 1, m2 + 1), out.s2[x].clone());
        }
    }
    Ok(Code {
        spec: MessageSpec::new(n, mu)?,
        gamma1,
        gamma2,
        decoder: None,
    })
}

/// Decides every triple with components at most `mu_bound` (default `|Y|^n`)
/// by searching encoders directly.
pub fn oracle_region(channel: &Channel, n: usize, mu_bound: Option<usize>, budget: u128) -> Result<OracleRegion> {
    if n == 0 {
        return Err(Error::InvalidBounds("blocklength must be positive".into()));
    }
    if mu_bound == Some(0) || budget == 0 {
        return Err(Error::InvalidBounds("bound and budget must be positive".into()));
    }
    let y_count = channel.y_alphabet().len().saturating_pow(n as u32);
    let bound = mu_bound.unwrap_or(y_count);
    let meter = Meter::new(budget);
    meter.tick(
        (channel.x1_alphabet().len() * channel.x2_alphabet().len() * channel.w_alphabet().len())
            .saturating_pow(n as u32) as u64,
    )?;
    let out = Outputs::new(channel, n)?;

    // Counting: distinct codeword pairs, and one private output per triple.
    let mut triples = Vec::new();
    for mu0 in 1..=bound {
        for mu1 in 1..=bound.min(out.s1.len()) {
            for mu2 in 1..=bound.min(out.s2.len()) {
                let mu = MuTriple::new(mu0, mu1, mu2);
                if mu.product() <= out.distinct as u128 {
                    triples.push(mu);
                }
            }
        }
    }

    let mut sizes: Vec<(usize, usize)> = triples.iter().map(|t| (t.mu1, t.mu2)).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let cached: Vec<Result<Vec<Block>>> = sizes.par_iter().map(|&(k1, k2)| blocks(&out, k1, k2, &meter)).collect();
    let mut cache = BTreeMap::new();
    for (size, b) in sizes.into_iter().zip(cached) {
        cache.insert(size, b?);
    }

    let decided: Vec<Result<Option<Code>>> = triples
        .par_iter()
        .map(|&mu| {
            let bl = &cache[&(mu.mu1, mu.mu2)];
            match disjoint_blocks(bl, mu.mu0, out.distinct, &meter)? {
                None => Ok(None),
                Some(chosen) => {
                    let code = witness(&out, n, mu, bl, &chosen)?;
                    if !oracle_decodable(channel, &code)? {
                        return Err(Error::Internal(format!("oracle witness for {mu} is not decodable")));
                    }
                    Ok(Some(code))
                }
            }
        })
        .collect();

    let mut tested = BTreeMap::new();
    for (mu, d) in triples.into_iter().zip(decided) {
        tested.insert(mu, d?);
    }
    let points = tested.iter().filter(|(_, c)| c.is_some()).map(|(mu, _)| *mu).collect();
    Ok(OracleRegion {
        region: RateRegion::from_points(n, points),
        tested,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mac::presets;

    #[test]
    fn adder_single_use() {
        let r = oracle_region(&presets::binary_adder(), 1, None, 1_000_000).unwrap();
        assert_eq!(
            r.region.maximal_points(),
            vec![MuTriple::new(1, 1, 2), MuTriple::new(1, 2, 1), MuTriple::new(3, 1, 1)]
        );
        assert!(r.region.is_downward_closed());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 4).len(), 0);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn witnesses_decode() {
        let ch = presets::pentagon();
        let r = oracle_region(&ch, 1, None, 1_000_000).unwrap();
        assert_eq!(
            r.region.maximal_points(),
            vec![MuTriple::new(1, 2, 1), MuTriple::new(2, 1, 1)]
        );
        for code in r.tested.values().flatten() {
            assert!(oracle_decodable(&ch, code).unwrap());
        }
    }

    #[test]
    fn budget_applies() {
        assert!(matches!(
            oracle_region(&presets::pentagon(), 2, None, 50),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
