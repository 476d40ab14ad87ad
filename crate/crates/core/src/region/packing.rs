//! Region computation by packing single-value structures.
//!
//! A pair `(A, B)` is *separable* when both conditional overlap partitions of
//! its one-value structure are all singletons, i.e. the output sets
//! `O(a, b)` over `A x B` are pairwise disjoint. Restricting any structure to
//! one auxiliary value per `[[U|Y]]*` cell and one input per conditional cell
//! yields a family of separable pairs with pairwise disjoint outputs and the
//! same cuboid; conversely such a family of `k` pairs of sizes `(m1, m2)` has
//! cuboid exactly `(k, m1, m2)`. So the union of cuboids equals the set of
//! `(k, m1, m2)` with `k` at most the largest disjoint packing of separable
//! `(m1, m2)`-pairs, capped at `max_u`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::mac::{Channel, CooperationStructure, MuTriple, Sequence, StructureEntry};
use crate::region::{insert_corner, rate_cuboid, Bounds, Meter, RateRegion, Strategy, StructureRegion};

fn index_sequences(alphabet: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..alphabet).map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}

/// Output sets `O(a, b)` for every pair of input sequences, as bit sets over
/// lexicographically indexed output sequences.
struct OutputTable {
    s1: Vec<Sequence>,
    s2: Vec<Sequence>,
    y_count: usize,
    sets: Vec<Bitset>,
}

impl OutputTable {
    fn new(channel: &Channel, n: usize, meter: &Meter) -> Result<OutputTable> {
        let (q1, q2, qw, qy) = (
            channel.x1_alphabet().len(),
            channel.x2_alphabet().len(),
            channel.w_alphabet().len(),
            channel.y_alphabet().len(),
        );
        let i1 = index_sequences(q1, n);
        let i2 = index_sequences(q2, n);
        let iw = index_sequences(qw, n);
        let y_count = qy.checked_pow(n as u32).ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget: meter.limit,
        })?;
        meter.tick((i1.len() * i2.len()) as u64)?;
        let mut sets = Vec::with_capacity(i1.len() * i2.len());
        for a in &i1 {
            for b in &i2 {
                let mut set = Bitset::new(y_count);
                for w in &iw {
                    let mut y = 0usize;
                    for k in 0..n {
                        y = y * qy + channel.index_output(a[k], b[k], w[k]);
                    }
                    set.insert(y);
                }
                sets.push(set);
            }
        }
        Ok(OutputTable {
            s1: channel.x1_sequences(n),
            s2: channel.x2_sequences(n),
            y_count,
            sets,
        })
    }

    fn get(&self, a: usize, b: usize) -> &Bitset {
        &self.sets[a * self.s2.len() + b]
    }
}

#[derive(Clone, Debug)]
struct Pair {
    a: Vec<usize>,
    b: Vec<usize>,
    out: Bitset,
}

struct PairSearch<'a> {
    table: &'a OutputTable,
    max_set: usize,
    meter: &'a Meter,
    found: Vec<Pair>,
}

impl PairSearch<'_> {
    /// Grows `A`. `unions[b]` is `O(A, b)` for each still-admissible `b`.
    fn grow_a(&mut self, start: usize, a: &mut Vec<usize>, unions: &[(usize, Bitset)]) -> Result<()> {
        for i in start..self.table.s1.len() {
            self.meter.tick(1)?;
            let next: Vec<(usize, Bitset)> = unions
                .iter()
                .filter(|(b, u)| u.is_disjoint(self.table.get(i, *b)))
                .map(|(b, u)| {
                    let mut u = u.clone();
                    u.union_with(self.table.get(i, *b));
                    (*b, u)
                })
                .collect();
            if next.is_empty() {
                continue;
            }
            a.push(i);
            let total = Bitset::new(self.table.y_count);
            self.grow_b(a, &next, 0, &mut Vec::new(), total)?;
            if a.len() < self.max_set {
                self.grow_a(i + 1, a, &next)?;
            }
            a.pop();
        }
        Ok(())
    }

    /// Grows `B` among admissible columns; a new `b` must have `O(A, b)`
    /// disjoint from everything already produced.
    fn grow_b(
        &mut self,
        a: &[usize],
        columns: &[(usize, Bitset)],
        start: usize,
        b: &mut Vec<usize>,
        total: Bitset,
    ) -> Result<()> {
        for idx in start..columns.len() {
            let (col, out) = &columns[idx];
            if !out.is_disjoint(&total) {
                continue;
            }
            self.meter.tick(1)?;
            let mut next_total = out.clone();
            next_total.union_with(&total);
            b.push(*col);
            self.found.push(Pair {
                a: a.to_vec(),
                b: b.clone(),
                out: next_total.clone(),
            });
            if b.len() < self.max_set {
                self.grow_b(a, columns, idx + 1, b, next_total)?;
            }
            b.pop();
        }
        Ok(())
    }
}

fn separable_pairs(table: &OutputTable, max_set: usize, meter: &Meter) -> Result<Vec<Pair>> {
    let mut search = PairSearch {
        table,
        max_set,
        meter,
        found: Vec::new(),
    };
    let empty: Vec<(usize, Bitset)> = (0..table.s2.len()).map(|b| (b, Bitset::new(table.y_count))).collect();
    search.grow_a(0, &mut Vec::new(), &empty)?;
    Ok(search.found)
}

/// Largest subfamily of pairwise disjoint sets, stopping early at `cap`.
fn max_disjoint(sets: &[Bitset], cap: usize, meter: &Meter) -> Result<Vec<usize>> {
    struct Search<'a> {
        sets: &'a [Bitset],
        cap: usize,
        meter: &'a Meter,
        best: Vec<usize>,
    }
    impl Search<'_> {
        fn run(&mut self, cands: &[usize], chosen: &mut Vec<usize>) -> Result<()> {
            self.meter.tick(1)?;
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            if self.best.len() >= self.cap || chosen.len() + cands.len() <= self.best.len() {
                return Ok(());
            }
            // Volume bound: the remaining outputs fit at most this many sets.
            if let Some(first) = cands.first() {
                let mut avail = self.sets[*first].clone();
                let mut smallest = usize::MAX;
                for &c in cands {
                    avail.union_with(&self.sets[c]);
                    smallest = smallest.min(self.sets[c].len());
                }
                if chosen.len() + avail.len() / smallest.max(1) <= self.best.len() {
                    return Ok(());
                }
            }
            for (i, &c) in cands.iter().enumerate() {
                if chosen.len() + (cands.len() - i) <= self.best.len() {
                    break;
                }
                let next: Vec<usize> = cands[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&d| self.sets[d].is_disjoint(&self.sets[c]))
                    .collect();
                chosen.push(c);
                self.run(&next, chosen)?;
                chosen.pop();
                if self.best.len() >= self.cap {
                    break;
                }
            }
            Ok(())
        }
    }
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].len(), i));
    let mut search = Search {
        sets,
        cap,
        meter,
        best: Vec::new(),
    };
    search.run(&order, &mut Vec::new())?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

fn to_structure(table: &OutputTable, n: usize, family: &[&Pair]) -> CooperationStructure {
    let entries = family
        .iter()
        .enumerate()
        .map(|(i, p)| StructureEntry {
            label: format!("u{}", i + 1),
            a: p.a.iter().map(|&x| table.s1[x].clone()).collect(),
            b: p.b.iter().map(|&x| table.s2[x].clone()).collect(),
        })
        .collect();
    CooperationStructure::new(n, entries).expect("disjoint separable pairs form a valid structure")
}

pub(crate) fn packing_region(channel: &Channel, n: usize, bounds: &Bounds) -> Result<StructureRegion> {
    let (max_u, max_set) = bounds.resolved(channel, n);
    let meter = Meter::new(bounds.budget);
    let table = OutputTable::new(channel, n, &meter)?;
    let pairs = separable_pairs(&table, max_set, &meter)?;

    // Group by sizes; pairs with equal output sets are interchangeable.
    let mut groups: BTreeMap<(usize, usize), Vec<&Pair>> = BTreeMap::new();
    let mut seen: BTreeSet<((usize, usize), &Bitset)> = BTreeSet::new();
    for p in &pairs {
        let key = (p.a.len(), p.b.len());
        if seen.insert((key, &p.out)) {
            groups.entry(key).or_default().push(p);
        }
    }

    let groups: Vec<((usize, usize), Vec<&Pair>)> = groups.into_iter().collect();
    let packings: Vec<Result<Vec<usize>>> = groups
        .par_iter()
        .map(|(_, members)| {
            let sets: Vec<Bitset> = members.iter().map(|p| p.out.clone()).collect();
            max_disjoint(&sets, max_u, &meter)
        })
        .collect();

    let mut corners: Vec<(MuTriple, CooperationStructure)> = Vec::new();
    for ((sizes, members), packing) in groups.iter().zip(packings) {
        let packing = packing?;
        let family: Vec<&Pair> = packing.iter().map(|&i| members[i]).collect();
        let mu = MuTriple::new(family.len(), sizes.0, sizes.1);
        if corners.iter().any(|(c, _)| mu.le(c)) {
            continue;
        }
        let structure = to_structure(&table, n, &family);
        let cuboid = rate_cuboid(channel, &structure, bounds.world_cap)?;
        if cuboid.mu != mu {
            return Err(Error::Internal(format!(
                "packing witness has cuboid {} but {} was expected",
                cuboid.mu, mu
            )));
        }
        insert_corner(&mut corners, mu, &structure);
    }
    corners.sort_by_key(|c| std::cmp::Reverse(c.0));
    Ok(StructureRegion {
        region: RateRegion::from_corners(n, corners.iter().map(|(c, _)| *c)),
        witnesses: corners,
        strategy: Strategy::Packing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mac::presets;

    #[test]
    fn separable_pairs_of_the_adder() {
        let meter = Meter::new(1_000_000);
        let table = OutputTable::new(&presets::binary_adder(), 1, &meter).unwrap();
        let pairs = separable_pairs(&table, 2, &meter).unwrap();
        // Four singletons plus ({0,1},{0}), ({0,1},{1}), ({0},{0,1}), ({1},{0,1}).
        assert_eq!(pairs.len(), 8);
        assert!(pairs.iter().all(|p| p.a.len() * p.b.len() <= 2));
    }

    #[test]
    fn disjoint_packing() {
        let meter = Meter::new(1_000_000);
        let mk = |bits: &[usize]| {
            let mut b = Bitset::new(8);
            bits.iter().for_each(|&i| b.insert(i));
            b
        };
        let sets = vec![mk(&[0, 1]), mk(&[1, 2]), mk(&[2, 3]), mk(&[4]), mk(&[0, 4])];
        assert_eq!(max_disjoint(&sets, 10, &meter).unwrap().len(), 3);
        assert_eq!(max_disjoint(&sets, 2, &meter).unwrap().len(), 2);
    }

    #[test]
    fn pentagon_square_packing() {
        let r = packing_region(&presets::pentagon(), 2, &Bounds::default()).unwrap();
        let max = r.region.maximal_points();
        assert!(max.contains(&MuTriple::new(1, 5, 1)));
        assert!(max.contains(&MuTriple::new(5, 1, 1)));
        assert!(max.contains(&MuTriple::new(2, 2, 1)));
    }
}
