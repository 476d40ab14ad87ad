//! Check suites shared by the core tests and the acceptance run. Each returns
//! a [`Tally`] instead of panicking so callers can report counts.

use std::collections::BTreeSet;

use nonstoch_core::{
    build_structure_world, conditional_info, maximal_cv, nc_info, nc_maximal_cv, nc_partition, nonstochastic_info,
    overlap::matching_cell, overlap_partition, partition_join, region::enumerate_structures, synthesize_code,
    verify_zero_error, Bounds, Channel, MuTriple, Partition, Tuple, World,
};
use rand::Rng;

use crate::{
    brute_cvs, brute_nc_cvs, columns, conditional_overlap_cells, conditionally_unrelated, factors_through, join_cells,
    max_unrelated_cv, nc_classes, overlap_cells, project, random_groups, random_world, range, rng, strs,
    unrelated_chained,
};

#[derive(Debug, Default)]
pub struct Tally {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }
}

fn cell_sets(p: &Partition) -> BTreeSet<BTreeSet<Tuple>> {
    p.cells().iter().map(|c| c.iter().cloned().collect()).collect()
}

fn brute_sets(cells: Vec<BTreeSet<Tuple>>) -> BTreeSet<BTreeSet<Tuple>> {
    cells.into_iter().collect()
}

fn random_partition(rng: &mut rand_chacha::ChaCha8Rng, p: &Partition) -> Partition {
    let ground: Vec<Tuple> = p.ground().points().iter().cloned().collect();
    let count = rng.gen_range(1..=ground.len());
    let mut cells = vec![Vec::new(); count];
    for point in ground {
        cells[rng.gen_range(0..count)].push(point);
    }
    cells.retain(|c| !c.is_empty());
    Partition::from_cells(p.variables().to_vec(), cells).expect("valid partition")
}

/// Dual-implementation properties on `worlds` random worlds with at most four
/// variables of at most four symbols each.
pub fn property_suite(worlds: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    for i in 0..worlds {
        let vars = rng.gen_range(2..=4);
        let w = random_world(&mut rng, vars, 4);
        let tag = |what: &str| format!("world {i} ({what}): {w:?}");

        let g = random_groups(&mut rng, &w, 2);
        let (x, y) = (strs(&g[0]), strs(&g[1]));
        let ixy = nonstochastic_info(&w, &x, &y).unwrap().cells;
        let iyx = nonstochastic_info(&w, &y, &x).unwrap().cells;
        t.check(ixy == iyx, || tag("I* symmetry"));

        let core = overlap_partition(&w, &x, &y).unwrap();
        let brute_xy = overlap_cells(&w, &x, &y);
        let brute_yx = overlap_cells(&w, &y, &x);
        t.check(cell_sets(&core) == brute_sets(brute_xy.clone()), || {
            tag("overlap partition")
        });
        t.check(brute_xy.len() == brute_yx.len() && ixy == brute_xy.len(), || {
            tag("matching partitions have equal cell counts")
        });

        // The matching cell of each y, read through [[Y|X]]*, is a bijection.
        let yc = columns(&w, &y);
        let mut pairs = BTreeSet::new();
        for o in w.outcomes() {
            let yv = project(o, &yc);
            let xl = matching_cell(&w, &x, &y, &yv).unwrap();
            let yl = brute_yx.iter().position(|c| c.contains(&yv)).unwrap();
            pairs.insert((yl, xl));
        }
        let left: BTreeSet<usize> = pairs.iter().map(|p| p.0).collect();
        let right: BTreeSet<usize> = pairs.iter().map(|p| p.1).collect();
        t.check(
            pairs.len() == left.len() && pairs.len() == right.len() && pairs.len() == ixy,
            || tag("matching bijection"),
        );

        for k in 2..=vars.min(3) {
            let groups = random_groups(&mut rng, &w, k);
            let refs: Vec<Vec<&str>> = groups.iter().map(|g| strs(g)).collect();
            let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
            let core = w.is_unrelated(&slices).unwrap();
            t.check(core == unrelated_chained(&w, &groups), || tag("unrelatedness forms"));
        }

        if vars >= 3 {
            let g = random_groups(&mut rng, &w, 3);
            let (a, b, c) = (strs(&g[0]), strs(&g[1]), strs(&g[2]));
            let core = w.is_markov(&a, &b, &c).unwrap();
            t.check(core == conditionally_unrelated(&w, &a, &b, &c), || tag("Markov forms"));
            t.check(core == w.is_markov(&c, &b, &a).unwrap(), || tag("Markov symmetry"));

            let ncp = nc_partition(&w, &a, &b, &c).unwrap();
            let nci = nc_info(&w, &a, &b, &c).unwrap().cells;
            t.check(ncp.len() == nci, || tag("NC-partition vs join"));
            t.check(cell_sets(&ncp) == brute_sets(nc_classes(&w, &a, &b, &c)), || {
                tag("NC classes")
            });
            let join = join_cells(&overlap_cells(&w, &c, &a), &overlap_cells(&w, &c, &b));
            t.check(join.len() == nci, || tag("NC join by intersection"));
            let z = nc_maximal_cv(&w, &a, &b, &c).unwrap();
            t.check(z.is_valid(&w).unwrap() && z.label_count == nci, || {
                tag("NC maximal cv validity")
            });

            let ci = conditional_info(&w, &a, &b, &c).unwrap().cells;
            let brute = range(&w, &c)
                .iter()
                .map(|v| conditional_overlap_cells(&w, &a, &b, &c, v).len())
                .min()
                .unwrap();
            t.check(ci == brute, || tag("conditional I*"));
        }

        // Join laws on partitions of one ground range.
        let p = overlap_partition(&w, &x, &y).unwrap();
        let q = random_partition(&mut rng, &p);
        let r = random_partition(&mut rng, &p);
        let pq = partition_join(&p, &q).unwrap();
        let qp = partition_join(&q, &p).unwrap();
        t.check(cell_sets(&pq) == cell_sets(&qp), || tag("join commutes"));
        let left = partition_join(&pq, &r).unwrap();
        let right = partition_join(&p, &partition_join(&q, &r).unwrap()).unwrap();
        t.check(cell_sets(&left) == cell_sets(&right), || tag("join associates"));
        t.check(cell_sets(&partition_join(&p, &p).unwrap()) == cell_sets(&p), || {
            tag("join idempotent")
        });
        let one = Partition::single_cell(&p.ground());
        t.check(cell_sets(&partition_join(&p, &one).unwrap()) == cell_sets(&p), || {
            tag("join identity")
        });
        let brute: Vec<BTreeSet<Tuple>> = {
            let a: Vec<BTreeSet<Tuple>> = p.cells().iter().map(|c| c.iter().cloned().collect()).collect();
            let b: Vec<BTreeSet<Tuple>> = q.cells().iter().map(|c| c.iter().cloned().collect()).collect();
            join_cells(&a, &b)
        };
        t.check(cell_sets(&pq) == brute_sets(brute), || tag("join by intersection"));
    }
    t
}

/// Maximality checks against exhaustive cv enumeration on tiny worlds.
pub fn maximality_suite(worlds: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng(seed);
    for i in 0..worlds {
        let vars = rng.gen_range(2..=4);
        let w = random_world(&mut rng, vars, 3);
        let tag = |what: &str| format!("world {i} ({what}): {w:?}");

        let g = random_groups(&mut rng, &w, 2);
        let (x, y) = (strs(&g[0]), strs(&g[1]));
        if range(&w, &x).len() <= 4 && range(&w, &y).len() <= 4 {
            let z = maximal_cv(&w, &x, &y).unwrap();
            t.check(z.is_valid(&w).unwrap(), || tag("maximal cv validity"));
            let (xc, yc) = (columns(&w, &x), columns(&w, &y));
            let cvs = brute_cvs(&w, &x, &y);
            let widest = cvs
                .iter()
                .map(|(f, _)| f.values().max().map_or(0, |m| m + 1))
                .max()
                .unwrap();
            t.check(widest == z.label_count, || tag("no cv is wider than the maximal one"));
            for (f, gy) in &cvs {
                let ok = factors_through(w.outcomes().iter(), |o| z.f[&project(o, &xc)], |o| f[&project(o, &xc)])
                    && factors_through(w.outcomes().iter(), |o| z.g[&project(o, &yc)], |o| gy[&project(o, &yc)]);
                t.check(ok, || tag("cv factors through the maximal cv"));
            }
        }

        if vars >= 3 {
            let g = random_groups(&mut rng, &w, 3);
            let (a, b, c) = (strs(&g[0]), strs(&g[1]), strs(&g[2]));
            if range(&w, &a).len() <= 3 && range(&w, &b).len() <= 3 && range(&w, &c).len() <= 3 {
                let z = nc_maximal_cv(&w, &a, &b, &c).unwrap();
                let (ac, bc, cc) = (columns(&w, &a), columns(&w, &b), columns(&w, &c));
                for (f1, f2, gy) in brute_nc_cvs(&w, &a, &b, &c) {
                    let ok =
                        factors_through(
                            w.outcomes().iter(),
                            |o| (z.f1[&project(o, &ac)], z.f2[&project(o, &bc)]),
                            |o| (f1[&project(o, &ac)], f2[&project(o, &bc)]),
                        ) && factors_through(w.outcomes().iter(), |o| z.g[&project(o, &cc)], |o| gy[&project(o, &cc)]);
                    t.check(ok, || tag("NC cv factors through the maximal NC cv"));
                }
            }

            let xw: Vec<&str> = a.iter().chain(&c).copied().collect();
            if range(&w, &a).len() <= 3
                && range(&w, &b).len() <= 3
                && range(&w, &c).len() <= 2
                && range(&w, &xw).len() <= 6
            {
                let ci = conditional_info(&w, &a, &b, &c).unwrap().cells;
                t.check(ci == max_unrelated_cv(&w, &a, &b, &c), || {
                    tag("conditional I* as widest unrelated cv")
                });
            }
        }
    }
    t
}

/// For every structure within `bounds`: the synthesized code achieves exactly
/// the cell counts read off the structure world, and it verifies.
pub fn rate_equality_suite(channel: &Channel, n: usize, bounds: &Bounds) -> nonstoch_core::Result<Tally> {
    let mut t = Tally::default();
    let x1 = nonstoch_core::mac::sequence_vars("X1", n);
    let x2 = nonstoch_core::mac::sequence_vars("X2", n);
    let y = nonstoch_core::mac::sequence_vars("Y", n);
    let (x1, x2, y) = (strs(&x1), strs(&x2), strs(&y));
    for s in enumerate_structures(channel, n, bounds)? {
        let result = synthesize_code(channel, &s, bounds.world_cap)?;
        let world: World = build_structure_world(channel, &s, bounds.world_cap)?;
        let expected = MuTriple::new(
            nonstochastic_info(&world, &["U"], &y)?.cells,
            conditional_info(&world, &x1, &y, &["U"])?.cells,
            conditional_info(&world, &x2, &y, &["U"])?.cells,
        );
        t.check(result.achieved == expected, || {
            format!("{s:?}: achieved {} expected {expected}", result.achieved)
        });
        let verdict = verify_zero_error(channel, &result.code, bounds.world_cap)?;
        t.check(verdict.ok, || format!("{s:?}: synthesized code fails verification"));
    }
    Ok(t)
}
