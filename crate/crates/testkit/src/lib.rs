//! Brute-force reference implementations for cross-checking `nonstoch-core`.
//!
//! Everything here works from raw outcome lists and plain set operations, and
//! deliberately avoids the library's partition and grouping machinery.

pub mod suites;

use std::collections::{BTreeMap, BTreeSet};

use nonstoch_core::{tuple, Channel, Sequence, Symbol, Tuple, World};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Labels = BTreeMap<Tuple, usize>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random world over variables `A, B, ...` with `1..=max_symbols` symbols
/// each and a random nonempty subset of the product as outcomes.
pub fn random_world(rng: &mut ChaCha8Rng, vars: usize, max_symbols: usize) -> World {
    let names: Vec<String> = (0..vars).map(|i| ((b'A' + i as u8) as char).to_string()).collect();
    let sizes: Vec<usize> = (0..vars).map(|_| rng.gen_range(1..=max_symbols)).collect();
    let mut product: Vec<Vec<usize>> = vec![Vec::new()];
    for &s in &sizes {
        product = product
            .into_iter()
            .flat_map(|p| {
                (0..s).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    // Sparse and dense worlds both matter; pick a density first.
    let density: f64 = rng.gen_range(0.1..=1.0);
    let mut chosen: Vec<&Vec<usize>> = product.iter().filter(|_| rng.gen_bool(density)).collect();
    if chosen.is_empty() {
        chosen.push(product.choose(rng).expect("nonempty product"));
    }
    let outcomes = chosen.into_iter().map(|o| {
        o.iter()
            .map(|v| Symbol::new(&v.to_string()).expect("digit"))
            .collect::<Tuple>()
    });
    World::new(&names, outcomes).expect("valid random world")
}

/// Splits the variables of `world` into `k` nonempty disjoint groups at
/// random; some variables may be left out.
pub fn random_groups(rng: &mut ChaCha8Rng, world: &World, k: usize) -> Vec<Vec<String>> {
    let mut names: Vec<String> = world.variable_names().iter().map(|s| s.to_string()).collect();
    assert!(names.len() >= k);
    names.shuffle(rng);
    let mut groups: Vec<Vec<String>> = names.drain(..k).map(|n| vec![n]).collect();
    for n in names {
        let slot = rng.gen_range(0..=k);
        if slot < k {
            groups[slot].push(n);
        }
    }
    groups
}

pub fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

/// Column positions of `vars`, in declaration order.
pub fn columns(world: &World, vars: &[&str]) -> Vec<usize> {
    let names = world.variable_names();
    let mut cols: Vec<usize> = vars
        .iter()
        .map(|v| names.iter().position(|n| n == v).expect("known variable"))
        .collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

pub fn project(outcome: &[Symbol], cols: &[usize]) -> Tuple {
    cols.iter().map(|&c| outcome[c].clone()).collect()
}

pub fn range(world: &World, vars: &[&str]) -> BTreeSet<Tuple> {
    let cols = columns(world, vars);
    world.outcomes().iter().map(|o| project(o, &cols)).collect()
}

/// `[[target | cond = value]]`.
pub fn cond_range(world: &World, target: &[&str], cond: &[&str], value: &[Symbol]) -> BTreeSet<Tuple> {
    let (t, c) = (columns(world, target), columns(world, cond));
    world
        .outcomes()
        .iter()
        .filter(|o| project(o, &c) == value)
        .map(|o| project(o, &t))
        .collect()
}

/// Unrelatedness in chained conditional form: `[[Xk | x_1..x_{k-1}]] = [[Xk]]`
/// for every realized prefix and every `k >= 2`.
pub fn unrelated_chained(world: &World, groups: &[Vec<String>]) -> bool {
    for k in 1..groups.len() {
        let prefix: Vec<&str> = groups[..k].iter().flat_map(|g| strs(g)).collect();
        let target = strs(&groups[k]);
        let whole = range(world, &target);
        for p in range(world, &prefix) {
            if cond_range(world, &target, &prefix, &p) != whole {
                return false;
            }
        }
    }
    true
}

/// `left` and `right` conditionally unrelated given `mid`:
/// `[[L, R | m]] = [[L | m]] x [[R | m]]` for every realized `m`.
pub fn conditionally_unrelated(world: &World, left: &[&str], mid: &[&str], right: &[&str]) -> bool {
    let both: Vec<&str> = left.iter().chain(right).copied().collect();
    let (lc, rc, bc) = (columns(world, left), columns(world, right), columns(world, &both));
    for m in range(world, mid) {
        let l = cond_range(world, left, mid, &m);
        let r = cond_range(world, right, mid, &m);
        let joint = cond_range(world, &both, mid, &m);
        // Rebuild each joint point in declaration order from its two halves.
        let mut expected = BTreeSet::new();
        for a in &l {
            for b in &r {
                let mut point = vec![None; world.variables().len()];
                for (i, &c) in lc.iter().enumerate() {
                    point[c] = Some(a[i].clone());
                }
                for (i, &c) in rc.iter().enumerate() {
                    point[c] = Some(b[i].clone());
                }
                expected.insert(bc.iter().map(|&c| point[c].clone().expect("set")).collect::<Tuple>());
            }
        }
        if joint != expected {
            return false;
        }
    }
    true
}

/// `[[X|Y]]*` by repeatedly merging overlapping conditional ranges until
/// nothing changes. Cells are sorted.
pub fn overlap_cells(world: &World, x: &[&str], y: &[&str]) -> Vec<BTreeSet<Tuple>> {
    let mut cells: Vec<BTreeSet<Tuple>> = range(world, y)
        .into_iter()
        .map(|v| cond_range(world, x, y, &v))
        .collect();
    loop {
        let mut merged = false;
        'scan: for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if !cells[i].is_disjoint(&cells[j]) {
                    let other = cells.remove(j);
                    cells[i].extend(other);
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    cells.sort();
    cells
}

/// `[[X | Y, W=w]]*` within the sub-world `W = w`.
pub fn conditional_overlap_cells(
    world: &World,
    x: &[&str],
    y: &[&str],
    w: &[&str],
    value: &[Symbol],
) -> Vec<BTreeSet<Tuple>> {
    let cols = columns(world, w);
    let names: Vec<&str> = world.variable_names();
    let sub = World::new(
        &names,
        world.outcomes().iter().filter(|o| project(o, &cols) == value).cloned(),
    )
    .expect("realized condition");
    overlap_cells(&sub, x, y)
}

/// Nonempty pairwise intersections.
pub fn join_cells(p: &[BTreeSet<Tuple>], q: &[BTreeSet<Tuple>]) -> Vec<BTreeSet<Tuple>> {
    let mut out: Vec<BTreeSet<Tuple>> = p
        .iter()
        .flat_map(|a| {
            q.iter()
                .map(move |b| a.intersection(b).cloned().collect::<BTreeSet<_>>())
        })
        .filter(|c| !c.is_empty())
        .collect();
    out.sort();
    out
}

fn cell_of(cells: &[BTreeSet<Tuple>], point: &Tuple) -> usize {
    cells.iter().position(|c| c.contains(point)).expect("covered")
}

/// Classes of `[[X1,X2,Y]]` under NC-connectedness, by checking the two
/// overlap-connectedness conditions for every pair of points.
pub fn nc_classes(world: &World, x1: &[&str], x2: &[&str], y: &[&str]) -> Vec<BTreeSet<Tuple>> {
    let c1 = overlap_cells(world, x1, y);
    let c2 = overlap_cells(world, x2, y);
    let all: Vec<&str> = x1.iter().chain(x2).chain(y).copied().collect();
    let (k1, k2, ka) = (columns(world, x1), columns(world, x2), columns(world, &all));
    let points: Vec<&Tuple> = world.outcomes().iter().collect();
    let mut classes: Vec<BTreeSet<Tuple>> = Vec::new();
    let mut assigned = vec![false; points.len()];
    for i in 0..points.len() {
        if assigned[i] {
            continue;
        }
        let mut class = BTreeSet::new();
        for j in i..points.len() {
            let same1 = cell_of(&c1, &project(points[i], &k1)) == cell_of(&c1, &project(points[j], &k1));
            let same2 = cell_of(&c2, &project(points[i], &k2)) == cell_of(&c2, &project(points[j], &k2));
            if same1 && same2 {
                assigned[j] = true;
                class.insert(project(points[j], &ka));
            }
        }
        classes.push(class);
    }
    classes.sort();
    classes
}

/// All set partitions of `n` items as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, labels: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=labels {
            cur.push(v);
            go(n, cur, labels.max(v + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Every common variable `f(X) = g(Y)` with labels attained in order.
pub fn brute_cvs(world: &World, x: &[&str], y: &[&str]) -> Vec<(Labels, Labels)> {
    let xs: Vec<Tuple> = range(world, x).into_iter().collect();
    let (xc, yc) = (columns(world, x), columns(world, y));
    let mut out = Vec::new();
    for rgs in set_partitions(xs.len()) {
        let f: Labels = xs.iter().cloned().zip(rgs).collect();
        let mut g: Labels = BTreeMap::new();
        let consistent = world.outcomes().iter().all(|o| {
            let z = f[&project(o, &xc)];
            *g.entry(project(o, &yc)).or_insert(z) == z
        });
        if consistent {
            out.push((f, g));
        }
    }
    out
}

/// `f1`, `f2` and the pair-valued `g` of an NC-form common variable.
pub type NcCv = (Labels, Labels, BTreeMap<Tuple, (usize, usize)>);

/// Every NC-form common variable `(f1(X1), f2(X2)) = g(Y)`.
pub fn brute_nc_cvs(world: &World, x1: &[&str], x2: &[&str], y: &[&str]) -> Vec<NcCv> {
    let r1: Vec<Tuple> = range(world, x1).into_iter().collect();
    let r2: Vec<Tuple> = range(world, x2).into_iter().collect();
    let (c1, c2, cy) = (columns(world, x1), columns(world, x2), columns(world, y));
    let p1 = set_partitions(r1.len());
    let p2 = set_partitions(r2.len());
    let mut out = Vec::new();
    for a in &p1 {
        let f1: Labels = r1.iter().cloned().zip(a.iter().copied()).collect();
        for b in &p2 {
            let f2: Labels = r2.iter().cloned().zip(b.iter().copied()).collect();
            let mut g = BTreeMap::new();
            let consistent = world.outcomes().iter().all(|o| {
                let z = (f1[&project(o, &c1)], f2[&project(o, &c2)]);
                *g.entry(project(o, &cy)).or_insert(z) == z
            });
            if consistent {
                out.push((f1.clone(), f2, g));
            }
        }
    }
    out
}

/// True when `z = h(z_star)` for some `h`, checked on every outcome.
pub fn factors_through<K: Ord, L: Ord + Clone, M: Ord + Clone>(
    keys: impl IntoIterator<Item = K>,
    z_star: impl Fn(&K) -> L,
    z: impl Fn(&K) -> M,
) -> bool {
    let mut h: BTreeMap<L, M> = BTreeMap::new();
    keys.into_iter().all(|k| {
        let (from, to) = (z_star(&k), z(&k));
        h.entry(from).or_insert_with(|| to.clone()) == &to
    })
}

/// Largest label count over common variables `f(X,W) = g(Y,W)` that are
/// unrelated with `W`.
pub fn max_unrelated_cv(world: &World, x: &[&str], y: &[&str], w: &[&str]) -> usize {
    let xw: Vec<&str> = x.iter().chain(w).copied().collect();
    let yw: Vec<&str> = y.iter().chain(w).copied().collect();
    let points: Vec<Tuple> = range(world, &xw).into_iter().collect();
    let (xwc, ywc, wc) = (columns(world, &xw), columns(world, &yw), columns(world, w));
    let w_range = range(world, w);
    let mut best = 0;
    for rgs in set_partitions(points.len()) {
        let labels = rgs.iter().max().map_or(0, |m| m + 1);
        if labels <= best {
            continue;
        }
        let f: Labels = points.iter().cloned().zip(rgs).collect();
        let mut g: Labels = BTreeMap::new();
        let consistent = world.outcomes().iter().all(|o| {
            let z = f[&project(o, &xwc)];
            *g.entry(project(o, &ywc)).or_insert(z) == z
        });
        if !consistent {
            continue;
        }
        let joint: BTreeSet<(usize, Tuple)> = world
            .outcomes()
            .iter()
            .map(|o| (f[&project(o, &xwc)], project(o, &wc)))
            .collect();
        if joint.len() == labels * w_range.len() {
            best = labels;
        }
    }
    best
}

/// Adjacency of input sequences whose output sets meet, computed directly
/// from blocklength-`n` transmissions. The second input is fixed to its
/// only symbol.
pub fn confusability(channel: &Channel, n: usize) -> (Vec<Sequence>, Vec<Vec<bool>>) {
    let inputs = channel.x1_sequences(n);
    let fixed = channel.x2_sequences(n).remove(0);
    let noise = channel.noise_sequences(n);
    let outputs: Vec<BTreeSet<Sequence>> = inputs
        .iter()
        .map(|x| {
            noise
                .iter()
                .map(|w| channel.transmit(x, &fixed, w).expect("valid"))
                .collect()
        })
        .collect();
    let adj = (0..inputs.len())
        .map(|i| {
            (0..inputs.len())
                .map(|j| i != j && !outputs[i].is_disjoint(&outputs[j]))
                .collect()
        })
        .collect();
    (inputs, adj)
}

/// Independence number by enumerating every independent set.
pub fn independence_number(adj: &[Vec<bool>]) -> usize {
    fn go(adj: &[Vec<bool>], next: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(chosen.len());
        for v in next..adj.len() {
            if chosen.iter().all(|&u| !adj[u][v]) {
                chosen.push(v);
                go(adj, v + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    go(adj, 0, &mut Vec::new(), &mut best);
    best
}

/// Parses `"0 1; 1 0"`-style outcome lists for compact fixtures.
pub fn world(vars: &[&str], rows: &str) -> World {
    let outcomes = rows
        .split(';')
        .map(|r| tuple(&r.split_whitespace().collect::<Vec<_>>()).expect("symbols"));
    World::new(vars, outcomes).expect("valid world")
}
