//! Overlap partitions and the information measures built on them.
//!
//! `[[X|Y]]*` is the partition of `[[X]]` into connected components of the
//! hypergraph whose hyperedges are the conditional ranges `[[X|y]]`. Its cell
//! count is the exponent of `I*[X;Y]`; labels on cells give the maximal common
//! variable of `X` and `Y`. The noncooperative variants combine two such
//! partitions over a shared observation `Y`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;
use crate::world::{show_tuple, Assignment, Range, Symbol, Tuple, VariableName, World};

/// Information value carried as an exact cell count; bits are `log2(cells)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Info {
    pub cells: usize,
}

impl Info {
    pub fn bits(&self) -> f64 {
        (self.cells as f64).log2()
    }
}

/// Disjoint labelled cells covering a ground range. Cell `i` is the cell whose
/// smallest member is the `i`-th smallest among cell minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    variables: Vec<VariableName>,
    cells: Vec<Vec<Tuple>>,
    labels: BTreeMap<Tuple, usize>,
}

impl Partition {
    /// Groups points by an arbitrary key and relabels canonically.
    pub fn from_keys<K: Ord>(variables: Vec<VariableName>, keyed: impl IntoIterator<Item = (Tuple, K)>) -> Partition {
        let sorted: BTreeMap<Tuple, K> = keyed.into_iter().collect();
        let mut ids: BTreeMap<&K, usize> = BTreeMap::new();
        let mut cells: Vec<Vec<Tuple>> = Vec::new();
        let mut labels = BTreeMap::new();
        for (point, key) in &sorted {
            let next = ids.len();
            let id = *ids.entry(key).or_insert(next);
            if id == cells.len() {
                cells.push(Vec::new());
            }
            cells[id].push(point.clone());
            labels.insert(point.clone(), id);
        }
        Partition {
            variables,
            cells,
            labels,
        }
    }

    /// Builds a partition from explicit cells; they must be nonempty and disjoint.
    pub fn from_cells(variables: Vec<VariableName>, cells: Vec<Vec<Tuple>>) -> Result<Partition> {
        let mut keyed = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidStructure("empty partition cell".into()));
            }
            for p in cell {
                if p.len() != variables.len() {
                    return Err(Error::ArityMismatch {
                        expected: variables.len(),
                        found: p.len(),
                    });
                }
                if !seen.insert(p.clone()) {
                    return Err(Error::InvalidStructure(format!(
                        "point {} lies in two cells",
                        show_tuple(p)
                    )));
                }
                keyed.push((p.clone(), i));
            }
        }
        Ok(Partition::from_keys(variables, keyed))
    }

    /// Connected components of the hypergraph on `ground` with the given edges.
    pub fn from_hyperedges<'a>(
        variables: Vec<VariableName>,
        ground: &BTreeSet<Tuple>,
        edges: impl IntoIterator<Item = &'a BTreeSet<Tuple>>,
    ) -> Partition {
        let index: BTreeMap<&Tuple, usize> = ground.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut uf = UnionFind::new(ground.len());
        for edge in edges {
            let mut members = edge.iter().map(|p| index[p]);
            if let Some(first) = members.next() {
                for m in members {
                    uf.union(first, m);
                }
            }
        }
        let comp = uf.components();
        // Ground is iterated in sorted order, so first-appearance numbering
        // already labels cells by their smallest member.
        let mut cells: Vec<Vec<Tuple>> = Vec::new();
        let mut labels = BTreeMap::new();
        for (point, &c) in ground.iter().zip(&comp) {
            if c == cells.len() {
                cells.push(Vec::new());
            }
            cells[c].push(point.clone());
            labels.insert(point.clone(), c);
        }
        Partition {
            variables,
            cells,
            labels,
        }
    }

    pub fn single_cell(range: &Range) -> Partition {
        Partition::from_keys(
            range.variables().to_vec(),
            range.points().iter().map(|p| (p.clone(), ())),
        )
    }

    pub fn variables(&self) -> &[VariableName] {
        &self.variables
    }

    pub fn cells(&self) -> &[Vec<Tuple>] {
        &self.cells
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn label_of(&self, point: &[Symbol]) -> Option<usize> {
        self.labels.get(point).copied()
    }

    pub fn ground(&self) -> Range {
        Range::new(self.variables.clone(), self.labels.keys().cloned().collect())
    }

    pub fn info(&self) -> Info {
        Info { cells: self.len() }
    }

    fn same_ground(&self, other: &Partition) -> bool {
        self.variables == other.variables
            && self.labels.len() == other.labels.len()
            && self.labels.keys().eq(other.labels.keys())
    }

    /// Common refinement: nonempty pairwise intersections of cells.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        if !self.same_ground(other) {
            return Err(Error::GroundMismatch);
        }
        Ok(Partition::from_keys(
            self.variables.clone(),
            self.labels.iter().map(|(p, &a)| (p.clone(), (a, other.labels[p]))),
        ))
    }
}

/// `Z = f(X) = g(Y)` with labels `0..label_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonVariable {
    pub x_vars: Vec<VariableName>,
    pub y_vars: Vec<VariableName>,
    pub label_count: usize,
    pub f: BTreeMap<Tuple, usize>,
    pub g: BTreeMap<Tuple, usize>,
}

impl CommonVariable {
    /// Checks `f(x) = g(y)` on every admissible pair of `world` and that
    /// every label is attained.
    pub fn is_valid(&self, world: &World) -> Result<bool> {
        let x: Vec<&str> = self.x_vars.iter().map(VariableName::as_str).collect();
        let y: Vec<&str> = self.y_vars.iter().map(VariableName::as_str).collect();
        let cols = world.disjoint_columns(&[&x, &y])?;
        for o in world.outcomes() {
            let fx = self.f.get(&World::project(o, &cols[0]));
            let gy = self.g.get(&World::project(o, &cols[1]));
            match (fx, gy) {
                (Some(a), Some(b)) if a == b => {}
                _ => return Ok(false),
            }
        }
        let attained: BTreeSet<usize> = self.f.values().copied().collect();
        Ok(attained.len() == self.label_count && attained.iter().all(|&l| l < self.label_count))
    }
}

/// `Z = (f1(X1), f2(X2)) = g(Y)`; labels are pairs of overlap-partition labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcCommonVariable {
    pub x1_vars: Vec<VariableName>,
    pub x2_vars: Vec<VariableName>,
    pub y_vars: Vec<VariableName>,
    pub label_count: usize,
    pub f1: BTreeMap<Tuple, usize>,
    pub f2: BTreeMap<Tuple, usize>,
    pub g: BTreeMap<Tuple, (usize, usize)>,
}

impl NcCommonVariable {
    pub fn is_valid(&self, world: &World) -> Result<bool> {
        let names = |v: &[VariableName]| -> Vec<String> { v.iter().map(|n| n.to_string()).collect() };
        let (a, b, c) = (names(&self.x1_vars), names(&self.x2_vars), names(&self.y_vars));
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        let b: Vec<&str> = b.iter().map(String::as_str).collect();
        let c: Vec<&str> = c.iter().map(String::as_str).collect();
        let cols = world.disjoint_columns(&[&a, &b, &c])?;
        let mut attained = BTreeSet::new();
        for o in world.outcomes() {
            let l1 = self.f1.get(&World::project(o, &cols[0]));
            let l2 = self.f2.get(&World::project(o, &cols[1]));
            let g = self.g.get(&World::project(o, &cols[2]));
            match (l1, l2, g) {
                (Some(&l1), Some(&l2), Some(&g)) if (l1, l2) == g => {
                    attained.insert(g);
                }
                _ => return Ok(false),
            }
        }
        Ok(attained.len() == self.label_count)
    }
}

fn names_of(world: &World, cols: &[usize]) -> Vec<VariableName> {
    cols.iter().map(|&c| world.variables()[c].clone()).collect()
}

fn partition_by_columns(world: &World, target: &[usize], conditioner: &[usize]) -> Partition {
    let ground = world.project_set(target);
    let family = world.group(conditioner, target);
    Partition::from_hyperedges(names_of(world, target), &ground, family.values())
}

/// `[[X|Y]]*` over the whole world.
pub fn overlap_partition(world: &World, target: &[&str], conditioner: &[&str]) -> Result<Partition> {
    let cols = world.disjoint_columns(&[target, conditioner])?;
    Ok(partition_by_columns(world, &cols[0], &cols[1]))
}

/// `I*[A;B]` as the cell count of `[[A|B]]*`.
pub fn nonstochastic_info(world: &World, a: &[&str], b: &[&str]) -> Result<Info> {
    Ok(overlap_partition(world, a, b)?.info())
}

/// Label of the `[[X|Y]]*` cell that contains every `x` seen with `y`.
/// `y` is laid out in the declaration order of the conditioner variables.
pub fn matching_cell(world: &World, target: &[&str], conditioner: &[&str], y: &[Symbol]) -> Result<usize> {
    let cols = world.disjoint_columns(&[target, conditioner])?;
    let partition = partition_by_columns(world, &cols[0], &cols[1]);
    let family = world.group(&cols[1], &cols[0]);
    let xs = family
        .get(y)
        .ok_or_else(|| Error::InadmissibleCondition(show_tuple(y)))?;
    let first = xs.iter().next().expect("conditional ranges are nonempty");
    Ok(partition.label_of(first).expect("x lies in the ground range"))
}

/// The maximal common variable of `a` and `b`, labelled by `[[A|B]]*`.
pub fn maximal_cv(world: &World, a: &[&str], b: &[&str]) -> Result<CommonVariable> {
    let cols = world.disjoint_columns(&[a, b])?;
    let partition = partition_by_columns(world, &cols[0], &cols[1]);
    let f: BTreeMap<Tuple, usize> = partition.labels.clone();
    let g = world
        .group(&cols[1], &cols[0])
        .into_iter()
        .map(|(y, xs)| {
            let x = xs.iter().next().expect("conditional ranges are nonempty");
            (y, f[x])
        })
        .collect();
    Ok(CommonVariable {
        x_vars: names_of(world, &cols[0]),
        y_vars: names_of(world, &cols[1]),
        label_count: partition.len(),
        f,
        g,
    })
}

/// Finds `h` with `z = h(z_star)` on both sides, if it exists.
pub fn factor_through(z_star: &CommonVariable, z: &CommonVariable) -> Result<Option<Vec<usize>>> {
    if z_star.x_vars != z.x_vars
        || z_star.y_vars != z.y_vars
        || !z_star.f.keys().eq(z.f.keys())
        || !z_star.g.keys().eq(z.g.keys())
    {
        return Err(Error::DomainMismatch);
    }
    let mut h: Vec<Option<usize>> = vec![None; z_star.label_count];
    let pairs = z_star.f.iter().zip(&z.f).chain(z_star.g.iter().zip(&z.g));
    for ((_, &from), (_, &to)) in pairs {
        let Some(slot) = h.get_mut(from) else {
            return Ok(None);
        };
        match *slot {
            None => *slot = Some(to),
            Some(prev) if prev != to => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(h.into_iter().collect())
}

/// `[[X|Y,w]]*`: the overlap partition of `[[X|w]]` induced by `[[X|y,w]]`.
pub fn conditional_overlap_partition(
    world: &World,
    target: &[&str],
    conditioner: &[&str],
    given: &Assignment,
) -> Result<Partition> {
    let given_vars = given.vars();
    world.disjoint_columns(&[target, conditioner, &given_vars])?;
    let sub = world.restrict(given)?;
    overlap_partition(&sub, target, conditioner)
}

/// `I*[A;B|C]`: the smallest conditional overlap partition over realized `c`.
pub fn conditional_info(world: &World, a: &[&str], b: &[&str], c: &[&str]) -> Result<Info> {
    let cols = world.disjoint_columns(&[a, b, c])?;
    let mut best: Option<usize> = None;
    for (_, sub) in split_by(world, &cols[2]) {
        let cells = partition_by_columns(&sub, &cols[0], &cols[1]).len();
        best = Some(best.map_or(cells, |b| b.min(cells)));
    }
    Ok(Info {
        cells: best.expect("worlds are nonempty"),
    })
}

/// Sub-worlds keyed by the realized values of `cols`.
pub(crate) fn split_by(world: &World, cols: &[usize]) -> BTreeMap<Tuple, World> {
    let mut parts: BTreeMap<Tuple, Vec<Tuple>> = BTreeMap::new();
    for o in world.outcomes() {
        parts.entry(World::project(o, cols)).or_default().push(o.clone());
    }
    parts
        .into_iter()
        .map(|(k, outcomes)| {
            let w = World::new(&world.variable_names(), outcomes).expect("sub-world of a valid world");
            (k, w)
        })
        .collect()
}

pub fn partition_join(p: &Partition, q: &Partition) -> Result<Partition> {
    p.join(q)
}

/// Partition of `[[X1,X2,Y]]` into NC-connected classes.
pub fn nc_partition(world: &World, x1: &[&str], x2: &[&str], y: &[&str]) -> Result<Partition> {
    let cols = world.disjoint_columns(&[x1, x2, y])?;
    let p1 = partition_by_columns(world, &cols[0], &cols[2]);
    let p2 = partition_by_columns(world, &cols[1], &cols[2]);
    let mut all = cols.concat();
    all.sort_unstable();
    let keyed = world.outcomes().iter().map(|o| {
        let l1 = p1.labels[&World::project(o, &cols[0])];
        let l2 = p2.labels[&World::project(o, &cols[1])];
        (World::project(o, &all), (l1, l2))
    });
    Ok(Partition::from_keys(names_of(world, &all), keyed))
}

fn nc_join(world: &World, cols: &[Vec<usize>]) -> Result<Partition> {
    let q1 = partition_by_columns(world, &cols[2], &cols[0]);
    let q2 = partition_by_columns(world, &cols[2], &cols[1]);
    q1.join(&q2)
}

/// `I*^NC[X1,X2;Y]`: cell count of `[[Y|X1]]* v [[Y|X2]]*`.
pub fn nc_info(world: &World, x1: &[&str], x2: &[&str], y: &[&str]) -> Result<Info> {
    let cols = world.disjoint_columns(&[x1, x2, y])?;
    Ok(nc_join(world, &cols)?.info())
}

/// The maximal NC-form common variable.
pub fn nc_maximal_cv(world: &World, x1: &[&str], x2: &[&str], y: &[&str]) -> Result<NcCommonVariable> {
    let cols = world.disjoint_columns(&[x1, x2, y])?;
    let p1 = partition_by_columns(world, &cols[0], &cols[2]);
    let p2 = partition_by_columns(world, &cols[1], &cols[2]);
    let join = nc_join(world, &cols)?;
    let seen1 = world.group(&cols[2], &cols[0]);
    let seen2 = world.group(&cols[2], &cols[1]);
    let matching = |y: &Tuple| -> (usize, usize) {
        let a = seen1[y].iter().next().expect("nonempty");
        let b = seen2[y].iter().next().expect("nonempty");
        (p1.labels[a], p2.labels[b])
    };
    let mut g = BTreeMap::new();
    for cell in join.cells() {
        let pair = matching(&cell[0]);
        for y in cell {
            g.insert(y.clone(), pair);
        }
    }
    Ok(NcCommonVariable {
        x1_vars: names_of(world, &cols[0]),
        x2_vars: names_of(world, &cols[1]),
        y_vars: names_of(world, &cols[2]),
        label_count: join.len(),
        f1: p1.labels,
        f2: p2.labels,
        g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::world::tuple;

    fn small() -> World {
        World::from_strs(&["X", "Y"], &[&["0", "0"], &["0", "1"], &["1", "1"]]).unwrap()
    }

    fn identity(k: usize) -> World {
        let outcomes: Vec<Tuple> = (0..k)
            .map(|i| tuple(&[&i.to_string(), &i.to_string()]).unwrap())
            .collect();
        World::new(&["X", "Y"], outcomes).unwrap()
    }

    fn constant_y() -> World {
        World::from_strs(&["X", "Y"], &[&["0", "c"], &["1", "c"]]).unwrap()
    }

    fn cond_world() -> World {
        World::from_strs(
            &["X", "Y", "W"],
            &[&["0", "0", "a"], &["1", "1", "a"], &["0", "0", "b"], &["1", "0", "b"]],
        )
        .unwrap()
    }

    /// Y = (X1, X2) with unrelated binary inputs.
    fn pair_output() -> World {
        let mut o = Vec::new();
        for a in ["0", "1"] {
            for b in ["0", "1"] {
                o.push(tuple(&[a, b, &format!("{a}{b}")]).unwrap());
            }
        }
        World::new(&["X1", "X2", "Y"], o).unwrap()
    }

    fn all_equal() -> World {
        World::from_strs(&["X1", "X2", "Y"], &[&["0", "0", "0"], &["1", "1", "1"]]).unwrap()
    }

    fn y_const3() -> World {
        World::from_strs(
            &["X1", "X2", "Y"],
            &[&["0", "0", "c"], &["1", "0", "c"], &["0", "1", "c"]],
        )
        .unwrap()
    }

    #[test]
    fn overlap_partitions() {
        assert_eq!(overlap_partition(&small(), &["X"], &["Y"]).unwrap().len(), 1);
        let p = overlap_partition(&identity(2), &["X"], &["Y"]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.cells()[1], vec![tuple(&["1"]).unwrap()]);
        assert_eq!(overlap_partition(&constant_y(), &["X"], &["Y"]).unwrap().len(), 1);
    }

    #[test]
    fn information_values() {
        assert_eq!(nonstochastic_info(&identity(2), &["X"], &["Y"]).unwrap().bits(), 1.0);
        assert_eq!(nonstochastic_info(&small(), &["X"], &["Y"]).unwrap().bits(), 0.0);
        let five = nonstochastic_info(&identity(5), &["X"], &["Y"]).unwrap();
        assert_eq!(five.cells, 5);
        assert!((five.bits() - 5f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn matching_cells() {
        let y1 = tuple(&["1"]).unwrap();
        assert_eq!(matching_cell(&identity(2), &["X"], &["Y"], &y1).unwrap(), 1);
        assert_eq!(
            matching_cell(&small(), &["X"], &["Y"], &tuple(&["0"]).unwrap()).unwrap(),
            0
        );
        assert!(matches!(
            matching_cell(&identity(2), &["X"], &["Y"], &tuple(&["7"]).unwrap()),
            Err(Error::InadmissibleCondition(_))
        ));
    }

    #[test]
    fn maximal_common_variables() {
        let cv = maximal_cv(&identity(2), &["X"], &["Y"]).unwrap();
        assert_eq!(cv.label_count, 2);
        assert_eq!(cv.f[&tuple(&["1"]).unwrap()], 1);
        assert_eq!(cv.g[&tuple(&["1"]).unwrap()], 1);
        assert!(cv.is_valid(&identity(2)).unwrap());

        let cv = maximal_cv(&constant_y(), &["X"], &["Y"]).unwrap();
        assert_eq!(cv.label_count, 1);
        assert!(cv.f.values().all(|&l| l == 0));
        assert_eq!(maximal_cv(&small(), &["X"], &["Y"]).unwrap().label_count, 1);
    }

    #[test]
    fn factoring() {
        let w = identity(2);
        let star = maximal_cv(&w, &["X"], &["Y"]).unwrap();
        assert_eq!(factor_through(&star, &star).unwrap(), Some(vec![0, 1]));

        let mut constant = star.clone();
        constant.label_count = 1;
        constant.f.values_mut().for_each(|l| *l = 0);
        constant.g.values_mut().for_each(|l| *l = 0);
        assert_eq!(factor_through(&star, &constant).unwrap(), Some(vec![0, 0]));

        // A one-label z_star cannot produce two distinct labels.
        assert_eq!(factor_through(&constant, &star).unwrap(), None);

        let other = maximal_cv(&identity(3), &["X"], &["Y"]).unwrap();
        assert_eq!(factor_through(&star, &other).unwrap_err(), Error::DomainMismatch);
    }

    #[test]
    fn conditional_partitions() {
        let w = cond_world();
        let a = Assignment::from_pairs(&[("W", "a")]).unwrap();
        let b = Assignment::from_pairs(&[("W", "b")]).unwrap();
        let c = Assignment::from_pairs(&[("W", "c")]).unwrap();
        assert_eq!(conditional_overlap_partition(&w, &["X"], &["Y"], &a).unwrap().len(), 2);
        assert_eq!(conditional_overlap_partition(&w, &["X"], &["Y"], &b).unwrap().len(), 1);
        assert!(conditional_overlap_partition(&w, &["X"], &["Y"], &c).is_err());
    }

    #[test]
    fn conditional_information() {
        assert_eq!(
            conditional_info(&cond_world(), &["X"], &["Y"], &["W"]).unwrap().cells,
            1
        );

        let mut o = Vec::new();
        for x in ["0", "1"] {
            for w in ["0", "1"] {
                o.push(tuple(&[x, x, w]).unwrap());
            }
        }
        let vacuous = World::new(&["X", "Y", "W"], o).unwrap();
        assert_eq!(conditional_info(&vacuous, &["X"], &["Y"], &["W"]).unwrap().bits(), 1.0);

        let determined = World::from_strs(
            &["X", "Y", "W"],
            &[&["0", "0", "0"], &["1", "0", "1"], &["1", "1", "1"]],
        )
        .unwrap();
        assert_eq!(conditional_info(&determined, &["X"], &["Y"], &["W"]).unwrap().cells, 1);
    }

    fn part(cells: &[&[&str]]) -> Partition {
        let cells = cells
            .iter()
            .map(|c| c.iter().map(|s| tuple(&[s]).unwrap()).collect())
            .collect();
        Partition::from_cells(vec![VariableName::new("X").unwrap()], cells).unwrap()
    }

    #[test]
    fn joins() {
        let p = part(&[&["0", "1"], &["2", "3"]]);
        let q = part(&[&["0", "2"], &["1", "3"]]);
        assert_eq!(p.join(&p).unwrap(), p);
        assert_eq!(p.join(&q).unwrap().len(), 4);
        let one = part(&[&["0", "1", "2", "3"]]);
        assert_eq!(p.join(&one).unwrap(), p);
        let other = part(&[&["0", "1"]]);
        assert_eq!(p.join(&other).unwrap_err(), Error::GroundMismatch);
    }

    #[test]
    fn from_cells_rejects_overlap() {
        let v = vec![VariableName::new("X").unwrap()];
        let a = tuple(&["0"]).unwrap();
        assert!(Partition::from_cells(v.clone(), vec![vec![a.clone()], vec![a]]).is_err());
        assert!(Partition::from_cells(v, vec![vec![]]).is_err());
    }

    #[test]
    fn labels_follow_smallest_member() {
        let p = part(&[&["3", "0"], &["1"], &["2"]]);
        assert_eq!(p.cells()[0], vec![tuple(&["0"]).unwrap(), tuple(&["3"]).unwrap()]);
        assert_eq!(p.label_of(&tuple(&["1"]).unwrap()), Some(1));
    }

    #[test]
    fn nc_partitions_and_info() {
        let xs: (&[&str], &[&str], &[&str]) = (&["X1"], &["X2"], &["Y"]);
        assert_eq!(nc_partition(&all_equal(), xs.0, xs.1, xs.2).unwrap().len(), 2);
        assert_eq!(nc_partition(&pair_output(), xs.0, xs.1, xs.2).unwrap().len(), 4);
        assert_eq!(nc_partition(&y_const3(), xs.0, xs.1, xs.2).unwrap().len(), 1);

        assert_eq!(nc_info(&pair_output(), xs.0, xs.1, xs.2).unwrap().bits(), 2.0);
        assert_eq!(nc_info(&all_equal(), xs.0, xs.1, xs.2).unwrap().bits(), 1.0);
        assert_eq!(nc_info(&y_const3(), xs.0, xs.1, xs.2).unwrap().bits(), 0.0);
    }

    #[test]
    fn nc_maximal_common_variables() {
        for (w, count) in [(pair_output(), 4), (y_const3(), 1), (all_equal(), 2)] {
            let cv = nc_maximal_cv(&w, &["X1"], &["X2"], &["Y"]).unwrap();
            assert_eq!(cv.label_count, count);
            assert!(cv.is_valid(&w).unwrap());
        }
    }
}
