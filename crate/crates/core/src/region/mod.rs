//! Zero-error `n`-capacity regions.
//!
//! The structure route takes the union, over cooperation structures, of the
//! cuboids `mu0 <= |[[U|Y^n]]*|`, `mu_i <= min_u |[[Xi^n | Y^n, U=u]]*|`,
//! closed downward. The oracle route searches encoder tables directly and
//! keeps every triple for which some code has pairwise disjoint output sets.
//! Regions are sets of exact integer message-count triples.

mod enumerate;
mod oracle;
mod packing;
mod single_user;

pub mod confusability;

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mac::{
    build_structure_world, check_structure_markov, refs, sequence_vars, Channel, CooperationStructure, MuTriple,
    DEFAULT_WORLD_CAP,
};
use crate::overlap::{conditional_info, nonstochastic_info};

pub use enumerate::{census, enumerate_structures, StructureIter};
pub use oracle::{oracle_region, OracleRegion};
pub use single_user::{single_user_capacity, SingleUserCapacity};

pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// Limits on structure enumeration and search effort.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest auxiliary range; `None` means `|X1^n| * |X2^n|`.
    pub max_u: Option<usize>,
    /// Largest input set per auxiliary value; `None` means unbounded.
    pub max_set_size: Option<usize>,
    /// Cap on enumerated structures or search nodes.
    pub budget: u128,
    pub world_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_u: None,
            max_set_size: None,
            budget: DEFAULT_BUDGET,
            world_cap: DEFAULT_WORLD_CAP,
        }
    }
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_u == Some(0) {
            return Err(Error::InvalidBounds("max_u must be positive".into()));
        }
        if self.max_set_size == Some(0) {
            return Err(Error::InvalidBounds("max_set_size must be positive".into()));
        }
        if self.budget == 0 || self.world_cap == 0 {
            return Err(Error::InvalidBounds("budget and world cap must be positive".into()));
        }
        Ok(())
    }

    pub(crate) fn resolved(&self, channel: &Channel, n: usize) -> (usize, usize) {
        let s1 = channel.x1_alphabet().len().saturating_pow(n as u32);
        let s2 = channel.x2_alphabet().len().saturating_pow(n as u32);
        let max_u = self.max_u.unwrap_or(s1.saturating_mul(s2));
        let max_set = self.max_set_size.unwrap_or(s1.max(s2));
        (max_u, max_set)
    }
}

/// The exact cell counts bounding one structure's rates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateCuboid {
    pub n: usize,
    pub mu: MuTriple,
}

/// Builds the structure world, checks both Markov chains, and reads off
/// `(|[[U|Y]]*|, 2^I*[X1;Y|U], 2^I*[X2;Y|U])`.
pub fn rate_cuboid(channel: &Channel, structure: &CooperationStructure, cap: usize) -> Result<RateCuboid> {
    let n = structure.n();
    let world = build_structure_world(channel, structure, cap)?;
    if !check_structure_markov(&world)? {
        return Err(Error::Internal(
            "structure world violates a Markov uncertainty chain".into(),
        ));
    }
    let x1 = sequence_vars("X1", n);
    let x2 = sequence_vars("X2", n);
    let y = sequence_vars("Y", n);
    let mu0 = nonstochastic_info(&world, &["U"], &refs(&y))?.cells;
    let mu1 = conditional_info(&world, &refs(&x1), &refs(&y), &["U"])?.cells;
    let mu2 = conditional_info(&world, &refs(&x2), &refs(&y), &["U"])?.cells;
    Ok(RateCuboid {
        n,
        mu: MuTriple::new(mu0, mu1, mu2),
    })
}

/// A downward-closed set of achievable triples (all components `>= 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateRegion {
    pub n: usize,
    points: BTreeSet<MuTriple>,
}

impl RateRegion {
    pub fn from_points(n: usize, points: BTreeSet<MuTriple>) -> RateRegion {
        RateRegion { n, points }
    }

    /// Downward closure of the given corners.
    pub fn from_corners(n: usize, corners: impl IntoIterator<Item = MuTriple>) -> RateRegion {
        let mut points = BTreeSet::new();
        for c in corners {
            points.extend(c.below());
        }
        RateRegion { n, points }
    }

    pub fn points(&self) -> &BTreeSet<MuTriple> {
        &self.points
    }

    pub fn contains(&self, mu: &MuTriple) -> bool {
        self.points.contains(mu)
    }

    /// Points not strictly dominated by another point.
    pub fn maximal_points(&self) -> Vec<MuTriple> {
        self.points
            .iter()
            .filter(|p| !self.points.iter().any(|q| q != *p && (*p).le(q)))
            .copied()
            .collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.points.iter().all(|p| p.below().all(|q| self.points.contains(&q)))
    }

    /// Componentwise maximum over all points, or `ONE` when empty.
    pub fn bounding_box(&self) -> MuTriple {
        self.points.iter().fold(MuTriple::ONE, |acc, p| {
            MuTriple::new(acc.mu0.max(p.mu0), acc.mu1.max(p.mu1), acc.mu2.max(p.mu2))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Exhaustive when the structure census fits the budget, packing otherwise.
    Auto,
    /// Union of cuboids over every enumerated structure.
    Exhaustive,
    /// Maximum packings of single-value structures with pairwise disjoint
    /// outputs. Exact for the same bounds; see `packing`.
    Packing,
}

/// The structure-route region with one witness structure per maximal point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureRegion {
    pub region: RateRegion,
    pub witnesses: Vec<(MuTriple, CooperationStructure)>,
    pub strategy: Strategy,
}

impl StructureRegion {
    /// A witness structure whose cuboid contains `mu`.
    pub fn witness_for(&self, mu: &MuTriple) -> Option<(usize, &CooperationStructure)> {
        self.witnesses
            .iter()
            .enumerate()
            .find(|(_, (corner, _))| mu.le(corner))
            .map(|(i, (_, s))| (i, s))
    }
}

const CHUNK: usize = 4096;

/// Shared node counter for searches that may run on several threads.
pub(crate) struct Meter {
    used: std::sync::atomic::AtomicU64,
    limit: u128,
}

impl Meter {
    pub(crate) fn new(limit: u128) -> Meter {
        Meter {
            used: std::sync::atomic::AtomicU64::new(0),
            limit,
        }
    }

    pub(crate) fn tick(&self, nodes: u64) -> Result<()> {
        let used = self.used.fetch_add(nodes, std::sync::atomic::Ordering::Relaxed) + nodes;
        if used as u128 > self.limit {
            return Err(Error::BudgetExceeded {
                needed: used as u128,
                budget: self.limit,
            });
        }
        Ok(())
    }
}

fn insert_corner(corners: &mut Vec<(MuTriple, CooperationStructure)>, mu: MuTriple, structure: &CooperationStructure) {
    if corners.iter().any(|(c, _)| mu.le(c)) {
        return;
    }
    corners.retain(|(c, _)| !c.le(&mu));
    corners.push((mu, structure.clone()));
}

fn exhaustive_region(channel: &Channel, n: usize, bounds: &Bounds) -> Result<StructureRegion> {
    let mut structures = enumerate_structures(channel, n, bounds)?;
    let mut corners: Vec<(MuTriple, CooperationStructure)> = Vec::new();
    let mut chunk = Vec::with_capacity(CHUNK);
    loop {
        chunk.clear();
        chunk.extend(structures.by_ref().take(CHUNK));
        if chunk.is_empty() {
            break;
        }
        let cuboids: Vec<Result<RateCuboid>> = chunk
            .par_iter()
            .map(|s| rate_cuboid(channel, s, bounds.world_cap))
            .collect();
        for (s, c) in chunk.iter().zip(cuboids) {
            insert_corner(&mut corners, c?.mu, s);
        }
    }
    corners.sort_by_key(|c| std::cmp::Reverse(c.0));
    Ok(StructureRegion {
        region: RateRegion::from_corners(n, corners.iter().map(|(c, _)| *c)),
        witnesses: corners,
        strategy: Strategy::Exhaustive,
    })
}

/// Zero-error `n`-capacity region through cooperation structures.
pub fn capacity_region(channel: &Channel, n: usize, bounds: &Bounds, strategy: Strategy) -> Result<StructureRegion> {
    bounds.validate()?;
    if n == 0 {
        return Err(Error::InvalidBounds("blocklength must be positive".into()));
    }
    match strategy {
        Strategy::Exhaustive => exhaustive_region(channel, n, bounds),
        Strategy::Packing => packing::packing_region(channel, n, bounds),
        Strategy::Auto => {
            let (max_u, max_set) = bounds.resolved(channel, n);
            if census(channel, n, max_u, max_set) <= bounds.budget {
                exhaustive_region(channel, n, bounds)
            } else {
                packing::packing_region(channel, n, bounds)
            }
        }
    }
}
