//! Finite models of uncertain variables.
//!
//! A [`World`] is an explicit set of outcomes; each outcome realizes one
//! [`Symbol`] for every declared variable. Ranges, conditional ranges,
//! unrelatedness and Markov uncertainty chains are all computed by projecting
//! and grouping those outcomes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A token drawn from a finite alphabet. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(token: &str) -> Result<Symbol> {
        if token.is_empty() {
            return Err(Error::EmptySymbol);
        }
        Ok(Symbol(Arc::from(token)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        Symbol::new(s)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One value per variable of some subset, laid out in declaration order.
pub type Tuple = Vec<Symbol>;

/// Parses a slice of tokens into a tuple.
pub fn tuple(tokens: &[&str]) -> Result<Tuple> {
    tokens.iter().map(|t| Symbol::new(t)).collect()
}

pub(crate) fn show_tuple(t: &[Symbol]) -> String {
    let parts: Vec<&str> = t.iter().map(Symbol::as_str).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableName(String);

impl VariableName {
    pub fn new(name: &str) -> Result<VariableName> {
        if name.is_empty() {
            return Err(Error::EmptyVariableName);
        }
        Ok(VariableName(name.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VariableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A set of realized values of a variable subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range {
    variables: Vec<VariableName>,
    points: BTreeSet<Tuple>,
}

impl Range {
    pub fn new(variables: Vec<VariableName>, points: BTreeSet<Tuple>) -> Range {
        Range { variables, points }
    }

    pub fn variables(&self) -> &[VariableName] {
        &self.variables
    }

    pub fn points(&self) -> &BTreeSet<Tuple> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[Symbol]) -> bool {
        self.points.contains(point)
    }
}

/// Values assigned to a subset of variables, used as a condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    vars: Vec<String>,
    values: Tuple,
}

impl Assignment {
    /// `vars[i]` takes `values[i]`. Order is free; it is normalized against
    /// the world when the assignment is used.
    pub fn new(vars: &[&str], values: Tuple) -> Result<Assignment> {
        if vars.len() != values.len() {
            return Err(Error::ArityMismatch {
                expected: vars.len(),
                found: values.len(),
            });
        }
        Ok(Assignment {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            values,
        })
    }

    pub fn from_pairs(pairs: &[(&str, &str)]) -> Result<Assignment> {
        let vars: Vec<&str> = pairs.iter().map(|(v, _)| *v).collect();
        let values = pairs.iter().map(|(_, s)| Symbol::new(s)).collect::<Result<Tuple>>()?;
        Assignment::new(&vars, values)
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn values(&self) -> &[Symbol] {
        &self.values
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(&self.values)
            .map(|(v, s)| format!("{v}={s}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The family `{[[X|y]] : y in [[Y]]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionalRangeFamily {
    pub target: Vec<VariableName>,
    pub conditioner: Vec<VariableName>,
    pub entries: BTreeMap<Tuple, Range>,
}

/// A finite sample space with every variable realized on every outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct World {
    variables: Vec<VariableName>,
    outcomes: Vec<Tuple>,
}

impl World {
    /// Validates and canonicalizes: outcomes are deduplicated and sorted.
    pub fn new<S: AsRef<str>>(variables: &[S], outcomes: impl IntoIterator<Item = Tuple>) -> Result<World> {
        let variables = variables
            .iter()
            .map(|v| VariableName::new(v.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = BTreeSet::new();
        for v in &variables {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
        }
        let mut set = BTreeSet::new();
        for outcome in outcomes {
            if outcome.len() != variables.len() {
                return Err(Error::ArityMismatch {
                    expected: variables.len(),
                    found: outcome.len(),
                });
            }
            set.insert(outcome);
        }
        if set.is_empty() {
            return Err(Error::EmptyOutcomes);
        }
        Ok(World {
            variables,
            outcomes: set.into_iter().collect(),
        })
    }

    /// Convenience constructor from string tokens.
    pub fn from_strs(variables: &[&str], outcomes: &[&[&str]]) -> Result<World> {
        let tuples = outcomes.iter().map(|o| tuple(o)).collect::<Result<Vec<_>>>()?;
        World::new(variables, tuples)
    }

    pub fn variables(&self) -> &[VariableName] {
        &self.variables
    }

    pub fn variable_names(&self) -> Vec<&str> {
        self.variables.iter().map(VariableName::as_str).collect()
    }

    pub fn outcomes(&self) -> &[Tuple] {
        &self.outcomes
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn has_variable(&self, name: &str) -> bool {
        self.variables.iter().any(|v| v.as_str() == name)
    }

    /// Column indices of `vars`, in declaration order, without duplicates.
    pub(crate) fn columns(&self, vars: &[&str]) -> Result<Vec<usize>> {
        if vars.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut cols = vars
            .iter()
            .map(|name| {
                self.variables
                    .iter()
                    .position(|v| v.as_str() == *name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        cols.sort_unstable();
        cols.dedup();
        Ok(cols)
    }

    /// Resolves several subsets and requires them to be pairwise disjoint.
    pub(crate) fn disjoint_columns(&self, subsets: &[&[&str]]) -> Result<Vec<Vec<usize>>> {
        let resolved = subsets.iter().map(|s| self.columns(s)).collect::<Result<Vec<_>>>()?;
        let mut owner = vec![None; self.variables.len()];
        for (i, cols) in resolved.iter().enumerate() {
            for &c in cols {
                if owner[c].is_some_and(|o| o != i) {
                    return Err(Error::OverlappingSubsets(self.variables[c].to_string()));
                }
                owner[c] = Some(i);
            }
        }
        Ok(resolved)
    }

    fn names(&self, cols: &[usize]) -> Vec<VariableName> {
        cols.iter().map(|&c| self.variables[c].clone()).collect()
    }

    /// Resolves an assignment to (sorted columns, values in that order).
    fn resolve(&self, cond: &Assignment) -> Result<(Vec<usize>, Tuple)> {
        let mut pairs = Vec::with_capacity(cond.vars.len());
        for (name, value) in cond.vars.iter().zip(&cond.values) {
            let col = self
                .variables
                .iter()
                .position(|v| v.as_str() == name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            if let Some((_, prev)) = pairs.iter().find(|(c, _)| *c == col) {
                if prev != value {
                    return Err(Error::InadmissibleCondition(cond.to_string()));
                }
                continue;
            }
            pairs.push((col, value.clone()));
        }
        if pairs.is_empty() {
            return Err(Error::EmptySubset);
        }
        pairs.sort_by_key(|(c, _)| *c);
        Ok(pairs.into_iter().unzip())
    }

    pub(crate) fn project(outcome: &[Symbol], cols: &[usize]) -> Tuple {
        cols.iter().map(|&c| outcome[c].clone()).collect()
    }

    pub(crate) fn project_set(&self, cols: &[usize]) -> BTreeSet<Tuple> {
        self.outcomes.iter().map(|o| Self::project(o, cols)).collect()
    }

    /// Maps every realized `key` tuple to the set of `value` tuples seen with it.
    pub(crate) fn group(&self, key: &[usize], value: &[usize]) -> BTreeMap<Tuple, BTreeSet<Tuple>> {
        let mut map: BTreeMap<Tuple, BTreeSet<Tuple>> = BTreeMap::new();
        for o in &self.outcomes {
            map.entry(Self::project(o, key))
                .or_default()
                .insert(Self::project(o, value));
        }
        map
    }

    pub fn marginal_range(&self, vars: &[&str]) -> Result<Range> {
        let cols = self.columns(vars)?;
        Ok(Range::new(self.names(&cols), self.project_set(&cols)))
    }

    /// `[[X|y]]`. Conditioning on an unrealized tuple is an error.
    pub fn conditional_range(&self, target: &[&str], cond: &Assignment) -> Result<Range> {
        let cols = self.columns(target)?;
        let (ccols, values) = self.resolve(cond)?;
        let points: BTreeSet<Tuple> = self
            .outcomes
            .iter()
            .filter(|o| ccols.iter().zip(&values).all(|(&c, v)| &o[c] == v))
            .map(|o| Self::project(o, &cols))
            .collect();
        if points.is_empty() {
            return Err(Error::InadmissibleCondition(cond.to_string()));
        }
        Ok(Range::new(self.names(&cols), points))
    }

    pub fn conditional_family(&self, target: &[&str], conditioner: &[&str]) -> Result<ConditionalRangeFamily> {
        let cols = self.disjoint_columns(&[target, conditioner])?;
        let names = self.names(&cols[0]);
        let entries = self
            .group(&cols[1], &cols[0])
            .into_iter()
            .map(|(y, xs)| (y, Range::new(names.clone(), xs)))
            .collect();
        Ok(ConditionalRangeFamily {
            target: names,
            conditioner: self.names(&cols[1]),
            entries,
        })
    }

    /// The sub-world of outcomes consistent with `cond`, over all variables.
    pub fn restrict(&self, cond: &Assignment) -> Result<World> {
        let (ccols, values) = self.resolve(cond)?;
        let outcomes: Vec<Tuple> = self
            .outcomes
            .iter()
            .filter(|o| ccols.iter().zip(&values).all(|(&c, v)| &o[c] == v))
            .cloned()
            .collect();
        if outcomes.is_empty() {
            return Err(Error::InadmissibleCondition(cond.to_string()));
        }
        Ok(World {
            variables: self.variables.clone(),
            outcomes,
        })
    }

    /// Mutual unrelatedness: the joint range of the groups equals the
    /// Cartesian product of their marginal ranges.
    pub fn is_unrelated(&self, groups: &[&[&str]]) -> Result<bool> {
        if groups.len() < 2 {
            return Err(Error::TooFewGroups {
                expected: 2,
                found: groups.len(),
            });
        }
        let cols = self.disjoint_columns(groups)?;
        // The joint range always sits inside the product, so counting suffices.
        let mut product: u128 = 1;
        for c in &cols {
            product = product.saturating_mul(self.project_set(c).len() as u128);
        }
        let all: Vec<usize> = cols.concat();
        let joint: BTreeSet<Vec<Symbol>> = self.outcomes.iter().map(|o| Self::project(o, &all)).collect();
        Ok(joint.len() as u128 == product)
    }

    /// Markov uncertainty chain `left <-> mid <-> right`:
    /// `[[left | y, r]] = [[left | y]]` for every realized `(y, r)`.
    pub fn is_markov(&self, left: &[&str], mid: &[&str], right: &[&str]) -> Result<bool> {
        let cols = self.disjoint_columns(&[left, mid, right])?;
        let (l, m, r) = (&cols[0], &cols[1], &cols[2]);
        let given_mid = self.group(m, l);
        let mut mr = m.clone();
        mr.extend_from_slice(r);
        for (key, lefts) in self.group(&mr, l) {
            if given_mid[&key[..m.len()]] != lefts {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
