//! JSON file formats for worlds, channels, structures and codes.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use nonstoch_core::{
    tuple, Channel, Code, CooperationStructure, DecoderTables, MessageSpec, MuTriple, Sequence, StructureEntry, Symbol,
    Transition, World,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(path.display().to_string(), e))
}

fn sequence(tokens: &[String]) -> Result<Sequence, CliError> {
    let refs: Vec<&str> = tokens.iter().map(String::as_str).collect();
    Ok(tuple(&refs)?)
}

pub fn tokens(seq: &[Symbol]) -> Vec<String> {
    seq.iter().map(|s| s.as_str().to_string()).collect()
}

#[derive(Debug, Deserialize, Serialize)]
pub struct WorldFile {
    pub variables: Vec<String>,
    pub outcomes: Vec<Vec<String>>,
}

impl WorldFile {
    pub fn into_world(self) -> Result<World, CliError> {
        let outcomes = self
            .outcomes
            .iter()
            .map(|o| sequence(o))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(World::new(&self.variables, outcomes)?)
    }
}

#[derive(Debug, Deserialize, Serialize)]
pub struct TransitionRecord {
    pub x1: String,
    pub x2: String,
    pub w: String,
    pub y: String,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct ChannelFile {
    pub x1: Vec<String>,
    pub x2: Vec<String>,
    pub w: Vec<String>,
    pub y: Vec<String>,
    pub transitions: Vec<TransitionRecord>,
}

impl ChannelFile {
    pub fn into_channel(self) -> Result<Channel, CliError> {
        let transitions: Vec<Transition> = self
            .transitions
            .iter()
            .map(|t| Transition::new(&t.x1, &t.x2, &t.w, &t.y))
            .collect();
        Ok(Channel::new(&self.x1, &self.x2, &self.w, &self.y, &transitions)?)
    }
}

#[derive(Debug, Deserialize, Serialize)]
pub struct EntryRecord {
    pub label: String,
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct StructureFile {
    pub n: usize,
    pub u: Vec<EntryRecord>,
}

impl StructureFile {
    pub fn from_structure(s: &CooperationStructure) -> StructureFile {
        StructureFile {
            n: s.n(),
            u: s.entries()
                .iter()
                .map(|e| EntryRecord {
                    label: e.label.clone(),
                    a: e.a.iter().map(|q| tokens(q)).collect(),
                    b: e.b.iter().map(|q| tokens(q)).collect(),
                })
                .collect(),
        }
    }

    pub fn into_structure(self) -> Result<CooperationStructure, CliError> {
        let set = |seqs: &[Vec<String>]| -> Result<BTreeSet<Sequence>, CliError> {
            seqs.iter().map(|s| sequence(s)).collect()
        };
        let entries = self
            .u
            .iter()
            .map(|e| {
                Ok(StructureEntry {
                    label: e.label.clone(),
                    a: set(&e.a)?,
                    b: set(&e.b)?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(CooperationStructure::new(self.n, entries)?)
    }
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize)]
pub struct Triple {
    pub mu0: usize,
    pub mu1: usize,
    pub mu2: usize,
}

impl From<MuTriple> for Triple {
    fn from(m: MuTriple) -> Triple {
        Triple {
            mu0: m.mu0,
            mu1: m.mu1,
            mu2: m.mu2,
        }
    }
}

impl From<Triple> for MuTriple {
    fn from(t: Triple) -> MuTriple {
        MuTriple::new(t.mu0, t.mu1, t.mu2)
    }
}

#[derive(Debug, Deserialize, Serialize)]
pub struct CodewordRecord {
    pub m0: usize,
    pub m: usize,
    pub sequence: Vec<String>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct Stage0Record {
    pub y: Vec<String>,
    pub m0: usize,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct StageRecord {
    pub m0: usize,
    pub y: Vec<String>,
    pub m: usize,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct DecoderFile {
    pub stage0: Vec<Stage0Record>,
    pub stage1: Vec<StageRecord>,
    pub stage2: Vec<StageRecord>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct CodeFile {
    pub n: usize,
    pub mu: Triple,
    pub gamma1: Vec<CodewordRecord>,
    pub gamma2: Vec<CodewordRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoder: Option<DecoderFile>,
}

fn codewords(table: &BTreeMap<(usize, usize), Sequence>) -> Vec<CodewordRecord> {
    table
        .iter()
        .map(|(&(m0, m), s)| CodewordRecord {
            m0,
            m,
            sequence: tokens(s),
        })
        .collect()
}

fn stage(table: &BTreeMap<(usize, Sequence), usize>) -> Vec<StageRecord> {
    table
        .iter()
        .map(|((m0, y), &m)| StageRecord {
            m0: *m0,
            y: tokens(y),
            m,
        })
        .collect()
}

impl CodeFile {
    pub fn from_code(code: &Code) -> CodeFile {
        CodeFile {
            n: code.spec.n,
            mu: code.spec.mu.into(),
            gamma1: codewords(&code.gamma1),
            gamma2: codewords(&code.gamma2),
            decoder: code.decoder.as_ref().map(|d| DecoderFile {
                stage0: d
                    .stage0
                    .iter()
                    .map(|(y, &m0)| Stage0Record { y: tokens(y), m0 })
                    .collect(),
                stage1: stage(&d.stage1),
                stage2: stage(&d.stage2),
            }),
        }
    }

    pub fn into_code(self) -> Result<Code, CliError> {
        let table = |records: &[CodewordRecord], name: &str| -> Result<BTreeMap<(usize, usize), Sequence>, CliError> {
            let mut out = BTreeMap::new();
            for r in records {
                if out.insert((r.m0, r.m), sequence(&r.sequence)?).is_some() {
                    return Err(CliError::Usage(format!("{name} repeats entry ({}, {})", r.m0, r.m)));
                }
            }
            Ok(out)
        };
        let decoder = match self.decoder {
            None => None,
            Some(d) => {
                let mut tables = DecoderTables::default();
                for r in &d.stage0 {
                    tables.stage0.insert(sequence(&r.y)?, r.m0);
                }
                for (records, target) in [(&d.stage1, &mut tables.stage1), (&d.stage2, &mut tables.stage2)] {
                    for r in records {
                        target.insert((r.m0, sequence(&r.y)?), r.m);
                    }
                }
                Some(tables)
            }
        };
        Ok(Code {
            spec: MessageSpec::new(self.n, self.mu.into())?,
            gamma1: table(&self.gamma1, "gamma1")?,
            gamma2: table(&self.gamma2, "gamma2")?,
            decoder,
        })
    }
}
