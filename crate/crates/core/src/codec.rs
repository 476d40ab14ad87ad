//! Zero-error code synthesis from a cooperation structure, staged decoding,
//! and exhaustive verification.
//!
//! Synthesis picks one auxiliary value per cell of `[[U|Y^n]]*` as the
//! common-message representatives. For each representative `u` and input
//! `i`, codewords are the smallest members of the first `mu_i` cells of
//! `[[Xi^n | Y^n, U=u]]*`, where `mu_i` is the cell count minimized over every
//! `u`. Decoding reads the cell of `y` in each matching partition.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mac::{
    build_coded_world, build_structure_world, refs, sequence_vars, Channel, Code, CooperationStructure, DecoderTables,
    MessageSpec, MuTriple, Sequence,
};
use crate::overlap::overlap_partition;
use crate::world::{show_tuple, Assignment, Symbol, World};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisResult {
    pub code: Code,
    pub achieved: MuTriple,
    /// `representatives[m0 - 1]` is the label `u(m0)`.
    pub representatives: Vec<String>,
    /// Cell label of each codeword, keyed by `(m0, i)` for input `i` in {1, 2}.
    pub cell_assignments: BTreeMap<(usize, usize), Vec<usize>>,
}

pub fn synthesize_code(channel: &Channel, structure: &CooperationStructure, cap: usize) -> Result<SynthesisResult> {
    let n = structure.n();
    let world = build_structure_world(channel, structure, cap)?;
    let x1 = sequence_vars("X1", n);
    let x2 = sequence_vars("X2", n);
    let y = sequence_vars("Y", n);
    let (x1, x2, y) = (refs(&x1), refs(&x2), refs(&y));

    let u_partition = overlap_partition(&world, &["U"], &y)?;
    let representatives: Vec<Symbol> = u_partition.cells().iter().map(|c| c[0][0].clone()).collect();
    if representatives.is_empty() {
        return Err(Error::Internal("structure world has no auxiliary values".into()));
    }

    // Conditional partitions for every u; the rate uses the minimum over all.
    let mut sub_worlds = BTreeMap::new();
    let mut partitions = BTreeMap::new();
    for e in structure.entries() {
        let u = Symbol::new(&e.label)?;
        let sub = world.restrict(&Assignment::new(&["U"], vec![u.clone()])?)?;
        let p1 = overlap_partition(&sub, &x1, &y)?;
        let p2 = overlap_partition(&sub, &x2, &y)?;
        partitions.insert(u.clone(), (p1, p2));
        sub_worlds.insert(u, sub);
    }
    let mu1 = partitions.values().map(|(p, _)| p.len()).min().expect("nonempty");
    let mu2 = partitions.values().map(|(_, p)| p.len()).min().expect("nonempty");
    let achieved = MuTriple::new(representatives.len(), mu1, mu2);

    let mut gamma1 = BTreeMap::new();
    let mut gamma2 = BTreeMap::new();
    let mut cell_assignments = BTreeMap::new();
    for (idx, u) in representatives.iter().enumerate() {
        let m0 = idx + 1;
        let (p1, p2) = &partitions[u];
        for m in 1..=mu1 {
            gamma1.insert((m0, m), p1.cells()[m - 1][0].clone());
        }
        for m in 1..=mu2 {
            gamma2.insert((m0, m), p2.cells()[m - 1][0].clone());
        }
        cell_assignments.insert((m0, 1), (0..mu1).collect());
        cell_assignments.insert((m0, 2), (0..mu2).collect());
    }

    let decoder = decoder_tables(
        &world,
        &representatives,
        &sub_worlds,
        &partitions,
        [&x1, &x2],
        &y,
        achieved,
    )?;
    let code = Code {
        spec: MessageSpec::new(n, achieved)?,
        gamma1,
        gamma2,
        decoder: Some(decoder),
    };
    Ok(SynthesisResult {
        code,
        achieved,
        representatives: representatives.iter().map(|u| u.to_string()).collect(),
        cell_assignments,
    })
}

type PartitionPair = (crate::overlap::Partition, crate::overlap::Partition);

fn decoder_tables(
    world: &World,
    representatives: &[Symbol],
    sub_worlds: &BTreeMap<Symbol, World>,
    partitions: &BTreeMap<Symbol, PartitionPair>,
    inputs: [&[&str]; 2],
    y: &[&str],
    achieved: MuTriple,
) -> Result<DecoderTables> {
    let u_col = world.columns(&["U"])?;
    let y_cols = world.columns(y)?;
    let u_partition = overlap_partition(world, &["U"], y)?;
    let mut tables = DecoderTables::default();

    // Stage 0: the [[Y|U]]* cell of y matches the [[U|Y]]* cell holding u(m0).
    for (seq, us) in world.group(&y_cols, &u_col) {
        let first = us.iter().next().expect("nonempty");
        let label = u_partition.label_of(first).expect("u in ground");
        tables.stage0.insert(seq, label + 1);
    }

    // Stages 1 and 2: the cell of y in [[Y | Xi, U=u(m0)]]* matches the cell
    // of [[Xi | Y, U=u(m0)]]* holding the codeword.
    for (idx, u) in representatives.iter().enumerate() {
        let m0 = idx + 1;
        let sub = &sub_worlds[u];
        let (p1, p2) = &partitions[u];
        for (which, p, limit) in [(1, p1, achieved.mu1), (2, p2, achieved.mu2)] {
            let x_cols = world.columns(inputs[which - 1])?;
            for (seq, xs) in sub.group(&y_cols, &x_cols) {
                let first = xs.iter().next().expect("nonempty");
                let label = p.label_of(first).expect("x in ground");
                if label < limit {
                    let table = if which == 1 {
                        &mut tables.stage1
                    } else {
                        &mut tables.stage2
                    };
                    table.insert((m0, seq), label + 1);
                }
            }
        }
    }
    Ok(tables)
}

/// Three-stage decoding of an output sequence.
pub fn decode(result: &SynthesisResult, y: &[Symbol]) -> Result<MuTriple> {
    result
        .code
        .decoder
        .as_ref()
        .and_then(|t| t.decode(y))
        .ok_or_else(|| Error::InadmissibleOutput(show_tuple(y)))
}

/// A message triple and noise realization that the decoder gets wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub messages: MuTriple,
    pub noise: Sequence,
    pub y: Sequence,
    /// What the decoder produced; `None` when `y` is ambiguous or undecodable.
    pub decoded: Option<MuTriple>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub certificate: Option<Certificate>,
}

/// Decoder for codes without tables: `y` decodes iff `[[M0,M1,M2 | y]]` is a
/// singleton in the coded world.
fn range_decoder(channel: &Channel, code: &Code, cap: usize) -> Result<BTreeMap<Sequence, MuTriple>> {
    let world = build_coded_world(channel, code, cap)?;
    let n = code.spec.n;
    let y_cols = world.columns(&refs(&sequence_vars("Y", n)))?;
    let m_cols = world.columns(&["M0", "M1", "M2"])?;
    let mut table = BTreeMap::new();
    for (y, ms) in world.group(&y_cols, &m_cols) {
        if ms.len() == 1 {
            let m = ms.into_iter().next().expect("singleton");
            let parse = |s: &Symbol| -> usize { s.as_str().parse().expect("message index") };
            table.insert(y, MuTriple::new(parse(&m[0]), parse(&m[1]), parse(&m[2])));
        }
    }
    Ok(table)
}

/// Enumerates every message triple and noise sequence and checks that the
/// decoder returns the transmitted triple. Uses the code's decoder tables when
/// present, otherwise the conditional-range decoder. The certificate is the
/// first failure in lexicographic (triple, noise) order.
pub fn verify_zero_error(channel: &Channel, code: &Code, cap: usize) -> Result<Verdict> {
    code.validate(channel)?;
    let fallback = match &code.decoder {
        Some(_) => None,
        None => Some(range_decoder(channel, code, cap)?),
    };
    let noise = channel.noise_sequences(code.spec.n);
    for t in code.spec.mu.below() {
        let a = code.codeword1(t.mu0, t.mu1);
        let b = code.codeword2(t.mu0, t.mu2);
        for w in &noise {
            let y = channel.transmit(a, b, w)?;
            let decoded = match (&code.decoder, &fallback) {
                (Some(tables), _) => tables.decode(&y),
                (None, Some(table)) => table.get(&y).copied(),
                (None, None) => unreachable!(),
            };
            if decoded != Some(t) {
                return Ok(Verdict {
                    ok: false,
                    certificate: Some(Certificate {
                        messages: t,
                        noise: w.clone(),
                        y,
                        decoded,
                    }),
                });
            }
        }
    }
    Ok(Verdict {
        ok: true,
        certificate: None,
    })
}

/// Decoder-free test: output sets of distinct message triples are pairwise
/// disjoint.
pub fn oracle_decodable(channel: &Channel, code: &Code) -> Result<bool> {
    code.validate(channel)?;
    let noise = channel.noise_sequences(code.spec.n);
    let mut owner: BTreeMap<Sequence, MuTriple> = BTreeMap::new();
    for t in code.spec.mu.below() {
        let a = code.codeword1(t.mu0, t.mu1);
        let b = code.codeword2(t.mu0, t.mu2);
        for w in &noise {
            let y = channel.transmit(a, b, w)?;
            if let Some(prev) = owner.insert(y, t) {
                if prev != t {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
