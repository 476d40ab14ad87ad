//! Two-transmitter stationary memoryless multiple access channels, codes, and
//! the worlds they induce.
//!
//! Sequence variables are named `X1[k]`, `X2[k]`, `Y[k]` for `1 <= k <= n`;
//! messages are `M0`, `M1`, `M2` taking values `1..=mu`; the auxiliary
//! variable of a cooperation structure is `U`. Noise is always expanded over
//! the full product `W^n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::world::{show_tuple, Symbol, Tuple, World};

pub const DEFAULT_WORLD_CAP: usize = 1_000_000;

/// A length-`n` sequence of channel symbols.
pub type Sequence = Tuple;

/// Message counts `(mu0, mu1, mu2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MuTriple {
    pub mu0: usize,
    pub mu1: usize,
    pub mu2: usize,
}

impl MuTriple {
    pub const ONE: MuTriple = MuTriple::new(1, 1, 1);

    pub const fn new(mu0: usize, mu1: usize, mu2: usize) -> MuTriple {
        MuTriple { mu0, mu1, mu2 }
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.mu0, self.mu1, self.mu2]
    }

    /// Componentwise `<=`.
    pub fn le(&self, other: &MuTriple) -> bool {
        self.mu0 <= other.mu0 && self.mu1 <= other.mu1 && self.mu2 <= other.mu2
    }

    pub fn product(&self) -> u128 {
        self.mu0 as u128 * self.mu1 as u128 * self.mu2 as u128
    }

    /// All triples `t` with `ONE <= t <= self`, in lexicographic order.
    pub fn below(&self) -> impl Iterator<Item = MuTriple> + '_ {
        (1..=self.mu0)
            .flat_map(move |a| (1..=self.mu1).flat_map(move |b| (1..=self.mu2).map(move |c| MuTriple::new(a, b, c))))
    }
}

impl fmt::Display for MuTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mu0, self.mu1, self.mu2)
    }
}

/// Blocklength and message counts of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MessageSpec {
    pub n: usize,
    pub mu: MuTriple,
}

impl MessageSpec {
    pub fn new(n: usize, mu: MuTriple) -> Result<MessageSpec> {
        if n == 0 {
            return Err(Error::InvalidMessageSpec("blocklength must be positive".into()));
        }
        if mu.mu0 == 0 || mu.mu1 == 0 || mu.mu2 == 0 {
            return Err(Error::InvalidMessageSpec("message counts must be positive".into()));
        }
        Ok(MessageSpec { n, mu })
    }

    /// `log2(mu_i) / n` for each message.
    pub fn rates(&self) -> [f64; 3] {
        self.mu.as_array().map(|m| (m as f64).log2() / self.n as f64)
    }
}

/// One row of a channel law: input triple and its output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub x1: String,
    pub x2: String,
    pub w: String,
    pub y: String,
}

impl Transition {
    pub fn new(x1: &str, x2: &str, w: &str, y: &str) -> Transition {
        Transition {
            x1: x1.into(),
            x2: x2.into(),
            w: w.into(),
            y: y.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Alphabet {
    symbols: Vec<Symbol>,
    index: BTreeMap<Symbol, usize>,
}

impl Alphabet {
    fn new(name: &'static str, tokens: &[String]) -> Result<Alphabet> {
        if tokens.is_empty() {
            return Err(Error::EmptyAlphabet(name));
        }
        let mut index = BTreeMap::new();
        for t in tokens {
            let s = Symbol::new(t)?;
            if index.insert(s, 0).is_some() {
                return Err(Error::DuplicateSymbol {
                    alphabet: name,
                    symbol: t.clone(),
                });
            }
        }
        let symbols: Vec<Symbol> = index.keys().cloned().collect();
        for (i, s) in symbols.iter().enumerate() {
            index.insert(s.clone(), i);
        }
        Ok(Alphabet { symbols, index })
    }

    fn lookup(&self, name: &'static str, token: &str) -> Result<usize> {
        Symbol::new(token)
            .ok()
            .and_then(|s| self.index.get(&s).copied())
            .ok_or_else(|| Error::UnknownSymbol {
                alphabet: name,
                symbol: token.to_string(),
            })
    }

    fn len(&self) -> usize {
        self.symbols.len()
    }
}

/// `Y = f(X1, X2, W)` as a total table over the three input alphabets.
/// Alphabets are kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Channel {
    x1: Alphabet,
    x2: Alphabet,
    w: Alphabet,
    y: Alphabet,
    table: Vec<usize>,
}

impl Channel {
    pub fn new(
        x1: &[String],
        x2: &[String],
        w: &[String],
        y: &[String],
        transitions: &[Transition],
    ) -> Result<Channel> {
        let x1 = Alphabet::new("x1", x1)?;
        let x2 = Alphabet::new("x2", x2)?;
        let w = Alphabet::new("w", w)?;
        let y = Alphabet::new("y", y)?;
        let mut table = vec![usize::MAX; x1.len() * x2.len() * w.len()];
        for t in transitions {
            let (i, j, k) = (x1.lookup("x1", &t.x1)?, x2.lookup("x2", &t.x2)?, w.lookup("w", &t.w)?);
            let out = y.lookup("y", &t.y)?;
            let slot = &mut table[(i * x2.len() + j) * w.len() + k];
            if *slot != usize::MAX {
                return Err(Error::DuplicateTransition {
                    x1: t.x1.clone(),
                    x2: t.x2.clone(),
                    w: t.w.clone(),
                });
            }
            *slot = out;
        }
        if let Some(pos) = table.iter().position(|&v| v == usize::MAX) {
            let k = pos % w.len();
            let j = (pos / w.len()) % x2.len();
            let i = pos / (w.len() * x2.len());
            return Err(Error::MissingTransition {
                x1: x1.symbols[i].to_string(),
                x2: x2.symbols[j].to_string(),
                w: w.symbols[k].to_string(),
            });
        }
        Ok(Channel { x1, x2, w, y, table })
    }

    /// Builds a channel from a closure over string tokens.
    pub fn from_fn(x1: &[&str], x2: &[&str], w: &[&str], f: impl Fn(&str, &str, &str) -> String) -> Result<Channel> {
        let mut transitions = Vec::new();
        let mut outputs = BTreeSet::new();
        for a in x1 {
            for b in x2 {
                for n in w {
                    let y = f(a, b, n);
                    outputs.insert(y.clone());
                    transitions.push(Transition::new(a, b, n, &y));
                }
            }
        }
        let owned = |v: &[&str]| -> Vec<String> { v.iter().map(|s| s.to_string()).collect() };
        let y: Vec<String> = outputs.into_iter().collect();
        Channel::new(&owned(x1), &owned(x2), &owned(w), &y, &transitions)
    }

    pub fn x1_alphabet(&self) -> &[Symbol] {
        &self.x1.symbols
    }

    pub fn x2_alphabet(&self) -> &[Symbol] {
        &self.x2.symbols
    }

    pub fn w_alphabet(&self) -> &[Symbol] {
        &self.w.symbols
    }

    pub fn y_alphabet(&self) -> &[Symbol] {
        &self.y.symbols
    }

    pub fn transitions(&self) -> Vec<Transition> {
        let mut out = Vec::with_capacity(self.table.len());
        for (i, a) in self.x1.symbols.iter().enumerate() {
            for (j, b) in self.x2.symbols.iter().enumerate() {
                for (k, n) in self.w.symbols.iter().enumerate() {
                    let y = &self.y.symbols[self.index_output(i, j, k)];
                    out.push(Transition::new(a.as_str(), b.as_str(), n.as_str(), y.as_str()));
                }
            }
        }
        out
    }

    pub(crate) fn index_output(&self, i: usize, j: usize, k: usize) -> usize {
        self.table[(i * self.x2.len() + j) * self.w.len() + k]
    }

    pub fn output(&self, x1: &Symbol, x2: &Symbol, w: &Symbol) -> Result<&Symbol> {
        let i = self.x1.lookup("x1", x1.as_str())?;
        let j = self.x2.lookup("x2", x2.as_str())?;
        let k = self.w.lookup("w", w.as_str())?;
        Ok(&self.y.symbols[self.index_output(i, j, k)])
    }

    /// Letter-by-letter output for a given noise sequence.
    pub fn transmit(&self, a: &[Symbol], b: &[Symbol], noise: &[Symbol]) -> Result<Sequence> {
        if a.len() != b.len() || a.len() != noise.len() {
            return Err(Error::CodeMismatch("sequence lengths differ".into()));
        }
        a.iter()
            .zip(b)
            .zip(noise)
            .map(|((x, y), w)| self.output(x, y, w).cloned())
            .collect()
    }

    pub fn x1_sequences(&self, n: usize) -> Vec<Sequence> {
        sequences(&self.x1.symbols, n)
    }

    pub fn x2_sequences(&self, n: usize) -> Vec<Sequence> {
        sequences(&self.x2.symbols, n)
    }

    pub fn noise_sequences(&self, n: usize) -> Vec<Sequence> {
        sequences(&self.w.symbols, n)
    }

    pub fn output_sequences(&self, n: usize) -> Vec<Sequence> {
        sequences(&self.y.symbols, n)
    }

    pub(crate) fn check_sequence(&self, which: usize, seq: &[Symbol], n: usize) -> Result<()> {
        let (alpha, name) = match which {
            1 => (&self.x1, "x1"),
            _ => (&self.x2, "x2"),
        };
        if seq.len() != n {
            return Err(Error::CodeMismatch(format!(
                "sequence {} has length {}, expected {n}",
                show_tuple(seq),
                seq.len()
            )));
        }
        for s in seq {
            alpha.lookup(name, s.as_str())?;
        }
        Ok(())
    }
}

/// All length-`n` words over `alphabet`, lexicographic in alphabet order.
pub fn sequences(alphabet: &[Symbol], n: usize) -> Vec<Sequence> {
    let mut out: Vec<Sequence> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Variable names `prefix[1]..prefix[n]`.
pub fn sequence_vars(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}[{k}]")).collect()
}

pub(crate) fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

/// One auxiliary value `u` with its permitted input-sequence sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StructureEntry {
    pub label: String,
    pub a: BTreeSet<Sequence>,
    pub b: BTreeSet<Sequence>,
}

/// A union-of-products joint range for `(U, X1^n, X2^n)`, which makes
/// `X1^n <-> U <-> X2^n` hold by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CooperationStructure {
    n: usize,
    entries: Vec<StructureEntry>,
}

impl CooperationStructure {
    pub fn new(n: usize, entries: Vec<StructureEntry>) -> Result<CooperationStructure> {
        if n == 0 {
            return Err(Error::InvalidStructure("blocklength must be positive".into()));
        }
        if entries.is_empty() {
            return Err(Error::InvalidStructure("no auxiliary values".into()));
        }
        let mut labels = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for e in &entries {
            if e.label.is_empty() {
                return Err(Error::InvalidStructure("empty label".into()));
            }
            if !labels.insert(e.label.as_str()) {
                return Err(Error::InvalidStructure(format!("duplicate label `{}`", e.label)));
            }
            if e.a.is_empty() || e.b.is_empty() {
                return Err(Error::InvalidStructure(format!("empty input set for `{}`", e.label)));
            }
            if let Some(bad) = e.a.iter().chain(&e.b).find(|s| s.len() != n) {
                return Err(Error::InvalidStructure(format!(
                    "sequence {} for `{}` does not have length {n}",
                    show_tuple(bad),
                    e.label
                )));
            }
            if !pairs.insert((&e.a, &e.b)) {
                return Err(Error::InvalidStructure(format!(
                    "`{}` repeats the input sets of another label",
                    e.label
                )));
            }
        }
        Ok(CooperationStructure { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[StructureEntry] {
        &self.entries
    }

    pub fn entry(&self, label: &str) -> Option<&StructureEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

/// Staged decoder lookup tables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecoderTables {
    pub stage0: BTreeMap<Sequence, usize>,
    pub stage1: BTreeMap<(usize, Sequence), usize>,
    pub stage2: BTreeMap<(usize, Sequence), usize>,
}

impl DecoderTables {
    pub fn decode(&self, y: &[Symbol]) -> Option<MuTriple> {
        let m0 = *self.stage0.get(y)?;
        let key = (m0, y.to_vec());
        let m1 = *self.stage1.get(&key)?;
        let m2 = *self.stage2.get(&key)?;
        Some(MuTriple::new(m0, m1, m2))
    }
}

/// Encoders `gamma1(m0, m1)`, `gamma2(m0, m2)` and optional decoder tables.
/// Message indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    pub spec: MessageSpec,
    pub gamma1: BTreeMap<(usize, usize), Sequence>,
    pub gamma2: BTreeMap<(usize, usize), Sequence>,
    pub decoder: Option<DecoderTables>,
}

impl Code {
    /// Checks totality of the encoders and that every codeword fits the channel.
    pub fn validate(&self, channel: &Channel) -> Result<()> {
        let MessageSpec { n, mu } = self.spec;
        for (which, table, count) in [(1, &self.gamma1, mu.mu1), (2, &self.gamma2, mu.mu2)] {
            if table.len() != mu.mu0 * count {
                return Err(Error::CodeMismatch(format!(
                    "gamma{which} has {} entries, expected {}",
                    table.len(),
                    mu.mu0 * count
                )));
            }
            for (&(m0, m), seq) in table {
                if !(1..=mu.mu0).contains(&m0) || !(1..=count).contains(&m) {
                    return Err(Error::CodeMismatch(format!(
                        "gamma{which} entry ({m0}, {m}) outside the message ranges"
                    )));
                }
                channel.check_sequence(which, seq, n)?;
            }
        }
        Ok(())
    }

    pub fn codeword1(&self, m0: usize, m1: usize) -> &Sequence {
        &self.gamma1[&(m0, m1)]
    }

    pub fn codeword2(&self, m0: usize, m2: usize) -> &Sequence {
        &self.gamma2[&(m0, m2)]
    }

    /// The sub-code on messages `<= mu`; decoder entries for dropped messages
    /// are removed.
    pub fn restrict(&self, mu: MuTriple) -> Result<Code> {
        if !MuTriple::ONE.le(&mu) || !mu.le(&self.spec.mu) {
            return Err(Error::InvalidMessageSpec(format!(
                "{mu} is not within {}",
                self.spec.mu
            )));
        }
        let keep = |table: &BTreeMap<(usize, usize), Sequence>, limit: usize| {
            table
                .iter()
                .filter(|(&(m0, m), _)| m0 <= mu.mu0 && m <= limit)
                .map(|(k, v)| (*k, v.clone()))
                .collect()
        };
        let decoder = self.decoder.as_ref().map(|d| DecoderTables {
            stage0: d
                .stage0
                .iter()
                .filter(|(_, &m0)| m0 <= mu.mu0)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
            stage1: d
                .stage1
                .iter()
                .filter(|((m0, _), &m)| *m0 <= mu.mu0 && m <= mu.mu1)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
            stage2: d
                .stage2
                .iter()
                .filter(|((m0, _), &m)| *m0 <= mu.mu0 && m <= mu.mu2)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        });
        Ok(Code {
            spec: MessageSpec::new(self.spec.n, mu)?,
            gamma1: keep(&self.gamma1, mu.mu1),
            gamma2: keep(&self.gamma2, mu.mu2),
            decoder,
        })
    }
}

fn check_cap(outcomes: u128, cap: usize) -> Result<()> {
    if outcomes > cap as u128 {
        return Err(Error::WorldTooLarge { outcomes, cap });
    }
    Ok(())
}

fn message_symbol(m: usize) -> Symbol {
    Symbol::new(&m.to_string()).expect("nonempty")
}

/// Variables of a coded world: messages, both input sequences, output sequence.
pub fn coded_world_variables(n: usize) -> Vec<String> {
    let mut vars = vec!["M0".to_string(), "M1".to_string(), "M2".to_string()];
    vars.extend(sequence_vars("X1", n));
    vars.extend(sequence_vars("X2", n));
    vars.extend(sequence_vars("Y", n));
    vars
}

/// Variables of a structure world: `U`, both input sequences, output sequence.
pub fn structure_world_variables(n: usize) -> Vec<String> {
    let mut vars = vec!["U".to_string()];
    vars.extend(sequence_vars("X1", n));
    vars.extend(sequence_vars("X2", n));
    vars.extend(sequence_vars("Y", n));
    vars
}

/// World over `(M0, M1, M2, X1^n, X2^n, Y^n)` enumerating every message
/// triple and noise sequence.
pub fn build_coded_world(channel: &Channel, code: &Code, cap: usize) -> Result<World> {
    code.validate(channel)?;
    let MessageSpec { n, mu } = code.spec;
    let noise = channel.noise_sequences(n);
    check_cap(mu.product() * noise.len() as u128, cap)?;
    let mut outcomes = Vec::new();
    for t in mu.below() {
        let a = code.codeword1(t.mu0, t.mu1);
        let b = code.codeword2(t.mu0, t.mu2);
        for w in &noise {
            let y = channel.transmit(a, b, w)?;
            let mut o = vec![message_symbol(t.mu0), message_symbol(t.mu1), message_symbol(t.mu2)];
            o.extend(a.iter().cloned());
            o.extend(b.iter().cloned());
            o.extend(y);
            outcomes.push(o);
        }
    }
    World::new(&coded_world_variables(n), outcomes)
}

/// World `{(u, a, b, f(a, b, w)) : a in A_u, b in B_u, w in W^n}`.
pub fn build_structure_world(channel: &Channel, structure: &CooperationStructure, cap: usize) -> Result<World> {
    let n = structure.n();
    for e in structure.entries() {
        for s in &e.a {
            channel.check_sequence(1, s, n)?;
        }
        for s in &e.b {
            channel.check_sequence(2, s, n)?;
        }
    }
    let noise = channel.noise_sequences(n);
    let total: u128 = structure
        .entries()
        .iter()
        .map(|e| (e.a.len() * e.b.len()) as u128 * noise.len() as u128)
        .sum();
    check_cap(total, cap)?;
    let mut outcomes = Vec::with_capacity(total as usize);
    for e in structure.entries() {
        let u = Symbol::new(&e.label)?;
        for a in &e.a {
            for b in &e.b {
                for w in &noise {
                    let mut o = Vec::with_capacity(1 + 3 * n);
                    o.push(u.clone());
                    o.extend(a.iter().cloned());
                    o.extend(b.iter().cloned());
                    o.extend(channel.transmit(a, b, w)?);
                    outcomes.push(o);
                }
            }
        }
    }
    World::new(&structure_world_variables(n), outcomes)
}

/// Verifies both chains `X1^n <-> U <-> X2^n` and `U <-> (X1^n, X2^n) <-> Y^n`
/// on a world laid out like [`build_structure_world`] output.
pub fn check_structure_markov(world: &World) -> Result<bool> {
    let n = (1..).take_while(|k| world.has_variable(&format!("X1[{k}]"))).count();
    if n == 0 || !world.has_variable("U") {
        return Err(Error::UnknownVariable("U / X1[1]".into()));
    }
    let x1 = sequence_vars("X1", n);
    let x2 = sequence_vars("X2", n);
    let y = sequence_vars("Y", n);
    let inputs: Vec<String> = x1.iter().chain(&x2).cloned().collect();
    let chain1 = world.is_markov(&refs(&x1), &["U"], &refs(&x2))?;
    let chain2 = world.is_markov(&["U"], &refs(&inputs), &refs(&y))?;
    Ok(chain1 && chain2)
}

/// Channels used throughout tests, benches and fixtures.
pub mod presets {
    use super::Channel;

    const BITS: [&str; 2] = ["0", "1"];

    fn bit(s: &str) -> u8 {
        s.parse().expect("binary symbol")
    }

    /// `Y = X1 + X2` over the integers, noiseless.
    pub fn binary_adder() -> Channel {
        Channel::from_fn(&BITS, &BITS, &["0"], |a, b, _| (bit(a) + bit(b)).to_string()).expect("valid preset")
    }

    pub fn binary_and() -> Channel {
        Channel::from_fn(&BITS, &BITS, &["0"], |a, b, _| (bit(a) & bit(b)).to_string()).expect("valid preset")
    }

    pub fn binary_xor() -> Channel {
        Channel::from_fn(&BITS, &BITS, &["0"], |a, b, _| (bit(a) ^ bit(b)).to_string()).expect("valid preset")
    }

    /// `Y = (X1, X2)`.
    pub fn identity_pair() -> Channel {
        Channel::from_fn(&BITS, &BITS, &["0"], |a, b, _| format!("{a}{b}")).expect("valid preset")
    }

    /// Single-user `Y = (X + W) mod 5` with `W in {0, 1}`; `X2` is a singleton.
    pub fn pentagon() -> Channel {
        let x: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let x: Vec<&str> = x.iter().map(String::as_str).collect();
        Channel::from_fn(&x, &["0"], &BITS, |a, _, w| {
            let s: u8 = a.parse::<u8>().unwrap() + bit(w);
            (s % 5).to_string()
        })
        .expect("valid preset")
    }

    /// Output ignores both inputs.
    pub fn constant() -> Channel {
        Channel::from_fn(&BITS, &BITS, &["0"], |_, _, _| "c".to_string()).expect("valid preset")
    }

    /// The corpus of named channels.
    pub fn corpus() -> Vec<(&'static str, Channel)> {
        vec![
            ("adder", binary_adder()),
            ("and", binary_and()),
            ("xor", binary_xor()),
            ("identity", identity_pair()),
            ("pentagon", pentagon()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::world::tuple;

    fn seqs(items: &[&[&str]]) -> BTreeSet<Sequence> {
        items.iter().map(|s| tuple(s).unwrap()).collect()
    }

    fn entry(label: &str, a: &[&[&str]], b: &[&[&str]]) -> StructureEntry {
        StructureEntry {
            label: label.into(),
            a: seqs(a),
            b: seqs(b),
        }
    }

    fn code(n: usize, mu: MuTriple, g1: &[&[&str]], g2: &[&[&str]]) -> Code {
        let mut gamma1 = BTreeMap::new();
        let mut gamma2 = BTreeMap::new();
        let mut it = g1.iter();
        for m0 in 1..=mu.mu0 {
            for m in 1..=mu.mu1 {
                gamma1.insert((m0, m), tuple(it.next().unwrap()).unwrap());
            }
        }
        let mut it = g2.iter();
        for m0 in 1..=mu.mu0 {
            for m in 1..=mu.mu2 {
                gamma2.insert((m0, m), tuple(it.next().unwrap()).unwrap());
            }
        }
        Code {
            spec: MessageSpec::new(n, mu).unwrap(),
            gamma1,
            gamma2,
            decoder: None,
        }
    }

    #[test]
    fn channel_tables() {
        assert_eq!(presets::binary_adder().transitions().len(), 4);
        assert_eq!(presets::pentagon().transitions().len(), 10);
        let ch = presets::pentagon();
        let y = ch
            .output(&"4".parse().unwrap(), &"0".parse().unwrap(), &"1".parse().unwrap())
            .unwrap();
        assert_eq!(y.as_str(), "0");
    }

    #[test]
    fn channel_validation() {
        let s = |v: &[&str]| -> Vec<String> { v.iter().map(|x| x.to_string()).collect() };
        let bits = s(&["0", "1"]);
        let mut rows = vec![
            Transition::new("0", "0", "0", "0"),
            Transition::new("0", "1", "0", "1"),
            Transition::new("1", "0", "0", "1"),
        ];
        let err = Channel::new(&bits, &bits, &s(&["0"]), &s(&["0", "1", "2"]), &rows).unwrap_err();
        assert_eq!(
            err,
            Error::MissingTransition {
                x1: "1".into(),
                x2: "1".into(),
                w: "0".into()
            }
        );
        rows.push(Transition::new("1", "1", "0", "2"));
        rows.push(Transition::new("1", "1", "0", "2"));
        assert!(matches!(
            Channel::new(&bits, &bits, &s(&["0"]), &s(&["0", "1", "2"]), &rows),
            Err(Error::DuplicateTransition { .. })
        ));
        rows.pop();
        rows[3].y = "9".into();
        assert!(matches!(
            Channel::new(&bits, &bits, &s(&["0"]), &s(&["0", "1", "2"]), &rows),
            Err(Error::UnknownSymbol { alphabet: "y", .. })
        ));
    }

    #[test]
    fn coded_worlds() {
        let adder = presets::binary_adder();
        let c = code(1, MuTriple::new(1, 2, 1), &[&["0"], &["1"]], &[&["0"]]);
        let w = build_coded_world(&adder, &c, DEFAULT_WORLD_CAP).unwrap();
        assert_eq!(w.len(), 2);
        for o in w.outcomes() {
            assert_eq!(o[3], o[5], "Y equals X1 when X2 is fixed at 0");
        }

        let c = code(1, MuTriple::ONE, &[&["1"]], &[&["0"]]);
        assert_eq!(build_coded_world(&adder, &c, DEFAULT_WORLD_CAP).unwrap().len(), 1);

        let pent = presets::pentagon();
        let c = code(1, MuTriple::new(1, 2, 1), &[&["0"], &["2"]], &[&["0"]]);
        let w = build_coded_world(&pent, &c, DEFAULT_WORLD_CAP).unwrap();
        assert_eq!(w.len(), 4);
        let fam = w.conditional_family(&["Y[1]"], &["M1"]).unwrap();
        let ranges: Vec<Vec<&str>> = fam
            .entries
            .values()
            .map(|r| r.points().iter().map(|p| p[0].as_str()).collect())
            .collect();
        assert_eq!(ranges, vec![vec!["0", "1"], vec!["2", "3"]]);

        let bad = code(1, MuTriple::ONE, &[&["7"]], &[&["0"]]);
        assert!(build_coded_world(&adder, &bad, DEFAULT_WORLD_CAP).is_err());
    }

    #[test]
    fn coded_world_respects_cap() {
        let c = code(1, MuTriple::new(1, 2, 1), &[&["0"], &["2"]], &[&["0"]]);
        assert!(matches!(
            build_coded_world(&presets::pentagon(), &c, 3),
            Err(Error::WorldTooLarge { outcomes: 4, cap: 3 })
        ));
    }

    #[test]
    fn structure_worlds() {
        let adder = presets::binary_adder();
        let s = CooperationStructure::new(
            1,
            vec![
                entry("u1", &[&["0"]], &[&["0"]]),
                entry("u2", &[&["0"]], &[&["1"]]),
                entry("u3", &[&["1"]], &[&["1"]]),
            ],
        )
        .unwrap();
        let w = build_structure_world(&adder, &s, DEFAULT_WORLD_CAP).unwrap();
        assert_eq!(w.len(), 3);
        let ys: BTreeSet<&str> = w.outcomes().iter().map(|o| o[3].as_str()).collect();
        assert_eq!(ys.len(), 3);
        assert!(check_structure_markov(&w).unwrap());

        let full = CooperationStructure::new(1, vec![entry("u", &[&["0"], &["1"]], &[&["0"], &["1"]])]).unwrap();
        assert_eq!(
            build_structure_world(&adder, &full, DEFAULT_WORLD_CAP).unwrap().len(),
            4
        );

        assert!(CooperationStructure::new(1, vec![entry("u", &[], &[&["0"]])]).is_err());
        assert!(CooperationStructure::new(
            1,
            vec![entry("u", &[&["0"]], &[&["0"]]), entry("v", &[&["0"]], &[&["0"]])]
        )
        .is_err());
        assert!(CooperationStructure::new(1, vec![entry("u", &[&["0", "1"]], &[&["0"]])]).is_err());
    }

    #[test]
    fn markov_violations_are_detected() {
        let vars = ["U", "X1[1]", "X2[1]", "Y[1]"];
        let correlated = World::from_strs(&vars, &[&["u", "0", "0", "0"], &["u", "1", "1", "2"]]).unwrap();
        assert!(!check_structure_markov(&correlated).unwrap());

        let u_dependent = World::from_strs(&vars, &[&["u", "0", "0", "0"], &["v", "0", "0", "1"]]).unwrap();
        assert!(!check_structure_markov(&u_dependent).unwrap());
    }

    #[test]
    fn rates() {
        let spec = MessageSpec::new(2, MuTriple::new(1, 5, 4)).unwrap();
        let r = spec.rates();
        assert_eq!(r[0], 0.0);
        assert!((r[1] - 5f64.log2() / 2.0).abs() < 1e-12);
        assert_eq!(r[2], 1.0);
        assert!(MessageSpec::new(0, MuTriple::ONE).is_err());
        assert!(MessageSpec::new(1, MuTriple::new(0, 1, 1)).is_err());
    }

    #[test]
    fn restricting_codes() {
        let c = code(1, MuTriple::new(1, 2, 2), &[&["0"], &["1"]], &[&["0"], &["1"]]);
        let r = c.restrict(MuTriple::new(1, 2, 1)).unwrap();
        assert_eq!(r.gamma2.len(), 1);
        assert!(c.restrict(MuTriple::new(2, 1, 1)).is_err());
    }
}
