//! Confusability graphs of single-user channels and their strong powers.

use crate::error::{Error, Result};
use crate::mac::{Channel, Sequence};

/// Inputs are adjacent when some noise values send them to a common output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfusabilityGraph {
    vertices: Vec<Sequence>,
    adjacent: Vec<Vec<bool>>,
}

impl ConfusabilityGraph {
    /// Graph on input sequences of length `n`, for a channel whose second
    /// input alphabet has one symbol. Computed letterwise and raised to the
    /// strong power.
    pub fn of_channel(channel: &Channel, n: usize) -> Result<ConfusabilityGraph> {
        if channel.x2_alphabet().len() != 1 {
            return Err(Error::Unsupported(
                "confusability needs a one-symbol second input alphabet".into(),
            ));
        }
        let fixed = &channel.x2_alphabet()[0];
        let letters = channel.x1_alphabet();
        let outputs = letters
            .iter()
            .map(|x| {
                channel
                    .w_alphabet()
                    .iter()
                    .map(|w| channel.output(x, fixed, w).cloned())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let confusable = |i: usize, j: usize| i == j || outputs[i].iter().any(|y| outputs[j].contains(y));
        let index = |seq: &Sequence| -> Vec<usize> {
            seq.iter()
                .map(|s| letters.iter().position(|l| l == s).expect("alphabet letter"))
                .collect()
        };
        let vertices = channel.x1_sequences(n);
        let idx: Vec<Vec<usize>> = vertices.iter().map(index).collect();
        let adjacent = (0..vertices.len())
            .map(|a| {
                (0..vertices.len())
                    .map(|b| a != b && (0..n).all(|k| confusable(idx[a][k], idx[b][k])))
                    .collect()
            })
            .collect();
        Ok(ConfusabilityGraph { vertices, adjacent })
    }

    pub fn vertices(&self) -> &[Sequence] {
        &self.vertices
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent[a][b]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacent
            .iter()
            .map(|r| r.iter().filter(|&&e| e).count())
            .sum::<usize>()
            / 2
    }

    /// A maximum independent set, as vertex indices in increasing order.
    pub fn maximum_independent_set(&self) -> Vec<usize> {
        fn go(g: &ConfusabilityGraph, cands: &[usize], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
            if chosen.len() > best.len() {
                *best = chosen.clone();
            }
            for (i, &v) in cands.iter().enumerate() {
                if chosen.len() + cands.len() - i <= best.len() {
                    return;
                }
                let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&u| !g.adjacent[v][u]).collect();
                chosen.push(v);
                go(g, &next, chosen, best);
                chosen.pop();
            }
        }
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut best = Vec::new();
        go(self, &all, &mut Vec::new(), &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.maximum_independent_set().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mac::presets;

    #[test]
    fn pentagon_is_a_five_cycle() {
        let g = ConfusabilityGraph::of_channel(&presets::pentagon(), 1).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.independence_number(), 2);
        let g2 = ConfusabilityGraph::of_channel(&presets::pentagon(), 2).unwrap();
        // Strong square of C5: each vertex has 8 neighbours.
        assert_eq!(g2.edge_count(), 25 * 8 / 2);
        assert_eq!(g2.independence_number(), 5);
    }
}
