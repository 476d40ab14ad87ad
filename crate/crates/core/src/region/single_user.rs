//! Single-user zero-error capacity by codebook search.

use crate::error::{Error, Result};
use crate::mac::{refs, sequence_vars, Channel, Sequence};
use crate::overlap::overlap_partition;
use crate::region::Meter;
use crate::world::World;

/// Largest zero-error codebook at blocklength `n` for a channel whose second
/// input is trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleUserCapacity {
    pub n: usize,
    pub cells: usize,
    pub codebook: Vec<Sequence>,
}

impl SingleUserCapacity {
    /// `log2` of the codebook size.
    pub fn bits(&self) -> f64 {
        (self.cells as f64).log2()
    }

    /// Bits per channel use.
    pub fn rate(&self) -> f64 {
        self.bits() / self.n as f64
    }
}

struct Search<'a> {
    x_vars: Vec<String>,
    y_vars: Vec<String>,
    /// `(x ++ y)` outcomes for each input sequence.
    rows: Vec<Vec<Sequence>>,
    meter: &'a Meter,
    best: Vec<usize>,
}

impl Search<'_> {
    /// A codebook is zero-error iff every input is its own overlap cell.
    fn separated(&self, chosen: &[usize]) -> Result<bool> {
        let vars: Vec<&str> = refs(&self.x_vars).into_iter().chain(refs(&self.y_vars)).collect();
        let world = World::new(&vars, chosen.iter().flat_map(|&i| self.rows[i].iter().cloned()))?;
        let p = overlap_partition(&world, &refs(&self.x_vars), &refs(&self.y_vars))?;
        Ok(p.len() == chosen.len())
    }

    fn run(&mut self, start: usize, chosen: &mut Vec<usize>) -> Result<()> {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        for i in start..self.rows.len() {
            if chosen.len() + (self.rows.len() - i) <= self.best.len() {
                break;
            }
            self.meter.tick(1)?;
            chosen.push(i);
            if self.separated(chosen)? {
                self.run(i + 1, chosen)?;
            }
            chosen.pop();
        }
        Ok(())
    }
}

/// Exact search over codebooks in index order. Separation is inherited by
/// subsets, so pruning at the first failure loses nothing.
pub fn single_user_capacity(channel: &Channel, n: usize, budget: u128) -> Result<SingleUserCapacity> {
    if channel.x2_alphabet().len() != 1 {
        return Err(Error::Unsupported(
            "single-user capacity needs a one-symbol second input alphabet".into(),
        ));
    }
    if n == 0 || budget == 0 {
        return Err(Error::InvalidBounds("blocklength and budget must be positive".into()));
    }
    let meter = Meter::new(budget);
    let inputs = channel.x1_sequences(n);
    let fixed = channel.x2_sequences(n).remove(0);
    let noise = channel.noise_sequences(n);
    meter.tick((inputs.len() * noise.len()) as u64)?;
    let rows = inputs
        .iter()
        .map(|x| {
            noise
                .iter()
                .map(|w| {
                    let mut row = x.clone();
                    row.extend(channel.transmit(x, &fixed, w)?);
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut search = Search {
        x_vars: sequence_vars("X1", n),
        y_vars: sequence_vars("Y", n),
        rows,
        meter: &meter,
        best: Vec::new(),
    };
    search.run(0, &mut Vec::new())?;
    let codebook: Vec<Sequence> = search.best.iter().map(|&i| inputs[i].clone()).collect();
    Ok(SingleUserCapacity {
        n,
        cells: codebook.len(),
        codebook,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mac::presets;

    #[test]
    fn pentagon() {
        let ch = presets::pentagon();
        assert_eq!(single_user_capacity(&ch, 1, 1_000_000).unwrap().cells, 2);
        let two = single_user_capacity(&ch, 2, 1_000_000).unwrap();
        assert_eq!(two.cells, 5);
        assert!((two.rate() - 5f64.log2() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn needs_trivial_second_input() {
        assert!(matches!(
            single_user_capacity(&presets::binary_adder(), 1, 1000),
            Err(Error::Unsupported(_))
        ));
    }
}
