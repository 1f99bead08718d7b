use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::write_list;
use crate::standardize::standardize;

/// A set partition of `[n]` kept in canonical form: blocks ordered by their
/// minima, elements ascending within each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl SetPartition {
    /// Canonicalizes `blocks` and checks that they partition `[n]`, where `n`
    /// is the total number of elements.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {} is empty", b + 1)));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} is outside [1, {n}]"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("repeated element {x}")));
                }
                seen[x] = true;
            }
        }
        Ok(Self::from_blocks_unchecked(blocks, n))
    }

    pub(crate) fn from_blocks_unchecked(mut blocks: Vec<Vec<usize>>, n: usize) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { blocks, n }
    }

    /// The partition of `[0]`.
    pub fn empty() -> Self {
        SetPartition::default()
    }

    /// `{{1},{2},…,{k}}`.
    pub fn singletons(k: usize) -> Self {
        SetPartition {
            blocks: (1..=k).map(|i| vec![i]).collect(),
            n: k,
        }
    }

    /// `{{1,2,…,k}}`, or the empty partition when `k = 0`.
    pub fn single_block(k: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        SetPartition {
            blocks: vec![(1..=k).collect()],
            n: k,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(Vec::len)
    }

    /// For each element `1..=n`, the 0-based canonical index of its block.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[x - 1] = b;
            }
        }
        labels
    }

    /// The partition `σ ∩ T` of `[#T]`: the nonempty blocks `st(B ∩ T)`.
    /// `subset` is treated as a set; order and repeats are ignored.
    pub fn restrict(&self, subset: &[usize]) -> Result<SetPartition> {
        if let Some(&x) = subset.iter().find(|&&x| x == 0 || x > self.n) {
            return Err(Error::OutOfRange {
                element: x,
                n: self.n,
            });
        }
        let st = standardize(subset.iter().copied());
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|block| block.iter().filter_map(|&x| st.apply(x)).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        Ok(SetPartition::from_blocks_unchecked(blocks, st.len()))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write_list(f, block)?;
        }
        Ok(())
    }
}
