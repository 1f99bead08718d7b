//! Restricted growth words and the two relabellings used on subsequences.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::permutation::write_list;

/// A word `w₁…wₙ` with `w₁ = 1` and each letter at most one more than the
/// maximum of the letters before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RgfWord {
    letters: Vec<usize>,
}

impl RgfWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let mut max = 0;
        for (i, &letter) in letters.iter().enumerate() {
            if letter == 0 || letter > max + 1 {
                return Err(Error::InvalidRgf {
                    position: i + 1,
                    letter,
                    limit: max + 1,
                });
            }
            max = max.max(letter);
        }
        Ok(RgfWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct letters, i.e. blocks of the encoded partition.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }
}

impl TryFrom<Vec<usize>> for RgfWord {
    type Error = Error;

    fn try_from(letters: Vec<usize>) -> Result<Self> {
        RgfWord::new(letters)
    }
}

impl fmt::Display for RgfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.letters)
    }
}

/// Encodes a partition: letter `i` is the 1-based index of the block holding
/// `i`, blocks numbered by their minima.
pub fn rgf_of(sigma: &SetPartition) -> RgfWord {
    RgfWord {
        letters: sigma.block_labels().into_iter().map(|b| b + 1).collect(),
    }
}

/// Inverse of [`rgf_of`].
pub fn partition_of_rgf(word: &RgfWord) -> SetPartition {
    let mut blocks = vec![Vec::new(); word.max_letter()];
    for (i, &letter) in word.letters.iter().enumerate() {
        blocks[letter - 1].push(i + 1);
    }
    SetPartition::from_blocks_unchecked(blocks, word.len())
}

/// Relabels letters by order of first occurrence.
pub fn flatten(word: &[usize]) -> RgfWord {
    let mut relabel = HashMap::new();
    let letters = word
        .iter()
        .map(|&x| {
            let next = relabel.len() + 1;
            *relabel.entry(x).or_insert(next)
        })
        .collect();
    RgfWord { letters }
}

/// Relabels letters by value rank: the smallest distinct letter becomes 1.
/// The output is not necessarily a restricted growth word.
pub fn value_standardize(word: &[usize]) -> Vec<usize> {
    let ranks: Vec<usize> = word.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    word.iter()
        .map(|x| ranks.binary_search(x).unwrap() + 1)
        .collect()
}
