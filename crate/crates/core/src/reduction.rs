//! Permutations as set partitions of `[2n]`.
//!
//! A permutation `π` of `[n]` is sent to the partition whose blocks are
//! `{i, πᵢ + n}`. Containment of permutations becomes containment of these
//! partitions, and occurrences correspond one-to-one with subset witnesses.

use crate::error::{Error, Result};
use crate::matchers::{OccurrenceIndices, SubsetWitness};
use crate::partition::SetPartition;
use crate::permutation::Permutation;

/// A partition of `[2n]` into `n` pairs `{i, πᵢ + n}` with `i ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchstickPartition(SetPartition);

impl MatchstickPartition {
    pub fn as_partition(&self) -> &SetPartition {
        &self.0
    }

    pub fn into_partition(self) -> SetPartition {
        self.0
    }

    /// Half the ground size.
    pub fn half(&self) -> usize {
        self.0.ground_size() / 2
    }
}

impl TryFrom<SetPartition> for MatchstickPartition {
    type Error = Error;

    fn try_from(sigma: SetPartition) -> Result<Self> {
        if is_matchstick(&sigma) {
            Ok(MatchstickPartition(sigma))
        } else {
            Err(Error::NotMatchstick)
        }
    }
}

impl AsRef<SetPartition> for MatchstickPartition {
    fn as_ref(&self) -> &SetPartition {
        &self.0
    }
}

pub fn reduce_perm(pi: &Permutation) -> MatchstickPartition {
    let n = pi.len();
    let blocks = pi
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| vec![i + 1, v + n])
        .collect();
    MatchstickPartition(SetPartition::from_blocks_unchecked(blocks, 2 * n))
}

/// Whether every block is a pair `{i, j}` with `i ≤ n < j`, where the ground
/// set is `[2n]`. Such a partition has exactly `n` blocks and the partners of
/// `1..=n` read off a permutation.
pub fn is_matchstick(sigma: &SetPartition) -> bool {
    let size = sigma.ground_size();
    if !size.is_multiple_of(2) {
        return false;
    }
    let n = size / 2;
    sigma.num_blocks() == n
        && sigma
            .blocks()
            .iter()
            .all(|b| b.len() == 2 && b[0] <= n && b[1] > n)
}

pub fn perm_of_matchstick(sigma: &MatchstickPartition) -> Permutation {
    let n = sigma.half();
    let values = sigma.0.blocks().iter().map(|b| b[1] - n).collect();
    Permutation::new(values).expect("matchstick partitions encode permutations")
}

/// Inverts [`reduce_perm`] on an arbitrary partition.
pub fn perm_of_partition(sigma: &SetPartition) -> Result<Permutation> {
    MatchstickPartition::try_from(sigma.clone()).map(|m| perm_of_matchstick(&m))
}

/// The witness `T = {i₁,…,i_k, π_{i₁}+n,…,π_{i_k}+n}` for an occurrence of a
/// pattern in `π` at `occurrence`.
pub fn transport_occurrence(pi: &Permutation, occurrence: &OccurrenceIndices) -> Result<SubsetWitness> {
    let n = pi.len();
    let positions = occurrence.as_slice();
    let mut values = Vec::with_capacity(positions.len());
    for &i in positions {
        values.push(pi.at(i).ok_or(Error::OutOfRange { element: i, n })?);
    }
    debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(match (positions.last(), values.iter().min()) {
        (Some(&max_index), Some(&min_value)) => max_index < n + min_value,
        _ => true,
    });
    let elements = positions
        .iter()
        .copied()
        .chain(values.iter().map(|v| v + n))
        .collect();
    SubsetWitness::new(elements)
}

/// Splits a witness `T` on `reduce_perm(π)` as `S₁ ∪ S₂` with `S₁ ⊆ [n]` and
/// returns `S₁`. Rejects any `T` that is not a union of blocks of
/// `reduce_perm(π)`, since only those restrict to matchstick partitions.
pub fn recover_occurrence(pi: &Permutation, witness: &SubsetWitness) -> Result<OccurrenceIndices> {
    let n = pi.len();
    let reduced = reduce_perm(pi);
    let restricted = reduced.as_partition().restrict(witness.as_slice())?;
    if !is_matchstick(&restricted) {
        return Err(Error::InvalidWitness(format!(
            "restriction of the reduced text to {:?} is {{{}}}, not a pair partition",
            witness.as_slice(),
            restricted
        )));
    }
    let (low, high): (Vec<usize>, Vec<usize>) = witness.as_slice().iter().partition(|&&x| x <= n);
    let mut partners: Vec<usize> = low.iter().map(|&i| pi.values()[i - 1] + n).collect();
    partners.sort_unstable();
    if partners != high {
        return Err(Error::InvalidWitness(format!(
            "upper half {high:?} does not match the partners {partners:?} of {low:?}"
        )));
    }
    OccurrenceIndices::new(low)
}
