//! Pattern containment in permutations, set partitions and restricted growth
//! words, with the reduction that turns permutation pattern matching into set
//! partition pattern matching.
//!
//! Every structure uses 1-based elements and positions. Set partitions are
//! kept in canonical form (blocks ordered by minimum, elements ascending), so
//! structural equality is equality of partitions.

pub mod error;
pub mod fastpaths;
pub mod matchers;
pub mod oracle;
pub mod partition;
pub mod permutation;
pub mod reduction;
pub mod rgf;
pub mod standardize;

pub use error::{Error, Result};
pub use fastpaths::{
    classify_pattern, contains_all_singletons, contains_single_block, dispatch_contains,
    PatternShape, ShapeKind,
};
pub use matchers::{
    partition_contains, partition_count, perm_contains, perm_count, rgf_contains, rgf_count,
    MatchResult, OccurrenceIndices, SubsetWitness, Witness,
};
pub use partition::SetPartition;
pub use permutation::Permutation;
pub use reduction::{
    is_matchstick, perm_of_matchstick, perm_of_partition, recover_occurrence, reduce_perm,
    transport_occurrence, MatchstickPartition,
};
pub use rgf::{flatten, partition_of_rgf, rgf_of, value_standardize, RgfWord};
pub use standardize::{standardize, StandardizationMap};
