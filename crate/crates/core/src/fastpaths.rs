//! Linear-time containment for the two pattern shapes that avoid a
//! two-element partition: all singletons, and a single block.

use crate::matchers::{partition_contains, MatchResult, SubsetWitness, Witness};
use crate::partition::SetPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// Every block has size 1; the pattern avoids `{{1,2}}`.
    AllSingletons,
    /// Exactly one block; the pattern avoids `{{1},{2}}`.
    SingleBlock,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternShape {
    pub kind: ShapeKind,
    pub size: usize,
}

/// `{{1}}` fits both special shapes and is classified as all singletons, as is
/// the empty pattern.
pub fn classify_pattern(pattern: &SetPartition) -> PatternShape {
    let kind = if pattern.block_sizes().all(|s| s == 1) {
        ShapeKind::AllSingletons
    } else if pattern.num_blocks() == 1 {
        ShapeKind::SingleBlock
    } else {
        ShapeKind::General
    };
    PatternShape {
        kind,
        size: pattern.ground_size(),
    }
}

/// Whether `sigma` contains `{{1},…,{k}}`: it needs at least `k` blocks.
pub fn contains_all_singletons(sigma: &SetPartition, k: usize) -> bool {
    sigma.num_blocks() >= k
}

/// Whether `sigma` contains `{{1,…,k}}`: some block needs at least `k`
/// elements.
pub fn contains_single_block(sigma: &SetPartition, k: usize) -> bool {
    k == 0 || sigma.block_sizes().any(|s| s >= k)
}

/// Containment with the same result and witness as
/// [`partition_contains`], taking a fast path when the pattern shape allows.
pub fn dispatch_contains(sigma: &SetPartition, pattern: &SetPartition) -> MatchResult {
    let shape = classify_pattern(pattern);
    let k = shape.size;
    let witness = match shape.kind {
        ShapeKind::General => return partition_contains(sigma, pattern),
        ShapeKind::AllSingletons => {
            if !contains_all_singletons(sigma, k) {
                return MatchResult::absent();
            }
            sigma.blocks()[..k].iter().map(|b| b[0]).collect()
        }
        ShapeKind::SingleBlock => match sigma.blocks().iter().find(|b| b.len() >= k) {
            Some(block) => block[..k].to_vec(),
            None => return MatchResult::absent(),
        },
    };
    MatchResult::found(Witness::Subset(
        SubsetWitness::new(witness).expect("block elements are positive"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let shape = |p: &SetPartition| {
            let s = classify_pattern(p);
            (s.kind, s.size)
        };
        assert_eq!(shape(&part(&[&[1], &[2], &[3]])), (ShapeKind::AllSingletons, 3));
        assert_eq!(shape(&part(&[&[1, 2, 3]])), (ShapeKind::SingleBlock, 3));
        assert_eq!(shape(&part(&[&[1, 3], &[2]])), (ShapeKind::General, 3));
        assert_eq!(shape(&part(&[&[1]])), (ShapeKind::AllSingletons, 1));
        assert_eq!(shape(&SetPartition::empty()), (ShapeKind::AllSingletons, 0));
    }

    #[test]
    fn fast_path_examples() {
        let sigma = part(&[&[1, 3], &[2, 4]]);
        assert!(contains_all_singletons(&sigma, 2));
        assert!(!contains_all_singletons(&sigma, 3));
        assert!(contains_all_singletons(&part(&[&[1], &[2], &[3]]), 3));

        assert!(contains_single_block(&sigma, 2));
        assert!(!contains_single_block(&sigma, 3));
        assert!(contains_single_block(&part(&[&[1, 2, 3], &[4]]), 3));

        assert!(contains_all_singletons(&SetPartition::empty(), 0));
        assert!(contains_single_block(&SetPartition::empty(), 0));
    }

    #[test]
    fn dispatch_examples() {
        let sigma = part(&[&[1, 3], &[2, 4]]);
        let r = dispatch_contains(&sigma, &part(&[&[1], &[2]]));
        assert_eq!(r.witness.unwrap().as_slice(), &[1, 2]);
        let r = dispatch_contains(&sigma, &part(&[&[1, 2]]));
        assert_eq!(r.witness.unwrap().as_slice(), &[1, 3]);
        assert!(!dispatch_contains(&part(&[&[1], &[2]]), &part(&[&[1, 2]])).contains);
    }

    #[test]
    fn single_element_pattern_is_shape_independent() {
        for sigma in [SetPartition::empty(), part(&[&[1]]), part(&[&[1, 2], &[3]])] {
            assert_eq!(contains_all_singletons(&sigma, 1), contains_single_block(&sigma, 1));
        }
    }

    #[test]
    fn single_block_witness_takes_least_qualifying_block() {
        // Block {2,5,6} qualifies for k = 3; {1,3} does not.
        let sigma = part(&[&[1, 3], &[2, 5, 6], &[4, 7, 8, 9]]);
        let r = dispatch_contains(&sigma, &SetPartition::single_block(3));
        assert_eq!(r.witness.as_ref().unwrap().as_slice(), &[2, 5, 6]);
        assert_eq!(r, partition_contains(&sigma, &SetPartition::single_block(3)));
    }
}
