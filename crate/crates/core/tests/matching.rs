use itertools::Itertools;
use sppm_core::oracle::{
    brute_partition_contains, brute_partition_count, brute_perm_count, brute_rgf_witnesses,
    enumerate_partitions, enumerate_permutations, enumerate_rgfs,
};
use sppm_core::{
    partition_contains, partition_count, perm_contains, perm_count, rgf_contains, rgf_count,
    rgf_of, value_standardize, MatchResult, Permutation, RgfWord, SetPartition,
};

fn perms_up_to(n: usize) -> Vec<Permutation> {
    (0..=n).flat_map(enumerate_permutations).collect()
}

fn partitions_up_to(n: usize) -> Vec<SetPartition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

fn rgfs_up_to(n: usize) -> Vec<RgfWord> {
    (0..=n).flat_map(enumerate_rgfs).collect()
}

fn witness(r: &MatchResult) -> &[usize] {
    r.witness.as_ref().expect("witness").as_slice()
}

#[test]
fn witnesses_reverify() {
    for text in perms_up_to(5) {
        for pattern in perms_up_to(4) {
            let r = perm_contains(&text, &pattern);
            if r.contains {
                let sub: Vec<usize> = witness(&r).iter().map(|&i| text.at(i).unwrap()).collect();
                assert_eq!(Permutation::standardize_word(&sub).unwrap(), pattern);
            } else {
                assert!(r.witness.is_none());
            }
        }
    }
    for text in partitions_up_to(5) {
        for pattern in partitions_up_to(4) {
            let r = partition_contains(&text, &pattern);
            if r.contains {
                assert_eq!(text.restrict(witness(&r)).unwrap(), pattern);
            }
        }
    }
    for text in rgfs_up_to(5) {
        for pattern in rgfs_up_to(4) {
            let r = rgf_contains(&text, &pattern);
            if r.contains {
                let sub: Vec<usize> = witness(&r).iter().map(|&i| text.letters()[i - 1]).collect();
                assert_eq!(value_standardize(&sub), pattern.letters());
            }
        }
    }
}

/// Builds the containment matrix over `items` and checks reflexivity and
/// transitivity on it.
fn assert_preorder<T>(items: &[T], contains: impl Fn(&T, &T) -> bool) {
    let m: Vec<Vec<bool>> = items
        .iter()
        .map(|a| items.iter().map(|b| contains(a, b)).collect())
        .collect();
    for i in 0..items.len() {
        assert!(m[i][i]);
        for j in (0..items.len()).filter(|&j| m[i][j]) {
            for l in 0..items.len() {
                if m[j][l] {
                    assert!(m[i][l], "containment is not transitive");
                }
            }
        }
    }
}

#[test]
fn containment_is_a_preorder() {
    assert_preorder(&perms_up_to(5), |a, b| perm_contains(a, b).contains);
    assert_preorder(&partitions_up_to(5), |a, b| partition_contains(a, b).contains);
    assert_preorder(&rgfs_up_to(5), |a, b| rgf_contains(a, b).contains);
}

/// Independent check for an injection of pattern blocks into text blocks
/// that never decreases block size, by trying every assignment.
fn size_injection_exists(text: &[usize], pattern: &[usize]) -> bool {
    (0..text.len())
        .permutations(pattern.len())
        .any(|assign| assign.iter().zip(pattern).all(|(&b, &need)| text[b] >= need))
}

#[test]
fn containment_implies_block_size_injection() {
    for text in partitions_up_to(5) {
        let ts: Vec<usize> = text.block_sizes().collect();
        for pattern in partitions_up_to(5) {
            if partition_contains(&text, &pattern).contains {
                let ps: Vec<usize> = pattern.block_sizes().collect();
                assert!(size_injection_exists(&ts, &ps), "{text} / {pattern}");
            }
        }
    }
}

#[test]
fn contains_iff_positive_count() {
    for text in perms_up_to(5) {
        for pattern in perms_up_to(5) {
            assert_eq!(perm_contains(&text, &pattern).contains, perm_count(&text, &pattern) >= 1);
        }
    }
    for text in partitions_up_to(5) {
        for pattern in partitions_up_to(5) {
            assert_eq!(
                partition_contains(&text, &pattern).contains,
                partition_count(&text, &pattern) >= 1
            );
        }
    }
    for text in rgfs_up_to(5) {
        for pattern in rgfs_up_to(5) {
            assert_eq!(rgf_contains(&text, &pattern).contains, rgf_count(&text, &pattern) >= 1);
        }
    }
}

#[test]
fn word_containment_implies_partition_containment() {
    for text in partitions_up_to(5) {
        for pattern in partitions_up_to(5) {
            if rgf_contains(&rgf_of(&text), &rgf_of(&pattern)).contains {
                assert!(partition_contains(&text, &pattern).contains, "{text} / {pattern}");
            }
        }
    }
    let text = RgfWord::new(vec![1, 2, 2, 1]).unwrap();
    let pattern = RgfWord::new(vec![1, 1, 2]).unwrap();
    assert!(!rgf_contains(&text, &pattern).contains);
    assert!(partition_contains(
        &sppm_core::partition_of_rgf(&text),
        &sppm_core::partition_of_rgf(&pattern)
    )
    .contains);
}

#[test]
fn partition_engine_matches_subset_enumeration() {
    let texts = partitions_up_to(6);
    for text in &texts {
        for pattern in &texts {
            let r = partition_contains(text, pattern);
            assert_eq!(r.contains, brute_partition_contains(text, pattern), "{text} / {pattern}");
            if r.contains {
                let least = (1..=text.ground_size())
                    .combinations(pattern.ground_size())
                    .find(|t| text.restrict(t).as_ref() == Ok(pattern))
                    .unwrap();
                assert_eq!(witness(&r), least.as_slice());
            }
        }
    }
    for text in partitions_up_to(5) {
        for pattern in partitions_up_to(5) {
            assert_eq!(partition_count(&text, &pattern), brute_partition_count(&text, &pattern));
        }
    }
}

#[test]
fn perm_engine_matches_index_enumeration() {
    for text in perms_up_to(6) {
        for pattern in perms_up_to(4) {
            assert_eq!(perm_count(&text, &pattern), brute_perm_count(&text, &pattern));
        }
    }
}

#[test]
fn rgf_engine_matches_subsequence_enumeration() {
    for text in rgfs_up_to(6) {
        for pattern in rgfs_up_to(4) {
            let all = brute_rgf_witnesses(&text, &pattern);
            let r = rgf_contains(&text, &pattern);
            assert_eq!(r.contains, !all.is_empty());
            if r.contains {
                assert_eq!(witness(&r), all[0].as_slice());
            }
            assert_eq!(rgf_count(&text, &pattern), all.len() as u64);
        }
    }
}
