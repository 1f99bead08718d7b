use sppm_core::oracle::{brute_partition_contains, enumerate_partitions};
use sppm_core::{
    classify_pattern, contains_all_singletons, contains_single_block, dispatch_contains,
    partition_contains, SetPartition, ShapeKind,
};

#[test]
fn fast_paths_agree_with_brute_force() {
    for n in 0..=7 {
        for sigma in enumerate_partitions(n) {
            for k in 0..=n + 1 {
                assert_eq!(
                    contains_all_singletons(&sigma, k),
                    brute_partition_contains(&sigma, &SetPartition::singletons(k))
                );
                assert_eq!(
                    contains_single_block(&sigma, k),
                    brute_partition_contains(&sigma, &SetPartition::single_block(k))
                );
            }
        }
    }
}

#[test]
fn dispatch_matches_general_engine_exactly() {
    let all: Vec<SetPartition> = (0..=5).flat_map(enumerate_partitions).collect();
    let mut shapes = [0usize; 3];
    for pattern in &all {
        shapes[match classify_pattern(pattern).kind {
            ShapeKind::AllSingletons => 0,
            ShapeKind::SingleBlock => 1,
            ShapeKind::General => 2,
        }] += 1;
        for sigma in &all {
            let fast = dispatch_contains(sigma, pattern);
            assert_eq!(fast, partition_contains(sigma, pattern), "{sigma} / {pattern}");
            if let Some(w) = &fast.witness {
                assert_eq!(&sigma.restrict(w.as_slice()).unwrap(), pattern);
            }
        }
    }
    assert!(shapes.iter().all(|&c| c > 0));
}
