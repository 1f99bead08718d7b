use std::collections::HashSet;

use itertools::Itertools;
use sppm_core::oracle::{enumerate_partitions, enumerate_rgfs};
use sppm_core::{flatten, partition_of_rgf, rgf_of, standardize, value_standardize, RgfWord, SetPartition};

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=n).flat_map(move |k| (1..=n).combinations(k))
}

#[test]
fn restrict_to_whole_ground_set_is_identity() {
    for n in 0..=6 {
        let all: Vec<usize> = (1..=n).collect();
        for sigma in enumerate_partitions(n) {
            assert_eq!(sigma.restrict(&all).unwrap(), sigma);
        }
    }
}

#[test]
fn restrict_composes() {
    for n in 0..=5 {
        for sigma in enumerate_partitions(n) {
            for t in subsets(n) {
                let outer = sigma.restrict(&t).unwrap();
                let st = standardize(t.iter().copied());
                for u in t.iter().copied().powerset() {
                    let image: Vec<usize> = u.iter().map(|&x| st.apply(x).unwrap()).collect();
                    assert_eq!(sigma.restrict(&u).unwrap(), outer.restrict(&image).unwrap());
                }
            }
        }
    }
}

#[test]
fn rgf_encoding_round_trips() {
    for n in 0..=8 {
        for sigma in enumerate_partitions(n) {
            let w = rgf_of(&sigma);
            assert!(RgfWord::new(w.letters().to_vec()).is_ok());
            assert_eq!(partition_of_rgf(&w), sigma);
        }
        for w in enumerate_rgfs(n) {
            assert_eq!(rgf_of(&partition_of_rgf(&w)), w);
        }
    }
}

#[test]
fn enumerated_partitions_are_distinct_and_valid() {
    for n in 0..=8 {
        let mut seen = HashSet::new();
        for sigma in enumerate_partitions(n) {
            let rebuilt = SetPartition::new(sigma.blocks().to_vec()).unwrap();
            assert_eq!(rebuilt, sigma);
            assert_eq!(sigma.ground_size(), n);
            assert!(seen.insert(sigma));
        }
    }
}

#[test]
fn restriction_commutes_with_flattening() {
    for n in 0..=6 {
        for sigma in enumerate_partitions(n) {
            let w = rgf_of(&sigma);
            for t in subsets(n) {
                let sub: Vec<usize> = t.iter().map(|&i| w.letters()[i - 1]).collect();
                assert_eq!(flatten(&sub), rgf_of(&sigma.restrict(&t).unwrap()));
            }
        }
    }
}

#[test]
fn value_standardize_agrees_with_flatten_when_it_is_an_rgf() {
    let mut agreements = 0;
    for len in 0..=6 {
        for word in std::iter::repeat_n(1..=6usize, len).multi_cartesian_product() {
            let ranked = value_standardize(&word);
            assert!(ranked.iter().all(|&x| x >= 1));
            if RgfWord::new(ranked.clone()).is_ok() {
                assert_eq!(ranked, flatten(&word).letters());
                agreements += 1;
            }
            assert!(RgfWord::new(flatten(&word).letters().to_vec()).is_ok());
        }
    }
    assert!(agreements > 0);
}
