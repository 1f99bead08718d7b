//! Brute-force references, exhaustive enumerators and the verification and
//! census harness.
//!
//! The brute-force checks here transcribe the definitions literally (every
//! subset, every index sequence) and do not call into the search engines in
//! [`crate::matchers`].

use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fastpaths::dispatch_contains;
use crate::matchers::{perm_contains, perm_count, rgf_contains, OccurrenceIndices, SubsetWitness};
use crate::partition::SetPartition;
use crate::permutation::Permutation;
use crate::reduction::reduce_perm;
use crate::rgf::{partition_of_rgf, rgf_of, value_standardize, RgfWord};

/// Largest `max_n` / `max_k` accepted by the verification runs without
/// `force`.
pub const VERIFY_BOUND: usize = 6;

/// Largest `n` accepted by [`census`] without `force`.
pub const CENSUS_BOUND: usize = 10;

// Enumerators

/// All permutations of `[n]` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation::new(current).expect("enumerated words are permutations"))
    }
}

/// All restricted growth words of length `n` in lexicographic order.
pub fn enumerate_rgfs(n: usize) -> RgfWords {
    RgfWords {
        next: Some(vec![1; n]),
    }
}

pub struct RgfWords {
    next: Option<Vec<usize>>,
}

impl Iterator for RgfWords {
    type Item = RgfWord;

    fn next(&mut self) -> Option<RgfWord> {
        let current = self.next.take()?;
        let mut prefix_max = Vec::with_capacity(current.len());
        let mut m = 0;
        for &x in &current {
            m = m.max(x);
            prefix_max.push(m);
        }
        if let Some(i) = (1..current.len()).rev().find(|&i| current[i] <= prefix_max[i - 1]) {
            let mut succ = current.clone();
            succ[i] += 1;
            succ[i + 1..].iter_mut().for_each(|x| *x = 1);
            self.next = Some(succ);
        }
        Some(RgfWord::new(current).expect("enumerated words satisfy the growth condition"))
    }
}

/// All set partitions of `[n]`, ordered lexicographically by their
/// restricted growth words.
pub fn enumerate_partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    enumerate_rgfs(n).map(|w| partition_of_rgf(&w))
}

/// Bell numbers `B(0..=max)` from the Bell triangle.
pub fn bell_numbers(max: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

// Brute-force references

/// Every index sequence whose subsequence is order-isomorphic to `pattern`.
pub fn brute_perm_occurrences(text: &Permutation, pattern: &Permutation) -> Vec<OccurrenceIndices> {
    (1..=text.len())
        .combinations(pattern.len())
        .filter(|idx| {
            let sub: Vec<usize> = idx.iter().map(|&i| text.values()[i - 1]).collect();
            Permutation::standardize_word(&sub).as_ref() == Ok(pattern)
        })
        .map(|idx| OccurrenceIndices::new(idx).unwrap())
        .collect()
}

pub fn brute_perm_contains(text: &Permutation, pattern: &Permutation) -> bool {
    !brute_perm_occurrences(text, pattern).is_empty()
}

pub fn brute_perm_count(text: &Permutation, pattern: &Permutation) -> u64 {
    brute_perm_occurrences(text, pattern).len() as u64
}

/// Every `T` of size `k` with `text ∩ T = pattern`, in lexicographic order.
pub fn brute_partition_witnesses(text: &SetPartition, pattern: &SetPartition) -> Vec<SubsetWitness> {
    (1..=text.ground_size())
        .combinations(pattern.ground_size())
        .filter(|t| text.restrict(t).as_ref() == Ok(pattern))
        .map(|t| SubsetWitness::new(t).unwrap())
        .collect()
}

pub fn brute_partition_contains(text: &SetPartition, pattern: &SetPartition) -> bool {
    (1..=text.ground_size())
        .combinations(pattern.ground_size())
        .any(|t| text.restrict(&t).as_ref() == Ok(pattern))
}

pub fn brute_partition_count(text: &SetPartition, pattern: &SetPartition) -> u64 {
    brute_partition_witnesses(text, pattern).len() as u64
}

/// Every position set whose subsequence value-standardizes to `pattern`.
pub fn brute_rgf_witnesses(text: &RgfWord, pattern: &RgfWord) -> Vec<SubsetWitness> {
    (1..=text.len())
        .combinations(pattern.len())
        .filter(|pos| {
            let sub: Vec<usize> = pos.iter().map(|&i| text.letters()[i - 1]).collect();
            value_standardize(&sub) == pattern.letters()
        })
        .map(|pos| SubsetWitness::new(pos).unwrap())
        .collect()
}

pub fn brute_rgf_contains(text: &RgfWord, pattern: &RgfWord) -> bool {
    !brute_rgf_witnesses(text, pattern).is_empty()
}

// Verification harness

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Ignore the safety bounds.
    pub force: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Containment,
    Count,
    Separation,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Containment => "containment",
            Check::Count => "count",
            Check::Separation => "separation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mismatch {
    pub check: Check,
    pub text: String,
    pub pattern: String,
    pub engine: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_n: usize,
    pub max_k: usize,
    /// Containment pairs compared.
    pub pairs_checked: u64,
    /// Count pairs compared (parsimony), a subset of the above.
    pub count_pairs_checked: u64,
    /// Sorted, so identical runs give identical reports.
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Largest pattern/text sizes for which counts are compared as well.
const COUNT_MAX_N: usize = 5;
const COUNT_MAX_K: usize = 3;

fn check_bounds(max_n: usize, max_k: usize, bound: usize, opts: RunOptions) -> Result<()> {
    if opts.force {
        return Ok(());
    }
    for (what, requested) in [("max_n", max_n), ("max_k", max_k)] {
        if requested > bound {
            return Err(Error::BoundExceeded {
                what,
                requested,
                bound,
            });
        }
    }
    Ok(())
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn permutations_up_to(max: usize) -> Vec<Permutation> {
    (1..=max).flat_map(enumerate_permutations).collect()
}

struct Tally {
    pairs: u64,
    count_pairs: u64,
    mismatches: Vec<Mismatch>,
}

fn run_pairs<F>(max_n: usize, max_k: usize, opts: RunOptions, check_pair: F) -> (Tally, Duration)
where
    F: Fn(&Permutation, &Permutation, &mut Tally) + Sync,
{
    let started = Instant::now();
    let texts = permutations_up_to(max_n);
    let patterns = permutations_up_to(max_k);
    let tally = with_pool(opts.jobs, || {
        texts
            .par_iter()
            .map(|pi| {
                let mut t = Tally {
                    pairs: 0,
                    count_pairs: 0,
                    mismatches: Vec::new(),
                };
                for tau in &patterns {
                    check_pair(pi, tau, &mut t);
                }
                t
            })
            .reduce(
                || Tally {
                    pairs: 0,
                    count_pairs: 0,
                    mismatches: Vec::new(),
                },
                |mut a, b| {
                    a.pairs += b.pairs;
                    a.count_pairs += b.count_pairs;
                    a.mismatches.extend(b.mismatches);
                    a
                },
            )
    });
    let mut tally = tally;
    tally.mismatches.sort();
    (tally, started.elapsed())
}

/// Checks, for every `π` of size `1..=max_n` and `τ` of size `1..=max_k`,
/// that permutation containment agrees with brute-force partition
/// containment of the reduced pair, and for sizes up to 5 and 3 that the
/// occurrence counts agree too.
pub fn verify_reduction(max_n: usize, max_k: usize, opts: RunOptions) -> Result<VerificationReport> {
    check_bounds(max_n, max_k, VERIFY_BOUND, opts)?;
    let (tally, elapsed) = run_pairs(max_n, max_k, opts, |pi, tau, t| {
        let s_pi = reduce_perm(pi);
        let s_tau = reduce_perm(tau);
        let engine = perm_contains(pi, tau).contains;
        let oracle = brute_partition_contains(s_pi.as_partition(), s_tau.as_partition());
        t.pairs += 1;
        if engine != oracle {
            t.mismatches.push(Mismatch {
                check: Check::Containment,
                text: pi.to_string(),
                pattern: tau.to_string(),
                engine: engine.to_string(),
                oracle: oracle.to_string(),
            });
        }
        if pi.len() <= COUNT_MAX_N && tau.len() <= COUNT_MAX_K {
            let engine = perm_count(pi, tau);
            let oracle = brute_partition_count(s_pi.as_partition(), s_tau.as_partition());
            t.count_pairs += 1;
            if engine != oracle {
                t.mismatches.push(Mismatch {
                    check: Check::Count,
                    text: pi.to_string(),
                    pattern: tau.to_string(),
                    engine: engine.to_string(),
                    oracle: oracle.to_string(),
                });
            }
        }
    });
    Ok(VerificationReport {
        max_n,
        max_k,
        pairs_checked: tally.pairs,
        count_pairs_checked: tally.count_pairs,
        mismatches: tally.mismatches,
        elapsed,
    })
}

/// The restricted growth words `1,2,2,1` and `1,1,2`: word containment fails
/// while partition containment holds.
pub fn separation_pair() -> (RgfWord, RgfWord) {
    (
        RgfWord::new(vec![1, 2, 2, 1]).unwrap(),
        RgfWord::new(vec![1, 1, 2]).unwrap(),
    )
}

/// Checks that word containment of the encoded reduced pairs agrees with
/// brute-force partition containment, and that the two notions still differ
/// on [`separation_pair`].
pub fn verify_rgf_coincidence(max_n: usize, max_k: usize, opts: RunOptions) -> Result<VerificationReport> {
    check_bounds(max_n, max_k, VERIFY_BOUND, opts)?;
    let (mut tally, elapsed) = run_pairs(max_n, max_k, opts, |pi, tau, t| {
        let s_pi = reduce_perm(pi);
        let s_tau = reduce_perm(tau);
        let engine = rgf_contains(&rgf_of(s_pi.as_partition()), &rgf_of(s_tau.as_partition())).contains;
        let oracle = brute_partition_contains(s_pi.as_partition(), s_tau.as_partition());
        t.pairs += 1;
        if engine != oracle {
            t.mismatches.push(Mismatch {
                check: Check::Containment,
                text: pi.to_string(),
                pattern: tau.to_string(),
                engine: engine.to_string(),
                oracle: oracle.to_string(),
            });
        }
    });
    let (text, pattern) = separation_pair();
    let word = rgf_contains(&text, &pattern).contains;
    let partition = brute_partition_contains(&partition_of_rgf(&text), &partition_of_rgf(&pattern));
    if word || !partition {
        tally.mismatches.push(Mismatch {
            check: Check::Separation,
            text: text.to_string(),
            pattern: pattern.to_string(),
            engine: word.to_string(),
            oracle: partition.to_string(),
        });
    }
    Ok(VerificationReport {
        max_n,
        max_k,
        pairs_checked: tally.pairs,
        count_pairs_checked: 0,
        mismatches: tally.mismatches,
        elapsed,
    })
}

// Census

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Notion {
    Partition,
    Rgf,
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Notion::Partition => "partition",
            Notion::Rgf => "rgf",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CensusPattern {
    Partition(SetPartition),
    Rgf(RgfWord),
}

impl CensusPattern {
    pub fn notion(&self) -> Notion {
        match self {
            CensusPattern::Partition(_) => Notion::Partition,
            CensusPattern::Rgf(_) => Notion::Rgf,
        }
    }
}

impl fmt::Display for CensusPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusPattern::Partition(p) => p.fmt(f),
            CensusPattern::Rgf(w) => w.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub pattern: CensusPattern,
    pub notion: Notion,
    pub avoiders: u64,
    pub containers: u64,
}

/// Counts the partitions of `[n]` (or their words, for [`Notion::Rgf`]) that
/// avoid and contain `pattern`.
pub fn census(n: usize, pattern: &CensusPattern, opts: RunOptions) -> Result<CensusRow> {
    if n > CENSUS_BOUND && !opts.force {
        return Err(Error::BoundExceeded {
            what: "n",
            requested: n,
            bound: CENSUS_BOUND,
        });
    }
    let words: Vec<RgfWord> = enumerate_rgfs(n).collect();
    let containers = with_pool(opts.jobs, || {
        words
            .par_iter()
            .filter(|w| match pattern {
                CensusPattern::Partition(p) => dispatch_contains(&partition_of_rgf(w), p).contains,
                CensusPattern::Rgf(p) => rgf_contains(w, p).contains,
            })
            .count() as u64
    });
    Ok(CensusRow {
        n,
        pattern: pattern.clone(),
        notion: pattern.notion(),
        avoiders: words.len() as u64 - containers,
        containers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_enumeration() {
        let all: Vec<String> = enumerate_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        assert_eq!(enumerate_permutations(0).count(), 1);
        assert_eq!(enumerate_permutations(5).count(), 120);
    }

    /// Element `n` joins an existing block or opens a new one.
    fn recursive_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in recursive_partitions(n - 1) {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(n);
                out.push(q);
            }
            let mut q = p;
            q.push(vec![n]);
            out.push(q);
        }
        out
    }

    #[test]
    fn partition_enumeration_matches_recursive_oracle() {
        for n in 0..=6 {
            let mut expected: Vec<SetPartition> = recursive_partitions(n)
                .into_iter()
                .map(|b| SetPartition::new(b).unwrap())
                .collect();
            let mut got: Vec<SetPartition> = enumerate_partitions(n).collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "n = {n}");
        }
        assert_eq!(enumerate_partitions(3).count(), 5);
        assert_eq!(enumerate_partitions(4).count(), 15);
        let one: Vec<_> = enumerate_partitions(1).collect();
        assert_eq!(one, vec![SetPartition::singletons(1)]);
    }

    #[test]
    fn rgf_enumeration_is_lexicographic() {
        let words: Vec<RgfWord> = enumerate_rgfs(5).collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(words.first().unwrap().letters(), &[1; 5]);
        assert_eq!(words.last().unwrap().letters(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn bell_triangle() {
        assert_eq!(bell_numbers(10), vec![1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]);
    }

    #[test]
    fn brute_partition_examples() {
        let sigma = SetPartition::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(brute_partition_contains(&sigma, &SetPartition::single_block(2)));
        assert!(brute_partition_contains(&sigma, &sigma));
        assert!(!brute_partition_contains(&SetPartition::singletons(2), &SetPartition::single_block(2)));
        assert_eq!(brute_partition_count(&sigma, &SetPartition::single_block(2)), 2);
    }

    #[test]
    fn verify_small_bounds() {
        let r = verify_reduction(1, 1, RunOptions::default()).unwrap();
        assert_eq!((r.pairs_checked, r.count_pairs_checked), (1, 1));
        assert!(r.passed());

        let r = verify_reduction(2, 3, RunOptions::default()).unwrap();
        assert_eq!(r.pairs_checked, 3 * 9);
        assert!(r.passed());
        // Patterns longer than the text never match on either side.
        for pi in permutations_up_to(2) {
            for tau in enumerate_permutations(3) {
                assert!(!perm_contains(&pi, &tau).contains);
                assert!(!brute_partition_contains(reduce_perm(&pi).as_partition(), reduce_perm(&tau).as_partition()));
            }
        }

        let r = verify_rgf_coincidence(1, 1, RunOptions::default()).unwrap();
        assert_eq!(r.pairs_checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            verify_reduction(7, 2, RunOptions::default()),
            Err(Error::BoundExceeded { what: "max_n", requested: 7, bound: 6 })
        ));
        assert!(verify_rgf_coincidence(2, 7, RunOptions::default()).is_err());
        let pattern = CensusPattern::Partition(SetPartition::singletons(1));
        assert!(census(11, &pattern, RunOptions::default()).is_err());
        let forced = RunOptions { force: true, jobs: Some(1) };
        assert!(verify_reduction(2, 7, forced).unwrap().passed());
    }

    #[test]
    fn census_examples() {
        let row = census(4, &CensusPattern::Partition(SetPartition::single_block(2)), RunOptions::default()).unwrap();
        assert_eq!((row.avoiders, row.containers), (1, 14));
        let row = census(4, &CensusPattern::Partition(SetPartition::singletons(2)), RunOptions::default()).unwrap();
        assert_eq!(row.avoiders, 1);
        let row = census(3, &CensusPattern::Partition(SetPartition::singletons(1)), RunOptions::default()).unwrap();
        assert_eq!(row.avoiders, 0);
        assert_eq!(row.notion, Notion::Partition);
    }

    #[test]
    fn census_rows_sum_to_bell() {
        let bells = bell_numbers(7);
        let patterns = [
            CensusPattern::Partition(SetPartition::new(vec![vec![1, 3], vec![2]]).unwrap()),
            CensusPattern::Rgf(RgfWord::new(vec![1, 2, 1]).unwrap()),
            CensusPattern::Rgf(RgfWord::new(vec![1, 1, 2]).unwrap()),
        ];
        for pattern in &patterns {
            for n in 0..=7 {
                let row = census(n, pattern, RunOptions { force: false, jobs: Some(2) }).unwrap();
                assert_eq!(row.avoiders + row.containers, bells[n]);
                assert_eq!(row.notion, pattern.notion());
            }
        }
    }
}
