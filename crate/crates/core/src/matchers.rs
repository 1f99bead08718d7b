//! Containment and occurrence counting for permutations, set partitions and
//! restricted growth words.
//!
//! All three engines are depth-first searches that pick the positions of an
//! occurrence from left to right, so the first complete occurrence reached is
//! the lexicographically least one and counting is the same search run to
//! exhaustion.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::permutation::Permutation;
use crate::rgf::RgfWord;

/// Strictly increasing 1-based positions `i₁ < … < i_k` of an occurrence in a
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccurrenceIndices(Vec<usize>);

impl OccurrenceIndices {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndices(indices));
        }
        Ok(OccurrenceIndices(indices))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// A subset `T` of the text's ground set, kept ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetWitness(Vec<usize>);

impl SubsetWitness {
    /// Sorts and dedups `elements`; rejects 0.
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() == Some(&0) {
            return Err(Error::InvalidIndices(elements));
        }
        Ok(SubsetWitness(elements))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Occurrence(OccurrenceIndices),
    Subset(SubsetWitness),
}

impl Witness {
    /// The witness as an ascending list of 1-based integers.
    pub fn as_slice(&self) -> &[usize] {
        match self {
            Witness::Occurrence(o) => o.as_slice(),
            Witness::Subset(s) => s.as_slice(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchResult {
    pub contains: bool,
    pub witness: Option<Witness>,
}

impl MatchResult {
    pub fn absent() -> Self {
        MatchResult {
            contains: false,
            witness: None,
        }
    }

    pub fn found(witness: Witness) -> Self {
        MatchResult {
            contains: true,
            witness: Some(witness),
        }
    }
}

enum Stop {
    Found,
    Cancelled,
}

static NEVER: AtomicBool = AtomicBool::new(false);

/// Runs `search` to exhaustion, counting the occurrences it reports.
fn count_with<S>(search: Option<S>, cancel: &AtomicBool) -> Result<u64>
where
    S: Search,
{
    let Some(mut search) = search else {
        return Ok(0);
    };
    let mut count = 0u64;
    match search.dfs(0, cancel, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    }) {
        ControlFlow::Break(Stop::Cancelled) => Err(Error::Cancelled),
        _ => Ok(count),
    }
}

/// Runs `search` until the first occurrence, returned as 1-based positions.
fn first_with<S: Search>(search: Option<S>) -> Option<Vec<usize>> {
    let mut search = search?;
    let mut hit = None;
    let _ = search.dfs(0, &NEVER, &mut |positions| {
        hit = Some(positions.iter().map(|p| p + 1).collect());
        ControlFlow::Break(())
    });
    hit
}

trait Search {
    /// Extends the current partial occurrence with positions `>= start`,
    /// calling `visit` with 0-based positions of every complete occurrence.
    fn dfs(
        &mut self,
        start: usize,
        cancel: &AtomicBool,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<Stop>;
}

// Permutations

struct PermSearch<'a> {
    text: &'a [usize],
    pattern: &'a [usize],
    // For pattern entry j, the earlier entry holding the nearest smaller and
    // nearest larger value. Respecting both keeps the prefix order-isomorphic.
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    chosen: Vec<usize>,
}

impl<'a> PermSearch<'a> {
    fn new(text: &'a Permutation, pattern: &'a Permutation) -> Option<Self> {
        if pattern.len() > text.len() {
            return None;
        }
        let pattern = pattern.values();
        let mut below = Vec::with_capacity(pattern.len());
        let mut above = Vec::with_capacity(pattern.len());
        for (j, &v) in pattern.iter().enumerate() {
            let earlier = pattern[..j].iter().copied().enumerate();
            below.push(earlier.clone().filter(|&(_, u)| u < v).max_by_key(|&(_, u)| u).map(|(i, _)| i));
            above.push(earlier.filter(|&(_, u)| u > v).min_by_key(|&(_, u)| u).map(|(i, _)| i));
        }
        Some(PermSearch {
            text: text.values(),
            pattern,
            below,
            above,
            chosen: Vec::with_capacity(pattern.len()),
        })
    }
}

impl Search for PermSearch<'_> {
    fn dfs(
        &mut self,
        start: usize,
        cancel: &AtomicBool,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<Stop> {
        let j = self.chosen.len();
        let k = self.pattern.len();
        if j == k {
            return match visit(&self.chosen) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(Stop::Found),
            };
        }
        if cancel.load(Ordering::Relaxed) {
            return ControlFlow::Break(Stop::Cancelled);
        }
        let last = self.text.len() - (k - j);
        for pos in start..=last {
            let v = self.text[pos];
            if let Some(b) = self.below[j] {
                if self.text[self.chosen[b]] > v {
                    continue;
                }
            }
            if let Some(a) = self.above[j] {
                if self.text[self.chosen[a]] < v {
                    continue;
                }
            }
            self.chosen.push(pos);
            let flow = self.dfs(pos + 1, cancel, visit);
            self.chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Decides whether `text` contains `pattern`; the witness is the
/// lexicographically least occurrence.
pub fn perm_contains(text: &Permutation, pattern: &Permutation) -> MatchResult {
    match first_with(PermSearch::new(text, pattern)) {
        Some(hit) => MatchResult::found(Witness::Occurrence(OccurrenceIndices(hit))),
        None => MatchResult::absent(),
    }
}

/// Number of occurrences of `pattern` in `text`.
pub fn perm_count(text: &Permutation, pattern: &Permutation) -> u64 {
    count_with(PermSearch::new(text, pattern), &NEVER).expect("never cancelled")
}

/// [`perm_count`] that gives up with [`Error::Cancelled`] once `cancel` is set.
pub fn perm_count_cancellable(
    text: &Permutation,
    pattern: &Permutation,
    cancel: &AtomicBool,
) -> Result<u64> {
    count_with(PermSearch::new(text, pattern), cancel)
}

// Set partitions

/// Chooses `t₁ < … < t_k` so that the block labels of the text at those
/// positions flatten to the pattern's labels: pattern block `p` is bound to
/// the text block of its first element and no two pattern blocks share a
/// text block.
struct PartitionSearch {
    text_labels: Vec<usize>,
    pattern_labels: Vec<usize>,
    // left[i][b]: elements of text block b at 0-based positions >= i.
    left: Vec<Vec<usize>>,
    // Sizes of pattern blocks p.., sorted descending, indexed by p.
    unopened_needs: Vec<Vec<usize>>,
    assign: Vec<Option<usize>>,
    used: Vec<bool>,
    need: Vec<usize>,
    opened: usize,
    chosen: Vec<usize>,
}

impl PartitionSearch {
    fn new(text: &SetPartition, pattern: &SetPartition) -> Option<Self> {
        let n = text.ground_size();
        let k = pattern.ground_size();
        if k > n || pattern.num_blocks() > text.num_blocks() {
            return None;
        }
        let text_labels = text.block_labels();
        let nb = text.num_blocks();
        let mut left = vec![vec![0; nb]; n + 1];
        for i in (0..n).rev() {
            left[i] = left[i + 1].clone();
            left[i][text_labels[i]] += 1;
        }
        let sizes: Vec<usize> = pattern.block_sizes().collect();
        let unopened_needs = (0..=sizes.len())
            .map(|p| {
                let mut s = sizes[p..].to_vec();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        let search = PartitionSearch {
            text_labels,
            pattern_labels: pattern.block_labels(),
            left,
            unopened_needs,
            assign: vec![None; sizes.len()],
            used: vec![false; nb],
            need: sizes,
            opened: 0,
            chosen: Vec::with_capacity(k),
        };
        search.feasible(0).then_some(search)
    }

    /// Whether the pattern blocks can still be completed from positions
    /// `>= from`: bound blocks need enough elements left in their text block,
    /// and unbound blocks need an injection into unused text blocks that never
    /// shrinks a block below its requirement.
    fn feasible(&self, from: usize) -> bool {
        let left = &self.left[from];
        for (p, bound) in self.assign[..self.opened].iter().enumerate() {
            let b = bound.expect("opened blocks are bound");
            if left[b] < self.need[p] {
                return false;
            }
        }
        let needs = &self.unopened_needs[self.opened];
        if needs.is_empty() {
            return true;
        }
        let mut caps: Vec<usize> = (0..left.len())
            .filter(|&b| !self.used[b])
            .map(|b| left[b])
            .collect();
        if caps.len() < needs.len() {
            return false;
        }
        caps.sort_unstable_by(|a, b| b.cmp(a));
        needs.iter().zip(&caps).all(|(need, cap)| need <= cap)
    }
}

impl Search for PartitionSearch {
    fn dfs(
        &mut self,
        start: usize,
        cancel: &AtomicBool,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<Stop> {
        let j = self.chosen.len();
        let k = self.pattern_labels.len();
        if j == k {
            return match visit(&self.chosen) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(Stop::Found),
            };
        }
        if cancel.load(Ordering::Relaxed) {
            return ControlFlow::Break(Stop::Cancelled);
        }
        let p = self.pattern_labels[j];
        let last = self.text_labels.len() - (k - j);
        for pos in start..=last {
            let b = self.text_labels[pos];
            let opens = match self.assign[p] {
                Some(bound) if bound == b => false,
                Some(_) => continue,
                None if self.used[b] => continue,
                None => true,
            };
            if opens {
                self.assign[p] = Some(b);
                self.used[b] = true;
                self.opened += 1;
            }
            self.need[p] -= 1;
            self.chosen.push(pos);
            let flow = if self.feasible(pos + 1) {
                self.dfs(pos + 1, cancel, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.chosen.pop();
            self.need[p] += 1;
            if opens {
                self.assign[p] = None;
                self.used[b] = false;
                self.opened -= 1;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Decides whether some `T ⊆ [n]` has `text ∩ T = pattern`; the witness is
/// the lexicographically least such `T`.
pub fn partition_contains(text: &SetPartition, pattern: &SetPartition) -> MatchResult {
    match first_with(PartitionSearch::new(text, pattern)) {
        Some(hit) => MatchResult::found(Witness::Subset(SubsetWitness(hit))),
        None => MatchResult::absent(),
    }
}

/// Number of subsets `T` with `text ∩ T = pattern`.
pub fn partition_count(text: &SetPartition, pattern: &SetPartition) -> u64 {
    count_with(PartitionSearch::new(text, pattern), &NEVER).expect("never cancelled")
}

/// [`partition_count`] that gives up with [`Error::Cancelled`] once `cancel`
/// is set.
pub fn partition_count_cancellable(
    text: &SetPartition,
    pattern: &SetPartition,
    cancel: &AtomicBool,
) -> Result<u64> {
    count_with(PartitionSearch::new(text, pattern), cancel)
}

// Restricted growth words

/// Chooses positions whose letters map onto the pattern's letters by a
/// strictly increasing bijection.
struct RgfSearch<'a> {
    text: &'a [usize],
    pattern: &'a [usize],
    image: Vec<Option<usize>>,
    chosen: Vec<usize>,
}

impl<'a> RgfSearch<'a> {
    fn new(text: &'a RgfWord, pattern: &'a RgfWord) -> Option<Self> {
        if pattern.len() > text.len() || pattern.max_letter() > text.max_letter() {
            return None;
        }
        Some(RgfSearch {
            text: text.letters(),
            pattern: pattern.letters(),
            image: vec![None; pattern.max_letter() + 1],
            chosen: Vec::with_capacity(pattern.len()),
        })
    }

    fn monotone_with(&self, q: usize, x: usize) -> bool {
        self.image.iter().enumerate().all(|(r, img)| match img {
            None => true,
            Some(y) => (r < q && *y < x) || (r > q && *y > x),
        })
    }
}

impl Search for RgfSearch<'_> {
    fn dfs(
        &mut self,
        start: usize,
        cancel: &AtomicBool,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<Stop> {
        let j = self.chosen.len();
        let k = self.pattern.len();
        if j == k {
            return match visit(&self.chosen) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(Stop::Found),
            };
        }
        if cancel.load(Ordering::Relaxed) {
            return ControlFlow::Break(Stop::Cancelled);
        }
        let q = self.pattern[j];
        let last = self.text.len() - (k - j);
        for pos in start..=last {
            let x = self.text[pos];
            let binds = match self.image[q] {
                Some(y) if y == x => false,
                Some(_) => continue,
                None if !self.monotone_with(q, x) => continue,
                None => true,
            };
            if binds {
                self.image[q] = Some(x);
            }
            self.chosen.push(pos);
            let flow = self.dfs(pos + 1, cancel, visit);
            self.chosen.pop();
            if binds {
                self.image[q] = None;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Decides whether some subsequence of `text` value-standardizes to
/// `pattern`; the witness is the lexicographically least position set.
pub fn rgf_contains(text: &RgfWord, pattern: &RgfWord) -> MatchResult {
    match first_with(RgfSearch::new(text, pattern)) {
        Some(hit) => MatchResult::found(Witness::Subset(SubsetWitness(hit))),
        None => MatchResult::absent(),
    }
}

/// Number of position sets whose subsequence value-standardizes to `pattern`.
pub fn rgf_count(text: &RgfWord, pattern: &RgfWord) -> u64 {
    count_with(RgfSearch::new(text, pattern), &NEVER).expect("never cancelled")
}

/// [`rgf_count`] that gives up with [`Error::Cancelled`] once `cancel` is set.
pub fn rgf_count_cancellable(
    text: &RgfWord,
    pattern: &RgfWord,
    cancel: &AtomicBool,
) -> Result<u64> {
    count_with(RgfSearch::new(text, pattern), cancel)
}
