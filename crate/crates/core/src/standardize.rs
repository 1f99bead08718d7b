//! The order-preserving relabelling of a finite set onto `[#T]`.

use std::collections::BTreeSet;

/// Sends the i-th smallest element of its domain to `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StandardizationMap {
    domain: Vec<usize>,
}

/// Builds the standardization map of `set`. Repeated elements are collapsed;
/// the empty set gives the empty map.
pub fn standardize<I: IntoIterator<Item = usize>>(set: I) -> StandardizationMap {
    let domain: BTreeSet<usize> = set.into_iter().collect();
    StandardizationMap {
        domain: domain.into_iter().collect(),
    }
}

impl StandardizationMap {
    /// Ascending domain.
    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.domain.binary_search(&x).ok().map(|r| r + 1)
    }

    /// Preimage of `i` in `1..=len()`.
    pub fn preimage(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.domain.get(i).copied())
    }

    /// `(x, st(x))` pairs in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.domain.iter().enumerate().map(|(r, &x)| (x, r + 1))
    }
}
