use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation, stored with 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that every
    /// value of `[n]` occurs exactly once.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is outside [1, {n}]"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// Order-standardizes an arbitrary sequence of distinct integers: the
    /// smallest entry becomes 1, the next 2, and so on.
    pub fn standardize_word(word: &[usize]) -> Result<Permutation> {
        let mut order: Vec<usize> = (0..word.len()).collect();
        order.sort_by_key(|&i| word[i]);
        if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
            return Err(Error::InvalidPermutation(
                "word has repeated entries".to_string(),
            ));
        }
        let mut values = vec![0; word.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Ok(Permutation { values })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.values)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijective_words() {
        assert!(Permutation::new(vec![2, 2, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn inverse_and_display() {
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(p.inverse().values(), &[3, 1, 2]);
        assert_eq!(p.to_string(), "2,3,1");
        assert_eq!(p.at(1), Some(2));
        assert_eq!(p.at(0), None);
        assert_eq!(p.at(4), None);
    }

    #[test]
    fn standardize_word_ranks_values() {
        let p = Permutation::standardize_word(&[7, 2, 9]).unwrap();
        assert_eq!(p.values(), &[2, 1, 3]);
        assert!(Permutation::standardize_word(&[3, 3]).is_err());
    }
}
