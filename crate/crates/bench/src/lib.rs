//! Fixed inputs for the benchmarks.

use sppm_core::Permutation;

/// `i ↦ (a·i mod p)` on `[p-1]` for prime `p`: a scrambled permutation whose
/// shape does not depend on any RNG.
pub fn modular_permutation(p: usize, a: usize) -> Permutation {
    Permutation::new((1..p).map(|i| a * i % p).collect()).expect("a is a unit mod p")
}

/// The layered permutation with layers of size `layer`, e.g. `3,2,1,6,5,4`.
pub fn layered(n: usize, layer: usize) -> Permutation {
    let values = (0..n)
        .map(|i| {
            let start = i - i % layer;
            let end = (start + layer).min(n);
            start + end - i
        })
        .collect();
    Permutation::new(values).expect("layered permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_permutations() {
        assert_eq!(layered(6, 3).values(), &[3, 2, 1, 6, 5, 4]);
        assert_eq!(layered(5, 2).values(), &[2, 1, 4, 3, 5]);
        assert_eq!(modular_permutation(7, 3).values(), &[3, 6, 2, 5, 1, 4]);
    }
}
