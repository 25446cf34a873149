//! k-kernels, automaticity and k-regular linear representations of
//! sequence prefixes.
//!
//! Everything here works on finite prefixes, so "closed" and "rank" are
//! evidence at the working depth, not proofs about the infinite sequence.

mod automaton;
mod kernel;
mod representation;

use crate::algebra::{Rat, TruncatedSeries};
use crate::{Error, Result};

pub use automaton::{automaton_export, Automaton, AutomatonState};
pub use kernel::{is_automatic_prefix, kernel_elements, regular_rank, Automaticity, KernelElement};
pub use representation::{linear_representation, LinearRepresentation};

/// The values `f(0..L)` of a sequence, read with radix `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePrefix {
    values: Vec<Rat>,
    k: usize,
}

impl SequencePrefix {
    pub fn new(values: Vec<Rat>, k: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty sequence prefix".into()));
        }
        if k < 2 {
            return Err(Error::InvalidArgument(format!("radix {k} < 2")));
        }
        Ok(SequencePrefix { values, k })
    }

    pub fn from_ints(values: &[i64], k: usize) -> Result<Self> {
        SequencePrefix::new(values.iter().map(|&v| crate::algebra::rat(v)).collect(), k)
    }

    pub fn from_series(f: &TruncatedSeries, k: usize) -> Result<Self> {
        SequencePrefix::new(f.coeffs().to_vec(), k)
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub(crate) fn k_pow(&self, l: usize) -> usize {
        self.k.checked_pow(l as u32).unwrap_or(usize::MAX)
    }
}

/// `t(n) = (-1)^s(n)` with `s(n)` the number of ones in the binary expansion.
pub fn thue_morse(n: u64) -> i64 {
    if n.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Base-`k` digits of `n`, least significant first; empty for `n = 0`.
pub fn digits_lsd(mut n: u64, k: usize) -> Vec<usize> {
    let k = k as u64;
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % k) as usize);
        n /= k;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thue_morse_recursive(n: u64) -> i64 {
        match n {
            0 => 1,
            _ if n.is_multiple_of(2) => thue_morse_recursive(n / 2),
            _ => -thue_morse_recursive(n / 2),
        }
    }

    #[test]
    fn thue_morse_values() {
        assert_eq!(thue_morse(0), 1);
        assert_eq!(thue_morse(1), -1);
        assert_eq!(thue_morse(6), 1);
    }

    #[test]
    fn thue_morse_definitions_agree() {
        for n in 0..1u64 << 20 {
            assert_eq!(thue_morse(n), thue_morse_recursive(n), "n = {n}");
        }
    }

    #[test]
    fn digits() {
        assert!(digits_lsd(0, 2).is_empty());
        assert_eq!(digits_lsd(6, 2), vec![0, 1, 1]);
        assert_eq!(digits_lsd(10, 3), vec![1, 0, 1]);
    }
}
