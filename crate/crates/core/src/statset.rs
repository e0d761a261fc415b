//! Subsets of `[N-1]` used as statistic values: short-chord sets, descent
//! sets, ascent sets. Stored as bitmasks, bit `i-1` for element `i`.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum ambient size; elements live in `[N-1]` and must fit one `u64`.
pub const MAX_AMBIENT: usize = 64;

/// A subset of `[N-1]` for an ambient size `N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StatSet {
    n: usize,
    bits: u64,
}

/// Bitmask of the full set `[n-1]`.
pub fn full_mask(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        (1u64 << (n - 1)) - 1
    }
}

impl StatSet {
    /// The empty subset of `[n-1]`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// The full set `[n-1]`.
    pub fn full(n: usize) -> Result<Self> {
        Self::from_bits(n, full_mask(n))
    }

    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for i in members {
            if i == 0 || i >= n {
                return Err(Error::OutOfRange(format!(
                    "element {i} not in [{}] for ambient size {n}",
                    n.saturating_sub(1)
                )));
            }
            bits |= 1 << (i - 1);
        }
        Self::from_bits(n, bits)
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::Bound(format!(
                "ambient size {n} exceeds the supported maximum {MAX_AMBIENT}"
            )));
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::OutOfRange(format!(
                "bitmask {bits:#x} has elements outside [{}]",
                n.saturating_sub(1)
            )));
        }
        Ok(StatSet { n, bits })
    }

    /// `odds(k) = {1, 3, .., 2k-1}` inside `[n-1]`.
    pub fn odds(n: usize, k: usize) -> Result<Self> {
        Self::new(n, (0..k).map(|j| 2 * j + 1))
    }

    /// Ambient size `N` (elements range over `[N-1]`).
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.bits & (1 << (i - 1)) != 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(|&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members().collect()
    }

    /// `[N-1]` minus this set, same ambient size.
    pub fn complement(&self) -> StatSet {
        StatSet {
            n: self.n,
            bits: self.bits ^ full_mask(self.n),
        }
    }

    /// No two consecutive elements.
    pub fn is_sparse(&self) -> bool {
        self.bits & (self.bits >> 1) == 0
    }

    pub fn is_subset_of(&self, other: &StatSet) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }
}

impl fmt::Display for StatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for StatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StatSet(n={}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_membership() {
        let s = StatSet::new(6, [4]).unwrap();
        assert!(s.contains(4));
        assert!(!s.contains(3));
        assert_eq!(s.to_vec(), vec![4]);
        assert_eq!(s.to_string(), "{4}");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(StatSet::new(4, [4]).is_err()); // members live in [3]
        assert!(StatSet::new(4, [0]).is_err());
        assert!(StatSet::new(65, [1]).is_err());
    }

    #[test]
    fn complement_is_involution() {
        let s = StatSet::new(4, [2]).unwrap();
        assert_eq!(s.complement().to_vec(), vec![1, 3]);
        assert_eq!(s.complement().complement(), s);
        // Degenerate ambient sizes.
        assert!(StatSet::empty(0).unwrap().complement().is_empty());
        assert!(StatSet::empty(1).unwrap().complement().is_empty());
    }

    #[test]
    fn sparsity() {
        assert!(StatSet::new(6, [1, 3, 5]).unwrap().is_sparse());
        assert!(!StatSet::new(6, [2, 3]).unwrap().is_sparse());
        assert!(StatSet::empty(6).unwrap().is_sparse());
    }

    #[test]
    fn odds_prefix() {
        assert_eq!(StatSet::odds(8, 3).unwrap().to_vec(), vec![1, 3, 5]);
        assert!(StatSet::odds(8, 0).unwrap().is_empty());
        assert!(StatSet::odds(4, 3).is_err()); // 5 outside [3]
    }
}
