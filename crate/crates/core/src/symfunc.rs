//! Descent-multiset generating functions, symmetry tests, exact Schur
//! expansion, and the two special positivity criteria (sparse two-row and
//! hook).
//!
//! A quasisymmetric generating function of degree `N` is represented by the
//! finite multiset of its descent sets: a map from subsets of `[N-1]` to
//! counts. Symmetry and the Schur expansion are decided exactly on that
//! representation.

use std::collections::HashMap;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::statset::{full_mask, StatSet};
use crate::tableau::{partitions_of, superstandard, Partition, ShapeVectorCache};

/// Largest ambient size for which a descent vector may be materialized
/// (`2^{N-1}` potential entries).
pub const MAX_DESCENT_AMBIENT: usize = 20;

/// A multiset of subsets of `[N-1]`: the descent statistics of some family
/// of objects, with multiplicity.
#[derive(Clone, PartialEq, Eq)]
pub struct DescentVector {
    n: usize,
    counts: HashMap<u64, u64>,
}

impl DescentVector {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_DESCENT_AMBIENT {
            return Err(Error::Bound(format!(
                "descent vectors are limited to N <= {MAX_DESCENT_AMBIENT}; N = {n} would hold up to 2^{} entries",
                n.saturating_sub(1)
            )));
        }
        Ok(DescentVector {
            n,
            counts: HashMap::new(),
        })
    }

    pub fn from_stats(n: usize, stats: impl IntoIterator<Item = StatSet>) -> Result<Self> {
        let mut v = DescentVector::new(n)?;
        for s in stats {
            v.add(&s)?;
        }
        Ok(v)
    }

    pub(crate) fn from_counts(
        n: usize,
        entries: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        let mut v = DescentVector::new(n)?;
        for (bits, count) in entries {
            StatSet::from_bits(n, bits)?;
            if count > 0 {
                *v.counts.entry(bits).or_insert(0) += count;
            }
        }
        Ok(v)
    }

    /// Adds `count` occurrences of the subset `s`.
    pub fn add_count(&mut self, s: &StatSet, count: u64) -> Result<()> {
        if s.ambient() != self.n {
            return Err(Error::OutOfRange(format!(
                "statistic over [{}] fed to a vector over [{}]",
                s.ambient().saturating_sub(1),
                self.n.saturating_sub(1)
            )));
        }
        if count > 0 {
            *self.counts.entry(s.bits()).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn add(&mut self, s: &StatSet) -> Result<()> {
        if s.ambient() != self.n {
            return Err(Error::OutOfRange(format!(
                "statistic over [{}] fed to a vector over [{}]",
                s.ambient().saturating_sub(1),
                self.n.saturating_sub(1)
            )));
        }
        *self.counts.entry(s.bits()).or_insert(0) += 1;
        Ok(())
    }

    /// Ambient size `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of underlying objects.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, s: &StatSet) -> u64 {
        self.counts.get(&s.bits()).copied().unwrap_or(0)
    }

    /// Distinct subsets with a positive count.
    pub fn iter(&self) -> impl Iterator<Item = (StatSet, u64)> + '_ {
        self.counts.iter().map(move |(&bits, &c)| {
            (
                StatSet::from_bits(self.n, bits).expect("stored bits are in range"),
                c,
            )
        })
    }

    /// Moves every count from `J` to `[N-1] \ J`.
    pub fn complement(&self) -> DescentVector {
        let mask = full_mask(self.n);
        DescentVector {
            n: self.n,
            counts: self
                .counts
                .iter()
                .map(|(&bits, &c)| (bits ^ mask, c))
                .collect(),
        }
    }
}

impl fmt::Debug for DescentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut entries: Vec<(u64, u64)> = self.counts.iter().map(|(&b, &c)| (b, c)).collect();
        entries.sort_unstable();
        write!(f, "DescentVector(n={}, {{", self.n)?;
        for (i, (bits, c)) in entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s = StatSet::from_bits(self.n, *bits).expect("stored bits are in range");
            write!(f, "{s}: {c}")?;
        }
        write!(f, "}})")
    }
}

/// Tallies `stat` over `items` in parallel. Errors if some statistic has the
/// wrong ambient size.
pub fn descent_vector<T, F>(items: &[T], stat: F, n: usize) -> Result<DescentVector>
where
    T: Sync,
    F: Fn(&T) -> StatSet + Sync,
{
    DescentVector::new(n)?; // surface the size guard before spawning work
    let counts = items
        .par_iter()
        .try_fold(HashMap::<u64, u64>::new, |mut acc, item| {
            let s = stat(item);
            if s.ambient() != n {
                return Err(Error::OutOfRange(format!(
                    "statistic over [{}] fed to a vector over [{}]",
                    s.ambient().saturating_sub(1),
                    n.saturating_sub(1)
                )));
            }
            *acc.entry(s.bits()).or_insert(0) += 1;
            Ok(acc)
        })
        .try_reduce(HashMap::new, |mut a, b| {
            for (bits, c) in b {
                *a.entry(bits).or_insert(0) += c;
            }
            Ok(a)
        })?;
    Ok(DescentVector { n, counts })
}

/// See [`DescentVector::complement`].
pub fn complement_vector(v: &DescentVector) -> DescentVector {
    v.complement()
}

/// An exact Schur expansion: integer coefficients per partition of `N`.
/// Coefficients may be negative; positivity is a separate predicate.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new(n: usize, coeffs: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (shape, c) in coeffs {
            if shape.weight() != n {
                return Err(Error::WeightMismatch {
                    left: shape.weight(),
                    right: n,
                });
            }
            if c != 0 {
                map.insert(shape, c);
            }
        }
        Ok(SchurExpansion { n, coeffs: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, shape: &Partition) -> i64 {
        self.coeffs.get(shape).copied().unwrap_or(0)
    }

    /// Nonzero terms, largest shape first in part-wise lexicographic order
    /// (`(6)`, then `(5,1)`, then `(3,3)`, ..).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.coeffs.iter().rev().map(|(s, &c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_schur_positive(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// True when every shape has at most two rows.
    pub fn is_two_row(&self) -> bool {
        self.coeffs.keys().all(|s| s.len() <= 2)
    }

    /// Coefficients `c_k` of `s_{(N-k, k)}` for `k = 0 .. floor(N/2)`.
    /// `None` if a shape with three or more rows appears.
    pub fn two_row_coefficients(&self) -> Option<Vec<i64>> {
        if !self.is_two_row() {
            return None;
        }
        let mut out = vec![0i64; self.n / 2 + 1];
        for (shape, &c) in &self.coeffs {
            let k = if shape.len() == 2 { shape.parts()[1] } else { 0 };
            out[k] = c;
        }
        Some(out)
    }

    /// Sum of `c_shape * |Syt(shape)|`: the number of underlying objects
    /// when the expansion came from a genuine descent vector.
    pub fn object_count(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(shape, &c)| c * shape.hook_count() as i64)
            .sum()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a SchurExpansion);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Entry<'a> {
                    shape: &'a [usize],
                    c: i64,
                }
                let mut seq = ser.serialize_seq(Some(self.0.coeffs.len()))?;
                for (shape, c) in self.0.terms() {
                    seq.serialize_element(&Entry {
                        shape: shape.parts(),
                        c,
                    })?;
                }
                seq.end()
            }
        }
        let mut st = ser.serialize_struct("SchurExpansion", 2)?;
        st.serialize_field("N", &self.n)?;
        st.serialize_field("coeffs", &Terms(self))?;
        st.end()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (shape, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "s{shape}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurExpansion({})", self)
    }
}

/// Result of an exact expansion attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchurOutcome {
    Symmetric(SchurExpansion),
    /// The vector is not a symmetric function; the witness is the smallest
    /// residual subset after triangular elimination.
    NotSymmetric { witness: StatSet, count: i64 },
}

impl SchurOutcome {
    pub fn expansion(&self) -> Option<&SchurExpansion> {
        match self {
            SchurOutcome::Symmetric(e) => Some(e),
            SchurOutcome::NotSymmetric { .. } => None,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self, SchurOutcome::Symmetric(_))
    }

    pub fn is_schur_positive(&self) -> bool {
        self.expansion().is_some_and(|e| e.is_schur_positive())
    }
}

/// Exact Schur-coefficient extraction by triangular elimination.
///
/// Shapes are visited in decreasing conjugate order. The descent set of the
/// column superstandard tableau `T_lambda` is hit by no tableau of a shape
/// strictly smaller than `lambda` and by exactly one tableau of shape
/// `lambda` itself, so once larger shapes are eliminated the residual count
/// at `Des(T_lambda)` *is* the coefficient `c_lambda`. A zero final residual
/// certifies the expansion; anything else certifies non-symmetry.
pub fn schur_expand(v: &DescentVector, cache: &ShapeVectorCache) -> Result<SchurOutcome> {
    let n = v.n();
    let mut residual: HashMap<u64, i64> = v
        .counts
        .iter()
        .filter(|(_, &c)| c != 0)
        .map(|(&bits, &c)| (bits, c as i64))
        .collect();
    let mut coeffs: Vec<(Partition, i64)> = Vec::new();
    for shape in partitions_of(n) {
        let probe = superstandard(&shape).descent_set().bits();
        let c = residual.get(&probe).copied().unwrap_or(0);
        if c == 0 {
            continue;
        }
        let shape_vec = cache.shape_vector(&shape)?;
        for (s, count) in shape_vec.iter() {
            let e = residual.entry(s.bits()).or_insert(0);
            *e -= c * count as i64;
            if *e == 0 {
                residual.remove(&s.bits());
            }
        }
        coeffs.push((shape, c));
    }
    if let Some(&bits) = residual.keys().min() {
        let witness = StatSet::from_bits(n, bits).expect("residual bits are in range");
        return Ok(SchurOutcome::NotSymmetric {
            witness,
            count: residual[&bits],
        });
    }
    Ok(SchurOutcome::Symmetric(SchurExpansion::new(n, coeffs)?))
}

/// Symmetry test by composition counts: the vector is symmetric iff for all
/// rearrangement-equivalent compositions `alpha ~ beta` of `N`, the number
/// of objects whose statistic is contained in `S_alpha` equals the number
/// for `S_beta`.
pub fn is_symmetric_by_compositions(v: &DescentVector) -> bool {
    let n = v.n();
    let bit_count = n.saturating_sub(1);
    let size = 1usize << bit_count;
    // Subset sums over all of 2^[N-1] in one zeta transform.
    let mut sums = vec![0u64; size];
    for (&bits, &c) in &v.counts {
        sums[bits as usize] += c;
    }
    for bit in 0..bit_count {
        for s in 0..size {
            if s & (1 << bit) != 0 {
                sums[s] += sums[s ^ (1 << bit)];
            }
        }
    }
    // Group the subsets (= compositions) by the multiset of parts.
    let mut by_parts: HashMap<Vec<usize>, u64> = HashMap::new();
    #[allow(clippy::needless_range_loop)]
    for s in 0..size {
        let stat = StatSet::from_bits(n, s as u64).expect("subset of [N-1]");
        let mut parts = crate::tableau::subset_to_composition(&stat).parts().to_vec();
        parts.sort_unstable();
        match by_parts.entry(parts) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(sums[s]);
            }
            std::collections::hash_map::Entry::Occupied(e) => {
                if *e.get() != sums[s] {
                    return false;
                }
            }
        }
    }
    true
}

/// Outcome of the sparse two-row criterion or the hook criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub holds: bool,
    /// Two-row: `c_k = #(stat = odds(k))` for `k = 0..floor(N/2)`.
    /// Hook: `c_k = #(stat = [k])` for `k = 0..N-1`.
    /// Empty when the criterion fails.
    pub coefficients: Vec<u64>,
}

/// Sparse two-row criterion, on a prebuilt vector: holds iff every observed
/// statistic is sparse and the superset count `#(stat >= J)` depends only on
/// `|J|` over sparse `J`. When it holds, the generating function equals
/// `sum_k c_k s_{(N-k,k)}` with `c_k = #(stat = odds(k))`.
pub fn sparse_criterion_of(v: &DescentVector) -> CriterionOutcome {
    let failed = CriterionOutcome {
        holds: false,
        coefficients: Vec::new(),
    };
    if v.iter().any(|(s, _)| !s.is_sparse()) {
        return failed;
    }
    let n = v.n();
    let bit_count = n.saturating_sub(1);
    let size = 1usize << bit_count;
    // Superset sums: zeta transform downwards.
    let mut sums = vec![0u64; size];
    for (&bits, &c) in &v.counts {
        sums[bits as usize] += c;
    }
    for bit in 0..bit_count {
        for s in (0..size).rev() {
            if s & (1 << bit) == 0 {
                sums[s] += sums[s | (1 << bit)];
            }
        }
    }
    let mut per_size: Vec<Option<u64>> = vec![None; n / 2 + 1];
    for s in 0..size as u64 {
        if s & (s >> 1) != 0 {
            continue; // not sparse
        }
        let k = s.count_ones() as usize;
        if k > n / 2 {
            continue;
        }
        match per_size[k] {
            None => per_size[k] = Some(sums[s as usize]),
            Some(expected) => {
                if expected != sums[s as usize] {
                    return failed;
                }
            }
        }
    }
    let coefficients = (0..=n / 2)
        .map(|k| v.get(&StatSet::odds(n, k).expect("odds(k) fits in [N-1]")))
        .collect();
    CriterionOutcome {
        holds: true,
        coefficients,
    }
}

/// Sparse two-row criterion over raw items. See [`sparse_criterion_of`].
pub fn sparse_criterion<T, F>(items: &[T], stat: F, n: usize) -> Result<CriterionOutcome>
where
    T: Sync,
    F: Fn(&T) -> StatSet + Sync,
{
    Ok(sparse_criterion_of(&descent_vector(items, stat, n)?))
}

/// Hook criterion, on a prebuilt vector: holds iff `#(stat = J)` depends
/// only on `|J|`. When it holds, the generating function equals
/// `sum_k c_k s_{(N-k, 1^k)}` with `c_k = #(stat = [k])`.
pub fn hook_criterion_of(v: &DescentVector) -> CriterionOutcome {
    let failed = CriterionOutcome {
        holds: false,
        coefficients: Vec::new(),
    };
    let n = v.n();
    if n == 0 {
        return CriterionOutcome {
            holds: true,
            coefficients: vec![v.get(&StatSet::empty(0).expect("ambient 0"))],
        };
    }
    let binom = |n: usize, k: usize| -> u64 {
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) as u64 / (i + 1) as u64;
        }
        acc
    };
    // Value and entry count per subset size; a size with a nonzero common
    // value must be fully populated, otherwise some subset counts zero.
    let mut value: Vec<Option<u64>> = vec![None; n];
    let mut seen: Vec<u64> = vec![0; n];
    for (s, c) in v.iter() {
        let k = s.len();
        seen[k] += 1;
        match value[k] {
            None => value[k] = Some(c),
            Some(expected) => {
                if expected != c {
                    return failed;
                }
            }
        }
    }
    for k in 0..n {
        if let Some(val) = value[k] {
            if val != 0 && seen[k] != binom(n - 1, k) {
                return failed;
            }
        }
    }
    let coefficients = (0..n)
        .map(|k| v.get(&StatSet::new(n, 1..=k).expect("[k] fits in [N-1]")))
        .collect();
    CriterionOutcome {
        holds: true,
        coefficients,
    }
}

/// Hook criterion over raw items. See [`hook_criterion_of`].
pub fn hook_criterion<T, F>(items: &[T], stat: F, n: usize) -> Result<CriterionOutcome>
where
    T: Sync,
    F: Fn(&T) -> StatSet + Sync,
{
    Ok(hook_criterion_of(&descent_vector(items, stat, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{enumerate_matchings, Matching};
    use crate::tableau::{enumerate_syt, Partition};

    fn short_vector(n: usize, f: usize) -> DescentVector {
        let ms = enumerate_matchings(n, f);
        descent_vector(&ms, Matching::short_set, n).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descent_vector_of_m40() {
        let v = short_vector(4, 0);
        assert_eq!(v.total(), 3);
        assert_eq!(v.get(&StatSet::empty(4).unwrap()), 1);
        assert_eq!(v.get(&StatSet::new(4, [2]).unwrap()), 1);
        assert_eq!(v.get(&StatSet::new(4, [1, 3]).unwrap()), 1);
    }

    #[test]
    fn descent_vector_of_m31_and_empty() {
        let v = short_vector(3, 1);
        assert_eq!(v.total(), 3);
        for s in [
            StatSet::empty(3).unwrap(),
            StatSet::new(3, [1]).unwrap(),
            StatSet::new(3, [2]).unwrap(),
        ] {
            assert_eq!(v.get(&s), 1);
        }
        let empty: Vec<Matching> = Vec::new();
        let v = descent_vector(&empty, Matching::short_set, 5).unwrap();
        assert_eq!(v.total(), 0);
    }

    #[test]
    fn descent_vector_rejects_wrong_ambient() {
        let ms = enumerate_matchings(4, 0);
        assert!(descent_vector(&ms, Matching::short_set, 5).is_err());
        assert!(DescentVector::new(21).is_err());
    }

    #[test]
    fn complement_examples() {
        let v = short_vector(4, 0);
        let c = v.complement();
        assert_eq!(c.get(&StatSet::new(4, [1, 2, 3]).unwrap()), 1);
        assert_eq!(c.get(&StatSet::new(4, [1, 3]).unwrap()), 1);
        assert_eq!(c.get(&StatSet::new(4, [2]).unwrap()), 1);
        assert_eq!(c.complement(), v);
        let zero = DescentVector::new(6).unwrap();
        assert_eq!(zero.complement().total(), 0);
    }

    #[test]
    fn symmetry_by_compositions() {
        assert!(is_symmetric_by_compositions(&short_vector(4, 0)));
        // A single fundamental term F_{1} at N = 3 is not symmetric.
        let v =
            DescentVector::from_stats(3, [StatSet::new(3, [1]).unwrap()]).unwrap();
        assert!(!is_symmetric_by_compositions(&v));
        // A constant term is.
        let v = DescentVector::from_stats(3, [StatSet::empty(3).unwrap()]).unwrap();
        assert!(is_symmetric_by_compositions(&v));
    }

    #[test]
    fn expand_syt_descent_vector_is_single_schur() {
        let cache = ShapeVectorCache::in_memory();
        for n in 0..=7 {
            for shape in partitions_of(n) {
                let ts = enumerate_syt(&shape);
                let v = descent_vector(&ts, |t| t.descent_set(), n).unwrap();
                match schur_expand(&v, &cache).unwrap() {
                    SchurOutcome::Symmetric(e) => {
                        assert_eq!(e.coefficient(&shape), 1, "shape {shape}");
                        assert_eq!(e.terms().count(), 1, "shape {shape}");
                    }
                    other => panic!("Syt({shape}) must be symmetric, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn expand_matchings_examples() {
        let cache = ShapeVectorCache::in_memory();
        let e = schur_expand(&short_vector(4, 0), &cache)
            .unwrap()
            .expansion()
            .cloned()
            .unwrap();
        assert_eq!(e.coefficient(&p(&[4])), 1);
        assert_eq!(e.coefficient(&p(&[2, 2])), 1);
        assert_eq!(e.terms().count(), 2);
        assert_eq!(e.to_string(), "s(4) + s(2,2)");

        let e = schur_expand(&short_vector(3, 1), &cache)
            .unwrap()
            .expansion()
            .cloned()
            .unwrap();
        assert_eq!(e.coefficient(&p(&[3])), 1);
        assert_eq!(e.coefficient(&p(&[2, 1])), 1);
        assert_eq!(e.terms().count(), 2);

        let e = schur_expand(&short_vector(6, 0), &cache)
            .unwrap()
            .expansion()
            .cloned()
            .unwrap();
        assert_eq!(e.to_string(), "5*s(6) + s(5,1) + s(3,3)");
    }

    #[test]
    fn expand_rejects_single_fundamental() {
        let cache = ShapeVectorCache::in_memory();
        let v =
            DescentVector::from_stats(3, [StatSet::new(3, [1]).unwrap()]).unwrap();
        match schur_expand(&v, &cache).unwrap() {
            SchurOutcome::NotSymmetric { .. } => {}
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn expand_reconstructs_input() {
        // Independent route: rebuild the vector from the claimed coefficients
        // by re-enumerating tableaux, and compare multiset-exactly.
        let cache = ShapeVectorCache::in_memory();
        for (n, f) in [(4, 0), (5, 1), (6, 0), (6, 2), (7, 1)] {
            let v = short_vector(n, f);
            let e = schur_expand(&v, &cache).unwrap().expansion().cloned().unwrap();
            let mut rebuilt = DescentVector::new(n).unwrap();
            for (shape, c) in e.terms() {
                assert!(c > 0);
                for t in enumerate_syt(shape) {
                    for _ in 0..c {
                        rebuilt.add(&t.descent_set()).unwrap();
                    }
                }
            }
            assert_eq!(rebuilt, v, "reconstruction at ({n}, {f})");
        }
    }

    #[test]
    fn symmetric_but_not_positive_vector() {
        // s(3,1) - s(2,2) + s(2,1,1) has nonnegative descent counts and is
        // symmetric, but one Schur coefficient is negative.
        let cache = ShapeVectorCache::in_memory();
        let v = DescentVector::from_stats(
            4,
            [
                StatSet::new(4, [1]).unwrap(),
                StatSet::new(4, [3]).unwrap(),
                StatSet::new(4, [2, 3]).unwrap(),
                StatSet::new(4, [1, 2]).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_symmetric_by_compositions(&v));
        match schur_expand(&v, &cache).unwrap() {
            SchurOutcome::Symmetric(e) => {
                assert_eq!(e.coefficient(&p(&[3, 1])), 1);
                assert_eq!(e.coefficient(&p(&[2, 2])), -1);
                assert_eq!(e.coefficient(&p(&[2, 1, 1])), 1);
                assert!(!e.is_schur_positive());
            }
            other => panic!("expected symmetric, got {other:?}"),
        }
    }

    #[test]
    fn composition_test_agrees_with_expansion() {
        let cache = ShapeVectorCache::in_memory();
        for n in 0..=8 {
            let mut f = n % 2;
            while f <= n {
                let v = short_vector(n, f);
                assert_eq!(
                    is_symmetric_by_compositions(&v),
                    schur_expand(&v, &cache).unwrap().is_symmetric(),
                    "({n}, {f})"
                );
                f += 2;
            }
        }
    }

    #[test]
    fn sparse_criterion_examples() {
        let ms = enumerate_matchings(6, 0);
        let out = sparse_criterion(&ms, Matching::short_set, 6).unwrap();
        assert!(out.holds);
        assert_eq!(out.coefficients, vec![5, 1, 0, 1]);

        // Constant-empty statistic.
        let items = [0u8; 4];
        let out = sparse_criterion(&items, |_| StatSet::empty(5).unwrap(), 5).unwrap();
        assert!(out.holds);
        assert_eq!(out.coefficients, vec![4, 0, 0]);

        // A non-sparse value sinks the criterion.
        let items = [0u8];
        let out = sparse_criterion(&items, |_| StatSet::new(4, [1, 2]).unwrap(), 4).unwrap();
        assert!(!out.holds);
    }

    #[test]
    fn sparse_criterion_rejects_unbalanced_superset_counts() {
        // Sparse values, but #(stat >= {1}) = 1 != 0 = #(stat >= {2}).
        let v = DescentVector::from_stats(
            4,
            [StatSet::empty(4).unwrap(), StatSet::new(4, [1]).unwrap()],
        )
        .unwrap();
        let out = sparse_criterion_of(&v);
        assert!(!out.holds);
        // And the same vector is not two-row expandable.
        let cache = ShapeVectorCache::in_memory();
        assert!(!schur_expand(&v, &cache).unwrap().is_symmetric());
    }

    #[test]
    fn hook_criterion_examples() {
        // All subsets of [N-1], one each: uniform, every c_k = 1.
        for n in 2..=6usize {
            let subsets: Vec<StatSet> = (0..1u64 << (n - 1))
                .map(|bits| StatSet::from_bits(n, bits).unwrap())
                .collect();
            let out = hook_criterion(&subsets, |s| *s, n).unwrap();
            assert!(out.holds);
            assert_eq!(out.coefficients, vec![1; n]);
        }

        let items = [0u8; 3];
        let out = hook_criterion(&items, |_| StatSet::empty(4).unwrap(), 4).unwrap();
        assert!(out.holds);
        assert_eq!(out.coefficients, vec![3, 0, 0, 0]);

        let ms = enumerate_matchings(4, 0);
        let out = hook_criterion(&ms, Matching::short_set, 4).unwrap();
        assert!(!out.holds, "counts at {{1,3}} and {{2,3}} differ");
    }

    #[test]
    fn expansion_json_shape() {
        let cache = ShapeVectorCache::in_memory();
        let e = schur_expand(&short_vector(6, 0), &cache)
            .unwrap()
            .expansion()
            .cloned()
            .unwrap();
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"N":6,"coeffs":[{"shape":[6],"c":5},{"shape":[5,1],"c":1},{"shape":[3,3],"c":1}]}"#
        );
    }
}
