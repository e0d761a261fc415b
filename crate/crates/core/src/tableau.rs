//! Partitions, compositions, standard Young tableaux, descent sets, column
//! superstandard tableaux, the conjugate order, and the per-shape descent
//! vector cache.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::statset::StatSet;
use crate::symfunc::DescentVector;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths `(lambda'_1, lambda'_2, ..)`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Shape `(n - k, k)`; `k = 0` gives a single row. Rejects `k > n - k`.
    pub fn two_row(n: usize, k: usize) -> Result<Self> {
        if k > n - k {
            return Err(Error::InvalidPartition(format!(
                "({}, {k}) is not weakly decreasing",
                n - k
            )));
        }
        if n == 0 {
            return Ok(Partition::empty());
        }
        if k == 0 {
            Partition::new(vec![n])
        } else {
            Partition::new(vec![n - k, k])
        }
    }

    /// Hook shape `(n - k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::InvalidPartition(format!(
                "hook ({}, 1^{k}) needs k < n",
                n - k
            )));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Partition::new(parts)
    }

    /// Number of standard Young tableaux of this shape, by the hook-length
    /// formula. Used as an internal cross-check on enumeration.
    pub fn hook_count(&self) -> u128 {
        let n = self.weight();
        assert!(n <= 30, "hook-length product overflows past n = 30");
        let conj = self.conjugate();
        let mut numerator: u128 = 1;
        for k in 1..=n as u128 {
            numerator *= k;
        }
        let mut denom: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - 1 - j;
                let leg = conj.parts[j] - 1 - i;
                denom *= (arm + leg + 1) as u128;
            }
        }
        numerator / denom
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, parentheses optional: `(4,2,2,1)` or
    /// `4,2,2,1`. An empty list is the empty partition.
    fn from_str(input: &str) -> Result<Self> {
        let inner = input.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part '{}'", p.trim())))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// Compares partitions of equal weight in the conjugate order: lexicographic
/// on the column-length sequences. `Greater` means the left side is larger.
pub fn conjugate_cmp(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    Ok(conjugate_cmp_unchecked(a, b))
}

fn conjugate_cmp_unchecked(a: &Partition, b: &Partition) -> Ordering {
    a.conjugate().parts.cmp(&b.conjugate().parts)
}

/// All partitions of `n`, sorted in decreasing conjugate order. The head is
/// `(1^n)` and the tail is `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn gen(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            gen(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| conjugate_cmp_unchecked(b, a));
    out
}

/// A composition of `N`: positive parts in a fixed order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{}", self)
    }
}

/// `{i_1 < .. < i_l} in [N-1]` maps to `(i_1, i_2 - i_1, .., N - i_l)`.
pub fn subset_to_composition(s: &StatSet) -> Composition {
    let n = s.ambient();
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for i in s.members() {
        parts.push(i - prev);
        prev = i;
    }
    if n > 0 {
        parts.push(n - prev);
    }
    Composition { parts }
}

/// Inverse of [`subset_to_composition`]: partial sums without the total.
pub fn composition_to_subset(c: &Composition) -> Result<StatSet> {
    let n = c.weight();
    let mut acc = 0;
    StatSet::new(
        n,
        c.parts[..c.parts.len().saturating_sub(1)]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect::<Vec<_>>(),
    )
}

/// A standard Young tableau: rows and columns strictly increasing, entries
/// exactly `1..=N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease".into(),
            ));
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("rows must strictly increase".into()));
            }
            for &e in row {
                if e == 0 || e > n {
                    return Err(Error::InvalidTableau(format!("entry {e} not in [1, {n}]")));
                }
                if seen[e] {
                    return Err(Error::InvalidTableau(format!("entry {e} repeated")));
                }
                seen[e] = true;
            }
        }
        for i in 1..rows.len() {
            #[allow(clippy::needless_range_loop)]
            for j in 0..rows[i].len() {
                if rows[i - 1][j] >= rows[i][j] {
                    return Err(Error::InvalidTableau(
                        "columns must strictly increase".into(),
                    ));
                }
            }
        }
        Ok(Tableau { rows })
    }

    /// The unique two-row tableau of shape `(n - k, k)` with the given second
    /// row. The first row is the complement.
    pub fn two_row(n: usize, row2: &[usize]) -> Result<Self> {
        let mut in_row2 = vec![false; n + 1];
        for &e in row2 {
            if e == 0 || e > n {
                return Err(Error::InvalidTableau(format!("entry {e} not in [1, {n}]")));
            }
            in_row2[e] = true;
        }
        let row1: Vec<usize> = (1..=n).filter(|&e| !in_row2[e]).collect();
        let mut row2 = row2.to_vec();
        row2.sort_unstable();
        let rows = if n == 0 {
            Vec::new()
        } else if row2.is_empty() {
            vec![row1]
        } else {
            vec![row1, row2]
        };
        Tableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        if self.rows.is_empty() {
            Partition::empty()
        } else {
            Partition {
                parts: self.rows.iter().map(|r| r.len()).collect(),
            }
        }
    }

    /// `Des(T) = {i : i + 1 sits in a strictly lower row than i}`.
    pub fn descent_set(&self) -> StatSet {
        let n = self.size();
        let mut row_of = vec![0usize; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = r;
            }
        }
        StatSet::new(n, (1..n).filter(|&i| row_of[i + 1] > row_of[i]))
            .expect("descents lie in [N-1]")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{}", self)
    }
}

impl std::str::FromStr for Tableau {
    type Err = Error;

    /// Parses rows separated by `/`, entries by `,`; brackets optional:
    /// `[1,3,4,5/2]` or `1,3,4,5/2`. An empty list is the empty tableau.
    fn from_str(input: &str) -> Result<Self> {
        let inner = input.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Tableau::new(Vec::new());
        }
        let rows: Vec<Vec<usize>> = inner
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidTableau(format!("bad entry '{}'", e.trim())))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        Tableau::new(rows)
    }
}

/// All standard Young tableaux of the given shape, by backtracking over
/// placements of `1..=N` (rows tried top to bottom, so the order is stable).
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.weight();
    let mut fills: Vec<usize> = vec![0; shape.len()];
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fn place(
        next: usize,
        n: usize,
        shape: &[usize],
        fills: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            if fills[r] < shape[r] && (r == 0 || fills[r] < fills[r - 1]) {
                fills[r] += 1;
                rows[r].push(next);
                place(next + 1, n, shape, fills, rows, out);
                rows[r].pop();
                fills[r] -= 1;
            }
        }
    }
    place(1, n, shape.parts(), &mut fills, &mut rows, &mut out);
    out
}

/// The column superstandard tableau `T_lambda`: columns filled one by one,
/// so cell `(i, j)` holds `lambda'_1 + .. + lambda'_{j-1} + i`. Its descent
/// set is `[N-1]` minus the partial column sums.
pub fn superstandard(shape: &Partition) -> Tableau {
    let conj = shape.conjugate();
    let offsets: Vec<usize> = conj
        .parts()
        .iter()
        .scan(0, |acc, &c| {
            let off = *acc;
            *acc += c;
            Some(off)
        })
        .collect();
    let rows: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| (0..row).map(|j| offsets[j] + i + 1).collect())
        .collect();
    Tableau { rows }
}

/// Descent multiset of `Syt(shape)` with an in-memory memo and an optional
/// on-disk layer, one file per shape.
///
/// Disk files are plain text: a header line naming the shape, then sorted
/// `bitmask count` lines. Writes go to a temporary file first and are
/// renamed into place, so concurrent runs sharing a cache directory are
/// safe. Unreadable or stale files are recomputed and overwritten.
pub struct ShapeVectorCache {
    dir: Option<PathBuf>,
    memo: Mutex<HashMap<Partition, Arc<DescentVector>>>,
}

impl ShapeVectorCache {
    pub fn in_memory() -> Self {
        ShapeVectorCache {
            dir: None,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(ShapeVectorCache {
            dir: Some(dir),
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn file_name(shape: &Partition) -> String {
        if shape.is_empty() {
            return "dv_00_empty.txt".into();
        }
        let parts: Vec<String> = shape.parts().iter().map(|p| p.to_string()).collect();
        format!("dv_{:02}_{}.txt", shape.weight(), parts.join("-"))
    }

    /// The descent multiset `{Des(T) : T in Syt(shape)}`.
    pub fn shape_vector(&self, shape: &Partition) -> Result<Arc<DescentVector>> {
        if let Some(v) = self.memo.lock().unwrap().get(shape) {
            return Ok(Arc::clone(v));
        }
        let path = self.dir.as_ref().map(|d| d.join(Self::file_name(shape)));
        if let Some(path) = &path {
            if let Some(v) = Self::load(path, shape) {
                let v = Arc::new(v);
                self.memo
                    .lock()
                    .unwrap()
                    .insert(shape.clone(), Arc::clone(&v));
                return Ok(v);
            }
        }
        let n = shape.weight();
        let stats = enumerate_syt(shape).into_iter().map(|t| t.descent_set());
        let v = Arc::new(DescentVector::from_stats(n, stats)?);
        if let Some(path) = &path {
            Self::store(path, shape, &v)?;
        }
        self.memo
            .lock()
            .unwrap()
            .insert(shape.clone(), Arc::clone(&v));
        Ok(v)
    }

    /// Computes (and persists) the vectors of every shape of weight `n`,
    /// one rayon task per shape.
    pub fn precompute(&self, n: usize) -> Result<()> {
        partitions_of(n)
            .par_iter()
            .try_for_each(|shape| self.shape_vector(shape).map(|_| ()))
    }

    fn load(path: &Path, shape: &Partition) -> Option<DescentVector> {
        let file = std::fs::File::open(path).ok()?;
        let mut lines = BufReader::new(file).lines();
        let header = lines.next()?.ok()?;
        if header.trim() != format!("shape {shape}") {
            return None;
        }
        let n = shape.weight();
        let mut counts = Vec::new();
        for line in lines {
            let line = line.ok()?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (bits, count) = line.split_once(' ')?;
            counts.push((bits.parse::<u64>().ok()?, count.parse::<u64>().ok()?));
        }
        let v = DescentVector::from_counts(n, counts).ok()?;
        // Stale or truncated files fail the tableau-count check and are rebuilt.
        if v.total() as u128 != shape.hook_count() {
            return None;
        }
        Some(v)
    }

    fn store(path: &Path, shape: &Partition, v: &DescentVector) -> Result<()> {
        let dir = path.parent().expect("cache file has a parent directory");
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        writeln!(tmp, "shape {shape}")?;
        let mut entries: Vec<(u64, u64)> = v.iter().map(|(s, c)| (s.bits(), c)).collect();
        entries.sort_unstable();
        for (bits, count) in entries {
            writeln!(tmp, "{bits} {count}")?;
        }
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }
}

/// Convenience form of [`ShapeVectorCache::shape_vector`].
pub fn descent_vector_of_shape(
    shape: &Partition,
    cache: &ShapeVectorCache,
) -> Result<Arc<DescentVector>> {
    cache.shape_vector(shape)
}
