//! The core-reduction process, the two-row tableau of a matching, ballot
//! paths, and the bijection between matchings and (short-chord-free core,
//! two-row tableau) pairs.

use rand::RngCore;

use crate::error::{Error, Result};
use crate::matching::{combine, Matching};
use crate::tableau::Tableau;

/// Outcome of the reduction process on a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    /// The short-chord-free matching left after reduction, re-indexed to
    /// `[N - 2k]`.
    pub core: Matching,
    /// Vertices never removed, in increasing order (original labels).
    pub stable: Vec<usize>,
    /// Chords removed during reduction (original labels), sorted.
    pub unstable_chords: Vec<(usize, usize)>,
}

impl ReductionResult {
    /// Number of unstable chords, the `k` of the image shape `(N-k, k)`.
    pub fn k(&self) -> usize {
        self.unstable_chords.len()
    }
}

fn reduce_inner(
    m: &Matching,
    mut pick: impl FnMut(&[(usize, usize)]) -> usize,
) -> ReductionResult {
    let n = m.n();
    let mut alive = vec![true; n + 1];
    let mut remaining: Vec<(usize, usize)> = m.chords().to_vec();
    let mut unstable = Vec::new();
    loop {
        // A chord is currently short when no remaining vertex separates its
        // endpoints.
        let short: Vec<(usize, usize)> = remaining
            .iter()
            .copied()
            .filter(|&(a, b)| (a + 1..b).all(|v| !alive[v]))
            .collect();
        if short.is_empty() {
            break;
        }
        let chord = short[pick(&short)];
        alive[chord.0] = false;
        alive[chord.1] = false;
        remaining.retain(|&c| c != chord);
        unstable.push(chord);
    }
    let stable: Vec<usize> = (1..=n).filter(|&v| alive[v]).collect();
    let core = m
        .restrict(&stable)
        .expect("stable vertices form an invariant set");
    unstable.sort_unstable();
    ReductionResult {
        core,
        stable,
        unstable_chords: unstable,
    }
}

/// Repeatedly removes chords whose endpoints are adjacent among the
/// remaining vertices, leftmost first, until none are short. The result does
/// not depend on the removal order; the randomized variant
/// [`reduce_with_rng`] exists to check exactly that.
pub fn reduce(m: &Matching) -> ReductionResult {
    reduce_inner(m, |_| 0)
}

/// Same reduction with the removal order driven by `rng`.
pub fn reduce_with_rng(m: &Matching, rng: &mut impl RngCore) -> ReductionResult {
    reduce_inner(m, |short| (rng.next_u64() % short.len() as u64) as usize)
}

/// The two-row tableau `T(m)`: the second row holds the closers of the
/// unstable chords. Its descent set equals `Short(m)`.
pub fn tableau_of(m: &Matching) -> Tableau {
    let reduction = reduce(m);
    let row2: Vec<usize> = reduction.unstable_chords.iter().map(|&(_, b)| b).collect();
    Tableau::two_row(m.n(), &row2).expect("closers of unstable chords form a valid second row")
}

/// The bijection `m -> (core(m), T(m))`.
pub fn forward(m: &Matching) -> (Matching, Tableau) {
    let reduction = reduce(m);
    let row2: Vec<usize> = reduction.unstable_chords.iter().map(|&(_, b)| b).collect();
    let t = Tableau::two_row(m.n(), &row2)
        .expect("closers of unstable chords form a valid second row");
    (reduction.core, t)
}

/// A lattice path of `N` steps `+1`/`-1` from the origin that never dips
/// below the axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotPath {
    /// Prefix heights `p_0 = 0, p_1, .., p_N`.
    heights: Vec<usize>,
}

impl BallotPath {
    pub fn new(steps: &[i8]) -> Result<Self> {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h = 0isize;
        heights.push(0);
        for (i, &s) in steps.iter().enumerate() {
            match s {
                1 => h += 1,
                -1 => h -= 1,
                other => {
                    return Err(Error::OutOfRange(format!(
                        "step {other} at index {i}; steps must be +1 or -1"
                    )))
                }
            }
            if h < 0 {
                return Err(Error::OutOfRange(format!(
                    "path dips below the axis after step {}",
                    i + 1
                )));
            }
            heights.push(h as usize);
        }
        Ok(BallotPath { heights })
    }

    /// Number of steps `N`.
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `p_i`, the height after `i` steps.
    pub fn height_after(&self, i: usize) -> usize {
        self.heights[i]
    }

    /// Final height `t`: the path ends at `(N, t)`.
    pub fn endpoint(&self) -> usize {
        *self.heights.last().expect("p_0 always exists")
    }

    pub fn is_up(&self, i: usize) -> bool {
        self.heights[i] > self.heights[i - 1]
    }

    /// Height of step `i`: the larger of its endpoint heights.
    pub fn step_height(&self, i: usize) -> usize {
        self.heights[i].max(self.heights[i - 1])
    }
}

/// The path of a tableau with at most two rows: up-steps at first-row
/// entries, down-steps at second-row entries.
pub fn path_of_tableau(t: &Tableau) -> Result<BallotPath> {
    if t.rows().len() > 2 {
        return Err(Error::InvalidTableau(format!(
            "path construction needs at most two rows, got shape {}",
            t.shape()
        )));
    }
    let n = t.size();
    let mut steps = vec![1i8; n];
    if let Some(row2) = t.rows().get(1) {
        for &e in row2 {
            steps[e - 1] = -1;
        }
    }
    // Column-strictness of the tableau keeps every prefix nonnegative.
    BallotPath::new(&steps)
}

/// The unstable part read off a ballot path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMatching {
    /// Chords on `[N] \ stable`, original labels; a non-crossing perfect
    /// matching of that set.
    pub unstable_chords: Vec<(usize, usize)>,
    /// `Stable(p)`: up-steps strictly below every later step, in increasing
    /// order. Its size is the endpoint height.
    pub stable: Vec<usize>,
}

/// Matches every down-step `j` to the maximal `i < j` of equal step height.
/// One left-to-right sweep with a last-seen index per height level.
pub fn unstable_matching_of_path(p: &BallotPath) -> PathMatching {
    let n = p.len();
    let mut last_seen: Vec<Option<usize>> = vec![None; n + 2];
    let mut partner = vec![0usize; n + 1];
    let mut chords = Vec::new();
    for j in 1..=n {
        let h = p.step_height(j);
        if !p.is_up(j) {
            let i = last_seen[h].expect("a valid ballot path has an earlier step at this height");
            debug_assert!(p.is_up(i), "the matched step must ascend");
            partner[i] = j;
            partner[j] = i;
            chords.push((i, j));
        }
        last_seen[h] = Some(j);
    }
    let stable: Vec<usize> = (1..=n).filter(|&v| p.is_up(v) && partner[v] == 0).collect();
    debug_assert_eq!(stable.len(), p.endpoint());
    chords.sort_unstable();
    PathMatching {
        unstable_chords: chords,
        stable,
    }
}

/// The inverse bijection: relabels the short-chord-free `core` onto the
/// stable vertices of the path of `t` and fills the rest with the path's
/// non-crossing perfect matching.
pub fn inverse(core: &Matching, t: &Tableau) -> Result<Matching> {
    if !core.short_set().is_empty() {
        return Err(Error::InvalidMatching(format!(
            "core {core} has a short chord"
        )));
    }
    let n = t.size();
    let k = t.rows().get(1).map_or(0, |r| r.len());
    if core.n() + 2 * k != n {
        return Err(Error::SizeMismatch(format!(
            "core on {} vertices cannot pair with a tableau of shape {}",
            core.n(),
            t.shape()
        )));
    }
    let p = path_of_tableau(t)?;
    let pm = unstable_matching_of_path(&p);
    // Re-index the path matching onto [2k] so the two halves can be combined.
    let complement: Vec<usize> = {
        let mut inside = vec![false; n + 1];
        for &v in &pm.stable {
            inside[v] = true;
        }
        (1..=n).filter(|&v| !inside[v]).collect()
    };
    let pos = |v: usize| complement.binary_search(&v).expect("unstable vertex") + 1;
    let unstable = Matching::new(
        complement.len(),
        pm.unstable_chords.iter().map(|&(a, b)| (pos(a), pos(b))),
        [],
    )?;
    combine(n, &pm.stable, core, &unstable)
}
