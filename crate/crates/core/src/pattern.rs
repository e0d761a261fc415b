//! Pattern containment and avoidance in matchings, intersection graphs with
//! canonical labels, and refinements of the matching family by intersection
//! invariants.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matching::{chords_intersect, enumerate_matchings, Matching};
use crate::symfunc::{descent_vector, schur_expand, SchurExpansion, SchurOutcome};
use crate::tableau::ShapeVectorCache;

/// Whether `haystack` contains `pattern`: some increasing vertex selection
/// of `haystack` reproduces the block structure of `pattern` exactly
/// (chords to chords within the selection, singletons to singletons).
///
/// Equivalently, the selected set is invariant in `haystack` and restricts
/// to `pattern`. Backtracking assigns pattern vertices in order; each
/// candidate is vetted against its block type, so branches die early.
pub fn contains_pattern(haystack: &Matching, pattern: &Matching) -> bool {
    let n1 = pattern.n();
    let n2 = haystack.n();
    if n1 > n2
        || pattern.num_chords() > haystack.num_chords()
        || pattern.num_singletons() > haystack.num_singletons()
    {
        return false;
    }
    if n1 == 0 {
        return true;
    }
    let pat = pattern.partners();
    let hay = haystack.partners();
    // assigned[j - 1] = vertex of the haystack playing pattern vertex j.
    let mut assigned = vec![0usize; n1];
    fn search(
        j: usize,
        start: usize,
        pat: &[usize],
        hay: &[usize],
        assigned: &mut Vec<usize>,
    ) -> bool {
        let n1 = pat.len() - 1;
        let n2 = hay.len() - 1;
        if j > n1 {
            return true;
        }
        for v in start..=n2 - (n1 - j) {
            let ok = match pat[j] {
                0 => hay[v] == 0,
                pj if pj < j => hay[v] == assigned[pj - 1],
                _ => hay[v] > v, // j opens a chord, so v must open one too
            };
            if ok {
                assigned[j - 1] = v;
                if search(j + 1, v + 1, pat, hay, assigned) {
                    return true;
                }
            }
        }
        false
    }
    search(1, 1, &pat, &hay, &mut assigned)
}

/// Matchings of `M_{n,f}` avoiding every pattern in `patterns`.
pub fn avoiders(n: usize, f: usize, patterns: &[Matching]) -> Vec<Matching> {
    enumerate_matchings(n, f)
        .into_par_iter()
        .filter(|m| patterns.iter().all(|p| !contains_pattern(m, p)))
        .collect()
}

/// The characterization of single patterns whose avoiders are always
/// Schur-positive: `m` qualifies iff it has no short chord, or it is the
/// unique perfect matching on two vertices.
pub fn singleton_pattern_schur_positive(m: &Matching) -> bool {
    m.short_set().is_empty() || (m.n() == 2 && m.is_perfect())
}

/// Canonical label of a small graph: the minimal upper-triangular adjacency
/// encoding over all vertex orderings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalLabel {
    pub vertices: usize,
    pub edges_code: u64,
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}:{:x}", self.vertices, self.edges_code)
    }
}

/// The intersection graph `G(m)`: chords as vertices, edges between
/// interleaving chords.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    /// The chords of the matching, in canonical order.
    pub chords: Vec<(usize, usize)>,
    /// Adjacency bitmask per chord.
    pub adjacency: Vec<u64>,
    pub canonical_label: CanonicalLabel,
}

const MAX_GRAPH_VERTICES: usize = 10;

fn canonical_label_of(adjacency: &[u64]) -> CanonicalLabel {
    let k = adjacency.len();
    assert!(
        k <= MAX_GRAPH_VERTICES,
        "canonical labeling is brute force; {k} vertices is past the supported {MAX_GRAPH_VERTICES}"
    );
    let pair_bit = |a: usize, b: usize| -> u32 {
        // index of the unordered pair (a < b) among all pairs of [k]
        let (a, b) = (a.min(b), a.max(b));
        (a * (2 * k - a - 1) / 2 + (b - a - 1)) as u32
    };
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |perm| {
        let mut code = 0u64;
        for a in 0..k {
            for b in a + 1..k {
                if adjacency[a] & (1 << b) != 0 {
                    code |= 1 << pair_bit(perm[a], perm[b]);
                }
            }
        }
        if code < best {
            best = code;
        }
    });
    if k == 0 {
        best = 0;
    }
    CanonicalLabel {
        vertices: k,
        edges_code: best,
    }
}

fn permute(items: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

/// Builds `G(m)` together with its canonical label.
pub fn intersection_graph(m: &Matching) -> IntersectionGraph {
    let chords = m.chords().to_vec();
    let k = chords.len();
    let mut adjacency = vec![0u64; k];
    for a in 0..k {
        for b in a + 1..k {
            if chords_intersect(chords[a], chords[b]).expect("distinct chords of one matching") {
                adjacency[a] |= 1 << b;
                adjacency[b] |= 1 << a;
            }
        }
    }
    let canonical_label = canonical_label_of(&adjacency);
    IntersectionGraph {
        chords,
        adjacency,
        canonical_label,
    }
}

/// The crossing number: the largest set of pairwise intersecting chords,
/// i.e. the maximum clique of `G(m)`. Zero for a chordless matching.
pub fn crossing_number(m: &Matching) -> usize {
    let g = intersection_graph(m);
    let k = g.adjacency.len();
    let mut best = 0;
    for subset in 0u64..(1 << k) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let clique = (0..k)
            .filter(|&a| subset & (1 << a) != 0)
            .all(|a| subset & !g.adjacency[a] & !(1 << a) == 0);
        if clique {
            best = size;
        }
    }
    best
}

/// The multiset `{I_i(m) : i in [N]}` where `I_i` counts the chords
/// intersecting the chord through `i` (zero for singletons). Sorted.
pub fn intersect_counts(m: &Matching) -> Vec<usize> {
    let g = intersection_graph(m);
    let mut out = vec![0usize; m.n()];
    for (idx, &(a, b)) in g.chords.iter().enumerate() {
        let degree = g.adjacency[idx].count_ones() as usize;
        out[a - 1] = degree;
        out[b - 1] = degree;
    }
    out.sort_unstable();
    out
}

/// Invariants for partitioning `M_{N,f}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefineKey {
    /// Intersection graph up to isomorphism.
    IsoClass,
    /// Maximum number of pairwise intersecting chords.
    Crossing,
    /// Number of intersecting pairs, `(1/2) sum_i I_i`.
    PairCount,
    /// Number of chords intersecting at least one other, `(1/2) |{i : I_i > 0}|`.
    IntersectingChords,
    /// `max_i I_i`.
    MaxI,
}

impl RefineKey {
    pub const ALL: [RefineKey; 5] = [
        RefineKey::IsoClass,
        RefineKey::Crossing,
        RefineKey::PairCount,
        RefineKey::IntersectingChords,
        RefineKey::MaxI,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RefineKey::IsoClass => "iso-class",
            RefineKey::Crossing => "crossing",
            RefineKey::PairCount => "pair-count",
            RefineKey::IntersectingChords => "intersecting-chords",
            RefineKey::MaxI => "max-I",
        }
    }

    pub fn parse(s: &str) -> Result<RefineKey> {
        RefineKey::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::OutOfRange(format!(
                    "unknown refinement key '{s}'; expected one of iso-class, crossing, pair-count, intersecting-chords, max-I"
                ))
            })
    }

    /// The cell label of a matching under this key.
    pub fn value(&self, m: &Matching) -> String {
        match self {
            RefineKey::IsoClass => intersection_graph(m).canonical_label.to_string(),
            RefineKey::Crossing => format!("{}", crossing_number(m)),
            RefineKey::PairCount => {
                let g = intersection_graph(m);
                let edges: usize = g.adjacency.iter().map(|a| a.count_ones() as usize).sum();
                format!("{}", edges / 2)
            }
            RefineKey::IntersectingChords => {
                let g = intersection_graph(m);
                let busy = g.adjacency.iter().filter(|&&a| a != 0).count();
                format!("{busy}")
            }
            RefineKey::MaxI => {
                let g = intersection_graph(m);
                let max = g
                    .adjacency
                    .iter()
                    .map(|a| a.count_ones() as usize)
                    .max()
                    .unwrap_or(0);
                format!("{max}")
            }
        }
    }
}

/// One cell of a refinement.
#[derive(Clone, Debug)]
pub struct RefineCell {
    pub count: usize,
    pub expansion: SchurExpansion,
}

/// Partitions `M_{n,f}` by the key and Schur-expands every cell. Each cell
/// is a union of Knuth-like classes, so every expansion exists and is
/// Schur-positive.
pub fn refine_by(
    n: usize,
    f: usize,
    key: RefineKey,
    cache: &ShapeVectorCache,
) -> Result<BTreeMap<String, RefineCell>> {
    let mut cells: BTreeMap<String, Vec<Matching>> = BTreeMap::new();
    for m in enumerate_matchings(n, f) {
        cells.entry(key.value(&m)).or_default().push(m);
    }
    let mut out = BTreeMap::new();
    for (label, members) in cells {
        let v = descent_vector(&members, Matching::short_set, n)?;
        let expansion = match schur_expand(&v, cache)? {
            SchurOutcome::Symmetric(e) => e,
            SchurOutcome::NotSymmetric { witness, .. } => {
                return Err(Error::NotSymmetric(format!(
                    "refinement cell {label} of M({n},{f}) failed to expand; residual at {witness}"
                )))
            }
        };
        out.insert(
            label,
            RefineCell {
                count: members.len(),
                expansion,
            },
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knuth::elementary_moves;
    use crate::matching::all_matchings;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        let big = m("{(1,7),(2,10),(3,6),(4,5),(8,9)}");
        assert!(contains_pattern(&big, &m("{(1,3),(2,4)}"))); // indices 1,2,7,10
        assert!(contains_pattern(&big, &Matching::empty()));
        assert!(!contains_pattern(&Matching::discrete(4), &m("{(1,2)}")));
    }

    #[test]
    fn containment_is_exact_restriction() {
        // Brute-force oracle: try every invariant subset and compare.
        let oracle = |hay: &Matching, pat: &Matching| -> bool {
            let n = hay.n();
            (0u32..(1 << n)).any(|mask| {
                let s: Vec<usize> = (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
                s.len() == pat.n()
                    && hay.invariant_violation(&s).is_none()
                    && &hay.restrict(&s).unwrap() == pat
            })
        };
        for hay in all_matchings(6) {
            for pn in 0..=4 {
                for pat in all_matchings(pn) {
                    assert_eq!(
                        contains_pattern(&hay, &pat),
                        oracle(&hay, &pat),
                        "hay = {hay}, pat = {pat}"
                    );
                }
            }
        }
    }

    #[test]
    fn avoiders_examples() {
        // Avoiding the single chord forbids every chord.
        let got = avoiders(4, 4, &[m("{(1,2)}")]);
        assert_eq!(got, vec![Matching::discrete(4)]);
        let got = avoiders(4, 0, &[m("{(1,2)}")]);
        assert!(got.is_empty());

        // Avoiding the crossing leaves the two non-crossing perfect matchings.
        let got = avoiders(4, 0, &[m("{(1,3),(2,4)}")]);
        assert_eq!(got, vec![m("{(1,2),(3,4)}"), m("{(1,4),(2,3)}")]);

        // No patterns: everything.
        assert_eq!(avoiders(5, 1, &[]).len(), enumerate_matchings(5, 1).len());
    }

    #[test]
    fn singleton_predicate_examples() {
        assert!(singleton_pattern_schur_positive(&m("{(1,3),(2,4)}")));
        assert!(singleton_pattern_schur_positive(&m("{(1,2)}")));
        assert!(!singleton_pattern_schur_positive(&m("{(1,2),(3)}")));
    }

    #[test]
    fn pattern_with_short_chord_has_asymmetric_avoiders() {
        // Witness for {(1,2),(3)}: avoiders inside M_{3,1} are {(1,3),(2)}
        // and {(1),(2,3)}, whose short-chord vector is not symmetric.
        let cache = ShapeVectorCache::in_memory();
        let avs = avoiders(3, 1, &[m("{(1,2),(3)}")]);
        assert_eq!(avs.len(), 2);
        let v = descent_vector(&avs, Matching::short_set, 3).unwrap();
        assert!(!schur_expand(&v, &cache).unwrap().is_symmetric());
    }

    #[test]
    fn intersection_graph_examples() {
        let g = intersection_graph(&m("{(1,3),(2,6),(4,5)}"));
        let edges: usize = g.adjacency.iter().map(|a| a.count_ones() as usize).sum();
        assert_eq!(edges / 2, 1);
        assert_eq!(crossing_number(&m("{(1,3),(2,6),(4,5)}")), 2);
        assert_eq!(
            intersect_counts(&m("{(1,3),(2,6),(4,5)}")),
            vec![0, 0, 1, 1, 1, 1]
        );

        assert_eq!(crossing_number(&m("{(1,2),(3,4)}")), 1);
        assert_eq!(crossing_number(&Matching::discrete(3)), 0);
        assert_eq!(crossing_number(&m("{(1,7),(2,10),(3,6),(4,5),(8,9)}")), 2);
    }

    #[test]
    fn canonical_labels_respect_isomorphism() {
        let tri = intersection_graph(&m("{(1,4),(2,5),(3,6)}")); // all three pairwise
        let path = intersection_graph(&m("{(1,3),(2,5),(4,6)}")); // crossings 1-2, 2-3
        assert_ne!(tri.canonical_label, path.canonical_label);
        // The same triangle embedded on seven vertices.
        let tri2 = intersection_graph(&m("{(1,4),(2,5),(3,6),(7)}"));
        assert_eq!(tri.canonical_label, tri2.canonical_label);
        // Vertex-count differences always separate labels.
        assert_ne!(
            intersection_graph(&Matching::discrete(2)).canonical_label,
            intersection_graph(&m("{(1,2)}")).canonical_label
        );
    }

    #[test]
    fn moves_preserve_canonical_labels() {
        for n in 0..=8 {
            for mm in all_matchings(n) {
                let label = intersection_graph(&mm).canonical_label;
                for out in elementary_moves(&mm) {
                    assert_eq!(
                        intersection_graph(&out).canonical_label,
                        label,
                        "{mm} -> {out}"
                    );
                }
            }
        }
    }

    #[test]
    fn avoiding_short_chord_free_pattern_is_closed_under_moves() {
        for pn in 1..=5 {
            for pat in all_matchings(pn) {
                if !pat.short_set().is_empty() {
                    continue;
                }
                for n in 0..=7 {
                    let mut f = n % 2;
                    while f <= n {
                        let avs = avoiders(n, f, std::slice::from_ref(&pat));
                        let inside: std::collections::HashSet<&Matching> = avs.iter().collect();
                        for a in &avs {
                            for out in elementary_moves(a) {
                                assert!(
                                    inside.contains(&out),
                                    "pattern {pat}: {a} moves outside"
                                );
                            }
                        }
                        f += 2;
                    }
                }
            }
        }
    }

    #[test]
    fn refine_small_cases() {
        let cache = ShapeVectorCache::in_memory();
        let cells = refine_by(4, 0, RefineKey::Crossing, &cache).unwrap();
        assert_eq!(cells.len(), 2);
        // Crossing number 1: the two non-crossing matchings, one Knuth class.
        assert_eq!(cells["1"].count, 2);
        assert_eq!(cells["1"].expansion.to_string(), "s(2,2)");
        assert_eq!(cells["2"].count, 1);
        assert_eq!(cells["2"].expansion.to_string(), "s(4)");
        for cell in cells.values() {
            assert!(cell.expansion.is_schur_positive());
        }

        // Pair-count zero cell: the non-crossing matchings, still positive.
        let cells = refine_by(6, 0, RefineKey::PairCount, &cache).unwrap();
        assert_eq!(cells["0"].count, 5); // Catalan number C_3
        assert!(cells["0"].expansion.is_schur_positive());
    }

    #[test]
    fn refinement_cells_are_schur_positive() {
        let cache = ShapeVectorCache::in_memory();
        for n in 0..=7 {
            let mut f = n % 2;
            while f <= n {
                for key in RefineKey::ALL {
                    for (label, cell) in refine_by(n, f, key, &cache).unwrap() {
                        assert!(
                            cell.expansion.is_schur_positive(),
                            "cell {label} of M({n},{f}) under {}",
                            key.name()
                        );
                    }
                }
                f += 2;
            }
        }
    }
}
