//! Elementary Knuth-like transformations on matchings, equivalence classes,
//! and short-chord insertion. Two matchings are equivalent exactly when they
//! share a core, and each class expands to a single two-row Schur function.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::symfunc::{descent_vector, schur_expand, SchurExpansion, SchurOutcome};
use crate::tableau::ShapeVectorCache;

/// All matchings one elementary transformation away from `m`, deduplicated
/// and sorted. Each move slides a short chord past its left or right
/// neighbour, whether that neighbour is unmatched or a chord endpoint.
pub fn elementary_moves(m: &Matching) -> Vec<Matching> {
    let n = m.n();
    let partners = m.partners();
    let mut out = HashSet::new();
    let rebuild = |removed: [usize; 2], added: [(usize, usize); 2]| -> Matching {
        let chords = m
            .chords()
            .iter()
            .copied()
            .filter(|&(a, _)| a != removed[0] && a != removed[1])
            .chain(added)
            .collect::<Vec<_>>();
        Matching::new(n, chords, m.singletons().iter().copied())
            .expect("moves permute blocks of a valid matching")
    };
    for c in m.short_set().members() {
        // Right neighbour c + 2.
        if c + 2 <= n {
            let r = c + 2;
            if m.is_singleton(r) {
                // (c, c+1), (c+2)  ->  (c), (c+1, c+2)
                let chords: Vec<(usize, usize)> = m
                    .chords()
                    .iter()
                    .copied()
                    .filter(|&(a, _)| a != c)
                    .chain([(c + 1, r)])
                    .collect();
                let singles: Vec<usize> = m
                    .singletons()
                    .iter()
                    .copied()
                    .filter(|&v| v != r)
                    .chain([c])
                    .collect();
                out.insert(Matching::new(n, chords, singles).expect("valid move"));
            } else {
                let j = partners[r];
                if j != c && j != c + 1 {
                    // (c, c+1), (c+2, j)  ->  (c, j), (c+1, c+2)
                    out.insert(rebuild([c, r.min(j)], [(c, j), (c + 1, r)]));
                }
            }
        }
        // Left neighbour c - 1.
        if c >= 2 {
            let l = c - 1;
            if m.is_singleton(l) {
                // (c-1), (c, c+1)  ->  (c-1, c), (c+1)
                let chords: Vec<(usize, usize)> = m
                    .chords()
                    .iter()
                    .copied()
                    .filter(|&(a, _)| a != c)
                    .chain([(l, c)])
                    .collect();
                let singles: Vec<usize> = m
                    .singletons()
                    .iter()
                    .copied()
                    .filter(|&v| v != l)
                    .chain([c + 1])
                    .collect();
                out.insert(Matching::new(n, chords, singles).expect("valid move"));
            } else {
                let j = partners[l];
                if j != c && j != c + 1 {
                    // (j, c-1), (c, c+1)  ->  (c-1, c), (c+1, j)
                    out.insert(rebuild([c, l.min(j)], [(l, c), (c + 1, j)]));
                }
            }
        }
    }
    let mut v: Vec<Matching> = out.into_iter().collect();
    v.sort_unstable();
    v
}

/// The Knuth-like equivalence class of `m`: closure of [`elementary_moves`]
/// by breadth-first search, returned sorted.
pub fn equivalence_class(m: &Matching) -> Vec<Matching> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(m.clone());
    queue.push_back(m.clone());
    while let Some(cur) = queue.pop_front() {
        for next in elementary_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut v: Vec<Matching> = seen.into_iter().collect();
    v.sort_unstable();
    v
}

/// Inserts a short chord `(i, i+1)`, pushing every vertex at position `i` or
/// later up by two. Leaves the core unchanged.
pub fn insert_short_chord(m: &Matching, i: usize) -> Result<Matching> {
    let n = m.n();
    if i == 0 || i > n + 1 {
        return Err(Error::OutOfRange(format!(
            "insertion position {i} not in [1, {}]",
            n + 1
        )));
    }
    let shift = |v: usize| if v < i { v } else { v + 2 };
    let chords: Vec<(usize, usize)> = m
        .chords()
        .iter()
        .map(|&(a, b)| (shift(a), shift(b)))
        .chain([(i, i + 1)])
        .collect();
    let singles: Vec<usize> = m.singletons().iter().map(|&v| shift(v)).collect();
    Matching::new(n + 2, chords, singles)
}

/// Removes the short chord `(i, i+1)` and closes the gap; inverse of
/// [`insert_short_chord`] at the same position.
pub fn delete_short_chord(m: &Matching, i: usize) -> Result<Matching> {
    if !m.contains_chord(i, i + 1) {
        return Err(Error::OutOfRange(format!(
            "({i}, {}) is not a chord of {m}",
            i + 1
        )));
    }
    let unshift = |v: usize| if v < i { v } else { v - 2 };
    let chords: Vec<(usize, usize)> = m
        .chords()
        .iter()
        .copied()
        .filter(|&(a, _)| a != i)
        .map(|(a, b)| (unshift(a), unshift(b)))
        .collect();
    let singles: Vec<usize> = m.singletons().iter().map(|&v| unshift(v)).collect();
    Matching::new(m.n() - 2, chords, singles)
}

/// Writes `m` as a sequence of insertions into its core: returns
/// `(core, [i_1, .., i_k])` with `m = insrt_{i_1}(insrt_{i_2}(.. (core)))`.
pub fn insertion_sequence(m: &Matching) -> (Matching, Vec<usize>) {
    let mut cur = m.clone();
    let mut seq = Vec::new();
    loop {
        let leftmost = cur.short_set().members().next();
        match leftmost {
            None => return (cur, seq),
            Some(i) => {
                seq.push(i);
                cur = delete_short_chord(&cur, i).expect("short chord exists");
            }
        }
    }
}

/// The generating function of a class (or any union of classes) that is
/// closed under elementary moves: the Schur expansion of its short-chord
/// descent vector. A single class of matchings with `k` unstable chords
/// expands to exactly `s_{(N-k, k)}`.
pub fn class_generating_function(
    class: &[Matching],
    cache: &ShapeVectorCache,
) -> Result<SchurExpansion> {
    if class.is_empty() {
        return Err(Error::NotClosed("empty class".into()));
    }
    let n = class[0].n();
    let members: HashSet<&Matching> = class.iter().collect();
    for m in class {
        if m.n() != n {
            return Err(Error::SizeMismatch(format!(
                "class mixes matchings on {} and {} vertices",
                n,
                m.n()
            )));
        }
        if let Some(out) = elementary_moves(m).iter().find(|x| !members.contains(x)) {
            return Err(Error::NotClosed(format!("{m} moves to {out} outside the set")));
        }
    }
    let v = descent_vector(class, Matching::short_set, n)?;
    match schur_expand(&v, cache)? {
        SchurOutcome::Symmetric(e) => Ok(e),
        SchurOutcome::NotSymmetric { witness, .. } => Err(Error::NotSymmetric(format!(
            "closed class failed to expand; residual at {witness}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::reduce;
    use crate::matching::{all_matchings, enumerate_matchings};
    use crate::tableau::Partition;
    use std::collections::HashMap;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn moves_examples() {
        assert_eq!(elementary_moves(&m("{(1,2),(3)}")), vec![m("{(1),(2,3)}")]);
        assert!(elementary_moves(&m("{(1,2),(3,4)}")).contains(&m("{(1,4),(2,3)}")));
        assert!(elementary_moves(&m("{(1,3),(2,4)}")).is_empty());
    }

    #[test]
    fn moves_are_symmetric_and_preserve_structure() {
        for n in 0..=8 {
            for mm in all_matchings(n) {
                for out in elementary_moves(&mm) {
                    assert_eq!(out.n(), mm.n());
                    assert_eq!(out.num_singletons(), mm.num_singletons());
                    assert_eq!(reduce(&out).core, reduce(&mm).core, "{mm} -> {out}");
                    assert!(
                        elementary_moves(&out).contains(&mm),
                        "move {mm} -> {out} has no reverse"
                    );
                }
            }
        }
    }

    #[test]
    fn class_examples() {
        // Core {(1,3),(2)} in M_{5,1): the fiber has |Syt(4,1)| = 4 members.
        let rep = m("{(1,2),(3,5),(4)}");
        let class = equivalence_class(&rep);
        assert_eq!(class.len(), 4);
        for x in &class {
            assert_eq!(reduce(x).core, m("{(1,3),(2)}"));
        }

        let lone = equivalence_class(&m("{(1,3),(2,4)}"));
        assert_eq!(lone, vec![m("{(1,3),(2,4)}")]);

        let class = equivalence_class(&m("{(1,2),(3,4)}"));
        assert_eq!(class, vec![m("{(1,2),(3,4)}"), m("{(1,4),(2,3)}")]);
    }

    #[test]
    fn classes_are_core_fibers() {
        for n in 0..=8 {
            for mm in all_matchings(n) {
                let class = equivalence_class(&mm);
                let core = reduce(&mm).core;
                let fiber: Vec<Matching> = all_matchings(n)
                    .into_iter()
                    .filter(|x| reduce(x).core == core)
                    .collect();
                assert_eq!(class, fiber, "m = {mm}");
                // Class size is the number of two-row tableaux of the shape.
                let k = (n - core.n()) / 2;
                let shape = Partition::two_row(n, k).unwrap();
                assert_eq!(class.len() as u128, shape.hook_count(), "m = {mm}");
            }
        }
    }

    #[test]
    fn insert_example_and_inverse() {
        let base = m("{(1,3),(2,6),(4,5)}");
        let inserted = insert_short_chord(&base, 3).unwrap();
        assert_eq!(inserted, m("{(1,5),(2,8),(3,4),(6,7)}"));
        assert_eq!(delete_short_chord(&inserted, 3).unwrap(), base);

        assert_eq!(insert_short_chord(&Matching::empty(), 1).unwrap(), m("{(1,2)}"));
        assert!(insert_short_chord(&base, 8).is_err());
        assert!(insert_short_chord(&base, 0).is_err());
    }

    #[test]
    fn insert_preserves_core() {
        for mm in all_matchings(6) {
            let core = reduce(&mm).core;
            for i in 1..=7 {
                let ins = insert_short_chord(&mm, i).unwrap();
                assert_eq!(reduce(&ins).core, core, "m = {mm}, i = {i}");
            }
        }
    }

    #[test]
    fn insertion_sequences_rebuild_matchings() {
        for n in 0..=9 {
            for mm in all_matchings(n) {
                let (base, seq) = insertion_sequence(&mm);
                assert_eq!(base, reduce(&mm).core, "m = {mm}");
                assert_eq!(seq.len(), reduce(&mm).unstable_chords.len());
                let mut rebuilt = base;
                for &i in seq.iter().rev() {
                    rebuilt = insert_short_chord(&rebuilt, i).unwrap();
                }
                assert_eq!(rebuilt, mm);
            }
        }
    }

    #[test]
    fn class_generating_functions() {
        let cache = ShapeVectorCache::in_memory();
        let class = equivalence_class(&m("{(1,2),(3,4)}"));
        let e = class_generating_function(&class, &cache).unwrap();
        assert_eq!(e.to_string(), "s(2,2)");

        let class = equivalence_class(&m("{(1,3),(2,4)}"));
        let e = class_generating_function(&class, &cache).unwrap();
        assert_eq!(e.to_string(), "s(4)");

        // The union of all classes of M_{4,0} adds up.
        let e = class_generating_function(&enumerate_matchings(4, 0), &cache).unwrap();
        assert_eq!(e.to_string(), "s(4) + s(2,2)");

        // A non-closed set is rejected.
        let err = class_generating_function(&[m("{(1,2),(3,4)}")], &cache);
        assert!(matches!(err, Err(Error::NotClosed(_))));
    }

    #[test]
    fn every_class_is_one_schur_function() {
        let cache = ShapeVectorCache::in_memory();
        for n in 0..=8 {
            let mut cores_seen: HashMap<Matching, ()> = HashMap::new();
            for mm in all_matchings(n) {
                let core = reduce(&mm).core;
                if cores_seen.insert(core.clone(), ()).is_some() {
                    continue;
                }
                let class = equivalence_class(&mm);
                let k = (n - core.n()) / 2;
                let e = class_generating_function(&class, &cache).unwrap();
                let shape = Partition::two_row(n, k).unwrap();
                assert_eq!(e.coefficient(&shape), 1, "core {core}");
                assert_eq!(e.terms().count(), 1, "core {core}");
            }
        }
    }
}
