//! Property tests over randomized inputs, complementing the exhaustive
//! sweeps in the unit tests and the acceptance suite.

use proptest::prelude::*;
use rand::RngCore;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use schurmatch::{
    combine, complement_vector, forward, insert_short_chord, inverse, is_symmetric_by_compositions,
    schur_expand, DescentVector, Matching, ShapeVectorCache, StatSet,
};

/// A uniform-ish random matching on `[n]` driven by a seed.
fn random_matching(n: usize, seed: u64) -> Matching {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut free: Vec<usize> = (1..=n).collect();
    let mut chords = Vec::new();
    let mut singles = Vec::new();
    while let Some(&v) = free.first() {
        free.remove(0);
        // Choice 0 leaves v unmatched; choice i pairs it with free[i-1].
        let pick = (rng.next_u64() % (free.len() as u64 + 1)) as usize;
        if pick == 0 {
            singles.push(v);
        } else {
            chords.push((v, free.remove(pick - 1)));
        }
    }
    Matching::new(n, chords, singles).expect("constructed from a partition")
}

fn matching_strategy() -> impl Strategy<Value = Matching> {
    (0usize..=11, any::<u64>()).prop_map(|(n, seed)| random_matching(n, seed))
}

proptest! {
    #[test]
    fn text_roundtrip(m in matching_strategy()) {
        let text = m.to_string();
        prop_assert_eq!(text.parse::<Matching>().unwrap(), m);
    }

    #[test]
    fn json_roundtrip(m in matching_strategy()) {
        let js = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matching>(&js).unwrap(), m);
    }

    #[test]
    fn restrict_combine_roundtrip(m in matching_strategy(), mask in any::<u32>()) {
        let n = m.n();
        let s: Vec<usize> = (1..=n).filter(|&v| mask & (1 << ((v - 1) % 32)) != 0).collect();
        prop_assume!(m.invariant_violation(&s).is_none());
        let comp: Vec<usize> = (1..=n).filter(|v| s.binary_search(v).is_err()).collect();
        let a = m.restrict(&s).unwrap();
        let b = m.restrict(&comp).unwrap();
        prop_assert_eq!(combine(n, &s, &a, &b).unwrap(), m);
    }

    #[test]
    fn bijection_roundtrip(m in matching_strategy()) {
        let (core, t) = forward(&m);
        prop_assert_eq!(t.descent_set(), m.short_set());
        prop_assert_eq!(inverse(&core, &t).unwrap(), m);
    }

    #[test]
    fn insertion_keeps_short_chord(m in matching_strategy(), at in any::<u64>()) {
        let i = (at % (m.n() as u64 + 1)) as usize + 1;
        let ins = insert_short_chord(&m, i).unwrap();
        prop_assert!(ins.short_set().contains(i));
        prop_assert_eq!(ins.n(), m.n() + 2);
        prop_assert_eq!(ins.num_singletons(), m.num_singletons());
    }

    #[test]
    fn complement_is_involution(
        n in 1usize..=8,
        entries in proptest::collection::vec((any::<u64>(), 1u64..4), 0..12),
    ) {
        let mut v = DescentVector::new(n).unwrap();
        for (bits, c) in entries {
            let s = StatSet::from_bits(n, bits & schurmatch::statset::full_mask(n)).unwrap();
            v.add_count(&s, c).unwrap();
        }
        prop_assert_eq!(complement_vector(&complement_vector(&v)), v);
    }

    /// The composition-count symmetry test and triangular elimination always
    /// agree, also away from matching-derived vectors.
    #[test]
    fn symmetry_tests_agree(
        n in 1usize..=7,
        entries in proptest::collection::vec((any::<u64>(), 1u64..4), 0..10),
    ) {
        let mut v = DescentVector::new(n).unwrap();
        for (bits, c) in entries {
            let s = StatSet::from_bits(n, bits & schurmatch::statset::full_mask(n)).unwrap();
            v.add_count(&s, c).unwrap();
        }
        let cache = ShapeVectorCache::in_memory();
        let expanded = schur_expand(&v, &cache).unwrap().is_symmetric();
        prop_assert_eq!(is_symmetric_by_compositions(&v), expanded);
    }
}
