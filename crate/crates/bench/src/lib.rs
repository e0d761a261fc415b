//! Shared fixtures for the benchmark targets.

use schurmatch::{descent_vector, enumerate_matchings, DescentVector, Matching};

/// The short-chord descent vector of `M_{n,f}`.
pub fn short_vector(n: usize, f: usize) -> DescentVector {
    let ms = enumerate_matchings(n, f);
    descent_vector(&ms, Matching::short_set, n).expect("bench sizes fit the guards")
}

/// A mid-sized matching with a deep reduction chain.
pub fn nested_matching() -> Matching {
    // Rings of nested chords force several reduction rounds.
    "{(1,12),(2,11),(3,10),(4,9),(5,8),(6,7)}"
        .parse()
        .expect("valid fixture")
}
