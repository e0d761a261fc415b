//! Exact combinatorics of matchings on `[N]`: short chords, descent
//! statistics, Schur expansions, the core/ballot-path bijection, Knuth-like
//! equivalence classes, pattern avoidance, Bessel-polynomial identities, and
//! the Schreier graph of `S_{2n}` acting on perfect matchings.
//!
//! All arithmetic is integer-exact, and every structural claim the crate
//! makes is checkable by exhaustive enumeration at desk scale.

pub mod bessel;
pub mod bijection;
pub mod error;
pub mod knuth;
pub mod matching;
pub mod pattern;
pub mod schreier;
pub mod statset;
pub mod symfunc;
pub mod tableau;

pub use bessel::{
    bessel_theta, collapse_short_chords, expand_singletons, schur_coeffs_via_bessel,
    shift_expand, short_chord_distribution, IntPolynomial,
};
pub use bijection::{
    forward, inverse, path_of_tableau, reduce, reduce_with_rng, tableau_of,
    unstable_matching_of_path, BallotPath, PathMatching, ReductionResult,
};
pub use error::{Error, Result};
pub use knuth::{
    class_generating_function, delete_short_chord, elementary_moves, equivalence_class,
    insert_short_chord, insertion_sequence,
};
pub use pattern::{
    avoiders, contains_pattern, crossing_number, intersect_counts, intersection_graph,
    refine_by, singleton_pattern_schur_positive, CanonicalLabel, IntersectionGraph, RefineCell,
    RefineKey,
};
pub use matching::{
    all_matchings, chords_intersect, combine, enumerate_matchings, perfect_matchings, Matching,
};
pub use schreier::{
    apply_transposition, asc_des_loop, base_matching, build_graph, build_graph_with_bound,
    check_conjecture, standard_ascents, ConjectureReport, SchreierGraph,
};
pub use statset::StatSet;
pub use symfunc::{
    complement_vector, descent_vector, hook_criterion, hook_criterion_of,
    is_symmetric_by_compositions, schur_expand, sparse_criterion, sparse_criterion_of,
    CriterionOutcome, DescentVector, SchurExpansion, SchurOutcome,
};
pub use tableau::{
    composition_to_subset, conjugate_cmp, descent_vector_of_shape, enumerate_syt, partitions_of,
    subset_to_composition, superstandard, Composition, Partition, ShapeVectorCache, Tableau,
};
