//! The Schreier graph of the symmetric group acting on perfect matchings by
//! conjugation with adjacent transpositions. BFS layers from the base
//! matching `{(1,2),(3,4),..}` realize the involutive length; each generator
//! index is an ascent, descent, or loop of a vertex according to the layer
//! change, with loops exactly at short chords.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matching::{perfect_matchings, Matching};
use crate::statset::StatSet;
use crate::symfunc::{descent_vector, schur_expand, DescentVector, SchurOutcome};
use crate::tableau::ShapeVectorCache;

/// Default refusal threshold for [`build_graph`]; `2n = 14` already means
/// 135135 vertices times 13 generators.
pub const DEFAULT_MAX_VERTEX_COUNT: usize = 14;

/// The conjugation action of the adjacent transposition `s_i = (i, i+1)`:
/// relabel `i` and `i+1` in every block. Defined here for perfect matchings.
pub fn apply_transposition(m: &Matching, i: usize) -> Result<Matching> {
    if !m.is_perfect() {
        return Err(Error::InvalidMatching(format!(
            "the action is defined on perfect matchings; {m} has {} singletons",
            m.num_singletons()
        )));
    }
    if i == 0 || i + 1 > m.n() {
        return Err(Error::OutOfRange(format!(
            "transposition index {i} not in [1, {}]",
            m.n().saturating_sub(1)
        )));
    }
    let swap = |v: usize| {
        if v == i {
            i + 1
        } else if v == i + 1 {
            i
        } else {
            v
        }
    };
    Matching::new(
        m.n(),
        m.chords().iter().map(|&(a, b)| (swap(a), swap(b))),
        [],
    )
}

/// The full Schreier graph on `PM_{2n}` with generator-labeled edges and
/// BFS layers from the base matching.
pub struct SchreierGraph {
    n2: usize,
    vertices: Vec<Matching>,
    index: HashMap<Matching, u32>,
    /// `edges[v * (2n-1) + (i-1)]` = image of vertex `v` under `s_i`.
    edges: Vec<u32>,
    layer: Vec<u32>,
}

/// Builds the graph for `2n` vertices; refuses past `max_n2`.
pub fn build_graph_with_bound(n2: usize, max_n2: usize) -> Result<SchreierGraph> {
    if !n2.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "perfect matchings need an even vertex count, got {n2}"
        )));
    }
    if n2 > max_n2 {
        let mut size: u128 = 1;
        let mut k = n2 as u128;
        while k > 1 {
            size *= k - 1;
            k -= 2;
        }
        return Err(Error::Bound(format!(
            "2n = {n2} exceeds the bound {max_n2}; the graph would hold {size} vertices ((2n-1)!!) with {} generators each",
            n2.saturating_sub(1)
        )));
    }
    let vertices = perfect_matchings(n2);
    let index: HashMap<Matching, u32> = vertices
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let gens = n2.saturating_sub(1);
    let index_ref = &index;
    let edges: Vec<u32> = vertices
        .par_iter()
        .flat_map_iter(|m| {
            (1..=gens).map(move |i| {
                let image = apply_transposition(m, i).expect("vertices are perfect");
                index_ref[&image]
            })
        })
        .collect();
    // BFS from the base matching, which is the first vertex in canonical
    // order.
    let mut layer = vec![u32::MAX; vertices.len()];
    if !vertices.is_empty() {
        debug_assert_eq!(vertices[0], base_matching(n2));
        layer[0] = 0;
        let mut frontier = vec![0u32];
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for g in 0..gens {
                    let w = edges[v as usize * gens + g];
                    if layer[w as usize] == u32::MAX {
                        layer[w as usize] = depth;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
    }
    Ok(SchreierGraph {
        n2,
        vertices,
        index,
        edges,
        layer,
    })
}

/// [`build_graph_with_bound`] with the default bound of `2n = 14`.
pub fn build_graph(n2: usize) -> Result<SchreierGraph> {
    build_graph_with_bound(n2, DEFAULT_MAX_VERTEX_COUNT)
}

/// The base matching `{(1,2),(3,4),..,(2n-1,2n)}`.
pub fn base_matching(n2: usize) -> Matching {
    Matching::new(n2, (0..n2 / 2).map(|k| (2 * k + 1, 2 * k + 2)), [])
        .expect("adjacent pairs partition [2n]")
}

impl SchreierGraph {
    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Matching] {
        &self.vertices
    }

    pub fn vertex(&self, v: u32) -> &Matching {
        &self.vertices[v as usize]
    }

    pub fn index_of(&self, m: &Matching) -> Option<u32> {
        self.index.get(m).copied()
    }

    pub fn generators(&self) -> usize {
        self.n2.saturating_sub(1)
    }

    /// Image of vertex `v` under `s_i`.
    pub fn neighbor(&self, v: u32, i: usize) -> u32 {
        self.edges[v as usize * self.generators() + (i - 1)]
    }

    /// BFS distance from the base matching = involutive length.
    pub fn layer(&self, v: u32) -> u32 {
        self.layer[v as usize]
    }

    /// Vertex counts per layer.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let top = self.layer.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0usize; top + 1];
        for &l in &self.layer {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Every vertex reached, and every non-loop edge changes layer by
    /// exactly one. The second part is bipartiteness in layered form.
    pub fn verify_graded(&self) -> bool {
        if self.layer.contains(&u32::MAX) {
            return false;
        }
        let gens = self.generators();
        (0..self.vertices.len() as u32).all(|v| {
            (1..=gens).all(|i| {
                let w = self.edges[v as usize * gens + (i - 1)];
                w == v || self.layer[w as usize].abs_diff(self.layer[v as usize]) == 1
            })
        })
    }
}

/// Splits `[2n-1]` by the layer move of `s_i . m`: up one (ascent), down one
/// (descent), or fixed (loop). The three sets partition `[2n-1]`, and the
/// loops sit exactly at the short chords.
pub fn asc_des_loop(m: &Matching, g: &SchreierGraph) -> Result<(StatSet, StatSet, StatSet)> {
    let v = g
        .index_of(m)
        .ok_or_else(|| Error::OutOfRange(format!("{m} is not a vertex of the graph")))?;
    let n2 = g.n2();
    let mut asc = Vec::new();
    let mut des = Vec::new();
    let mut lp = Vec::new();
    for i in 1..=g.generators() {
        let w = g.neighbor(v, i);
        if w == v {
            lp.push(i);
        } else if g.layer(w) > g.layer(v) {
            asc.push(i);
        } else {
            des.push(i);
        }
    }
    Ok((
        StatSet::new(n2, asc)?,
        StatSet::new(n2, des)?,
        StatSet::new(n2, lp)?,
    ))
}

/// The ascent set of the fixed-point-free involution carried by `m`:
/// `{i : w(i) < w(i+1)}` for the partner function `w`.
pub fn standard_ascents(m: &Matching) -> Result<StatSet> {
    if !m.is_perfect() {
        return Err(Error::InvalidMatching(format!(
            "{m} is not perfect; the involution has fixed points"
        )));
    }
    let w = m.partners();
    StatSet::new(m.n(), (1..m.n()).filter(|&i| w[i] < w[i + 1]))
}

/// Outcome of the ascent/descent comparison on the full graph.
pub struct ConjectureReport {
    /// Whether the ascent and descent multisets coincide exactly.
    pub equidistributed: bool,
    pub asc_vector: DescentVector,
    pub des_vector: DescentVector,
    pub asc_expansion: SchurOutcome,
    pub des_expansion: SchurOutcome,
}

/// Compares the ascent and descent statistics of every vertex and expands
/// both generating functions.
pub fn check_conjecture(g: &SchreierGraph, cache: &ShapeVectorCache) -> Result<ConjectureReport> {
    let stats: Vec<(StatSet, StatSet)> = g
        .vertices()
        .iter()
        .map(|m| {
            let (asc, des, _) = asc_des_loop(m, g)?;
            Ok((asc, des))
        })
        .collect::<Result<_>>()?;
    let asc_vector = descent_vector(&stats, |p| p.0, g.n2())?;
    let des_vector = descent_vector(&stats, |p| p.1, g.n2())?;
    let equidistributed = asc_vector == des_vector;
    let asc_expansion = schur_expand(&asc_vector, cache)?;
    let des_expansion = schur_expand(&des_vector, cache)?;
    Ok(ConjectureReport {
        equidistributed,
        asc_vector,
        des_vector,
        asc_expansion,
        des_expansion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn action_examples() {
        let m0 = base_matching(4);
        assert_eq!(apply_transposition(&m0, 2).unwrap(), m("{(1,3),(2,4)}"));
        assert_eq!(apply_transposition(&m0, 1).unwrap(), m0); // loop
        assert!(apply_transposition(&m("{(1,2),(3)}"), 1).is_err());
        assert!(apply_transposition(&m0, 4).is_err());
    }

    #[test]
    fn action_is_involutive() {
        for mm in perfect_matchings(6) {
            for i in 1..6 {
                let once = apply_transposition(&mm, i).unwrap();
                assert_eq!(apply_transposition(&once, i).unwrap(), mm);
            }
        }
    }

    #[test]
    fn graph_small_shapes() {
        let g = build_graph(4).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.layer_sizes(), vec![1, 1, 1]);
        assert_eq!(g.layer(g.index_of(&m("{(1,4),(2,3)}")).unwrap()), 2);

        let g = build_graph(2).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.neighbor(0, 1), 0);

        let g = build_graph(8).unwrap();
        assert_eq!(g.len(), 105); // 7!!
        assert_eq!(g.layer_sizes().iter().sum::<usize>(), 105);

        assert!(build_graph_with_bound(16, 14).is_err());
        assert!(build_graph(5).is_err());
    }

    #[test]
    fn graphs_are_graded() {
        for n2 in (2..=10).step_by(2) {
            assert!(build_graph(n2).unwrap().verify_graded(), "2n = {n2}");
        }
    }

    #[test]
    fn asc_des_loop_examples() {
        let g = build_graph(4).unwrap();
        let (asc, des, lp) = asc_des_loop(&base_matching(4), &g).unwrap();
        assert_eq!(asc.to_vec(), vec![2]);
        assert!(des.is_empty());
        assert_eq!(lp.to_vec(), vec![1, 3]);

        let (asc, des, lp) = asc_des_loop(&m("{(1,4),(2,3)}"), &g).unwrap();
        assert!(asc.is_empty());
        assert_eq!(des.to_vec(), vec![1, 3]);
        assert_eq!(lp.to_vec(), vec![2]);
    }

    #[test]
    fn trichotomy_and_loops_are_short_chords() {
        for n2 in (2..=10).step_by(2) {
            let g = build_graph(n2).unwrap();
            for mm in g.vertices() {
                let (asc, des, lp) = asc_des_loop(mm, &g).unwrap();
                assert_eq!(asc.len() + des.len() + lp.len(), n2 - 1);
                assert_eq!(asc.bits() & des.bits(), 0);
                assert_eq!(asc.bits() & lp.bits(), 0);
                assert_eq!(lp, mm.short_set(), "m = {mm}");
            }
        }
    }

    #[test]
    fn ascents_match_standard_involution_ascents() {
        for n2 in (2..=8).step_by(2) {
            let g = build_graph(n2).unwrap();
            for mm in g.vertices() {
                let (asc, _, _) = asc_des_loop(mm, &g).unwrap();
                assert_eq!(asc, standard_ascents(mm).unwrap(), "m = {mm}");
            }
        }
    }

    #[test]
    fn conjecture_small() {
        let cache = ShapeVectorCache::in_memory();
        for n2 in (2..=8).step_by(2) {
            let g = build_graph(n2).unwrap();
            let report = check_conjecture(&g, &cache).unwrap();
            assert!(report.equidistributed, "2n = {n2}");
            assert!(report.asc_expansion.is_schur_positive(), "2n = {n2}");
            assert!(report.des_expansion.is_schur_positive(), "2n = {n2}");
        }
    }
}
