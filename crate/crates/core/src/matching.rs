//! Matchings on `[N]`: canonical form, enumeration, restriction/combination,
//! and the short-chord and intersection primitives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statset::StatSet;

/// A matching on `[n] = {1, .., n}`: a partition of the vertex set into
/// blocks of size two (chords) and size one (singletons).
///
/// Canonical form: every chord is `(opener, closer)` with `opener < closer`,
/// chords sorted by opener, singletons ascending. `Ord` on the canonical form
/// agrees with the order in which [`enumerate_matchings`] yields matchings of
/// a fixed `(n, f)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatching", into = "RawMatching")]
pub struct Matching {
    n: usize,
    chords: Vec<(usize, usize)>,
    singletons: Vec<usize>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawMatching {
    n: usize,
    chords: Vec<(usize, usize)>,
    singletons: Vec<usize>,
}

impl From<Matching> for RawMatching {
    fn from(m: Matching) -> Self {
        RawMatching {
            n: m.n,
            chords: m.chords,
            singletons: m.singletons,
        }
    }
}

impl TryFrom<RawMatching> for Matching {
    type Error = Error;

    fn try_from(raw: RawMatching) -> Result<Self> {
        Matching::new(raw.n, raw.chords, raw.singletons)
    }
}

impl Matching {
    /// Builds a matching after validating that the blocks partition `[n]`.
    /// Chord endpoints may come in either order.
    pub fn new(
        n: usize,
        chords: impl IntoIterator<Item = (usize, usize)>,
        singletons: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut take = |v: usize| -> Result<()> {
            if v == 0 || v > n {
                return Err(Error::InvalidMatching(format!(
                    "vertex {v} not in [1, {n}]"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidMatching(format!(
                    "vertex {v} occurs in two blocks"
                )));
            }
            seen[v] = true;
            Ok(())
        };
        let mut cs = Vec::new();
        for (a, b) in chords {
            if a == b {
                return Err(Error::InvalidMatching(format!(
                    "chord ({a}, {b}) repeats a vertex"
                )));
            }
            take(a)?;
            take(b)?;
            cs.push((a.min(b), a.max(b)));
        }
        let mut ss = Vec::new();
        for v in singletons {
            take(v)?;
            ss.push(v);
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::InvalidMatching(format!(
                "vertex {v} belongs to no block"
            )));
        }
        cs.sort_unstable();
        ss.sort_unstable();
        Ok(Matching {
            n,
            chords: cs,
            singletons: ss,
        })
    }

    /// The empty matching on zero vertices.
    pub fn empty() -> Self {
        Matching {
            n: 0,
            chords: Vec::new(),
            singletons: Vec::new(),
        }
    }

    /// The all-singleton matching on `[n]`.
    pub fn discrete(n: usize) -> Self {
        Matching {
            n,
            chords: Vec::new(),
            singletons: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn singletons(&self) -> &[usize] {
        &self.singletons
    }

    pub fn num_chords(&self) -> usize {
        self.chords.len()
    }

    /// Number of unmatched vertices, the `f` of `M_{N,f}`.
    pub fn num_singletons(&self) -> usize {
        self.singletons.len()
    }

    pub fn is_perfect(&self) -> bool {
        self.singletons.is_empty()
    }

    /// Partner table: entry `v` holds the partner of `v`, or `0` for a
    /// singleton. Entry `0` is unused.
    pub fn partners(&self) -> Vec<usize> {
        let mut p = vec![0; self.n + 1];
        for &(a, b) in &self.chords {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.chords
            .iter()
            .find_map(|&(a, b)| match () {
                _ if a == v => Some(b),
                _ if b == v => Some(a),
                _ => None,
            })
    }

    pub fn is_singleton(&self, v: usize) -> bool {
        self.singletons.binary_search(&v).is_ok()
    }

    pub fn contains_chord(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.chords.binary_search(&key).is_ok()
    }

    /// `Short(m) = {i in [N-1] : (i, i+1) in m}`. The pair `(1, N)` is never
    /// short: adjacency is along the line, not the circle.
    pub fn short_set(&self) -> StatSet {
        StatSet::new(
            self.n,
            self.chords
                .iter()
                .filter(|&&(a, b)| b == a + 1)
                .map(|&(a, _)| a),
        )
        .expect("short-chord openers lie in [N-1]")
    }

    /// Checks that `s` (strictly increasing) is invariant: each chord has
    /// both or neither endpoint in `s`. Returns the offending chord.
    pub fn invariant_violation(&self, s: &[usize]) -> Option<(usize, usize)> {
        let inside = |v: usize| s.binary_search(&v).is_ok();
        self.chords
            .iter()
            .copied()
            .find(|&(a, b)| inside(a) != inside(b))
    }

    /// Restriction to an invariant vertex set `s` (strictly increasing),
    /// re-indexed to `[|s|]` preserving order.
    pub fn restrict(&self, s: &[usize]) -> Result<Matching> {
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(
                "restriction set must be strictly increasing".into(),
            ));
        }
        if let Some(&v) = s.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::OutOfRange(format!(
                "restriction vertex {v} not in [1, {}]",
                self.n
            )));
        }
        if let Some(chord) = self.invariant_violation(s) {
            return Err(Error::NotInvariant { chord });
        }
        let pos = |v: usize| s.binary_search(&v).map(|i| i + 1);
        let chords = self
            .chords
            .iter()
            .filter_map(|&(a, b)| match (pos(a), pos(b)) {
                (Ok(x), Ok(y)) => Some((x, y)),
                _ => None,
            })
            .collect::<Vec<_>>();
        let singles = self
            .singletons
            .iter()
            .filter_map(|&v| pos(v).ok())
            .collect::<Vec<_>>();
        Matching::new(s.len(), chords, singles)
    }
}

/// Whether two disjoint chords interleave (`i1 < i2 < i3 < i4` after
/// relabeling their endpoints). Sharing an endpoint is an error: the pair
/// cannot belong to one matching.
pub fn chords_intersect(c1: (usize, usize), c2: (usize, usize)) -> Result<bool> {
    let norm = |c: (usize, usize)| -> Result<(usize, usize)> {
        if c.0 == c.1 {
            return Err(Error::SharedEndpoint(c.0));
        }
        Ok((c.0.min(c.1), c.0.max(c.1)))
    };
    let (a1, b1) = norm(c1)?;
    let (a2, b2) = norm(c2)?;
    for v in [a2, b2] {
        if v == a1 || v == b1 {
            return Err(Error::SharedEndpoint(v));
        }
    }
    Ok((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
}

/// The unique matching on `[n]` restricting to `m1` on `s` and to `m2` on
/// the complement of `s`.
pub fn combine(n: usize, s: &[usize], m1: &Matching, m2: &Matching) -> Result<Matching> {
    if s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::OutOfRange(
            "combine set must be strictly increasing".into(),
        ));
    }
    if let Some(&v) = s.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::OutOfRange(format!("vertex {v} not in [1, {n}]")));
    }
    if m1.n() != s.len() {
        return Err(Error::SizeMismatch(format!(
            "matching on the set has {} vertices but the set has {}",
            m1.n(),
            s.len()
        )));
    }
    if m2.n() != n - s.len() {
        return Err(Error::SizeMismatch(format!(
            "matching on the complement has {} vertices but the complement has {}",
            m2.n(),
            n - s.len()
        )));
    }
    let comp: Vec<usize> = (1..=n).filter(|v| s.binary_search(v).is_err()).collect();
    let mut chords = Vec::with_capacity(m1.num_chords() + m2.num_chords());
    let mut singles = Vec::with_capacity(m1.num_singletons() + m2.num_singletons());
    for (labels, m) in [(s, m1), (&comp[..], m2)] {
        chords.extend(m.chords().iter().map(|&(a, b)| (labels[a - 1], labels[b - 1])));
        singles.extend(m.singletons().iter().map(|&v| labels[v - 1]));
    }
    Matching::new(n, chords, singles)
}

/// All matchings on `[n]` with exactly `f` unmatched vertices, in increasing
/// canonical order. Invalid `(n, f)` (odd `n - f` or `f > n`) yields an empty
/// sequence.
pub fn enumerate_matchings(n: usize, f: usize) -> Vec<Matching> {
    if f > n || !(n - f).is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chords = Vec::with_capacity((n - f) / 2);
    let mut singles = Vec::with_capacity(f);
    let free: Vec<usize> = (1..=n).collect();
    fill(&free, f, &mut chords, &mut singles, &mut out, n);
    out
}

// Matches the smallest free vertex with each larger free vertex in turn, then
// leaves it unmatched while the singleton budget lasts. Branch order makes the
// output increasing in the canonical order.
fn fill(
    free: &[usize],
    f: usize,
    chords: &mut Vec<(usize, usize)>,
    singles: &mut Vec<usize>,
    out: &mut Vec<Matching>,
    n: usize,
) {
    if free.is_empty() {
        out.push(Matching {
            n,
            chords: chords.clone(),
            singletons: singles.clone(),
        });
        return;
    }
    let v = free[0];
    let budget = f - singles.len();
    if free.len() >= budget + 2 {
        for k in 1..free.len() {
            let w = free[k];
            let mut rest: Vec<usize> = free[1..].to_vec();
            rest.remove(k - 1);
            chords.push((v, w));
            fill(&rest, f, chords, singles, out, n);
            chords.pop();
        }
    }
    if budget > 0 {
        singles.push(v);
        fill(&free[1..], f, chords, singles, out, n);
        singles.pop();
    }
}

/// Perfect matchings on `[n2]`.
pub fn perfect_matchings(n2: usize) -> Vec<Matching> {
    enumerate_matchings(n2, 0)
}

/// All matchings on `[n]`, grouped by increasing number of singletons.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut f = n % 2;
    while f <= n {
        out.extend(enumerate_matchings(n, f));
        f += 2;
    }
    out
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut blocks: Vec<(usize, Option<usize>)> = self
            .chords
            .iter()
            .map(|&(a, b)| (a, Some(b)))
            .chain(self.singletons.iter().map(|&v| (v, None)))
            .collect();
        blocks.sort_unstable();
        for (k, (a, b)) in blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match b {
                Some(b) => write!(f, "({a},{b})")?,
                None => write!(f, "({a})")?,
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({})", self)
    }
}

impl FromStr for Matching {
    type Err = Error;

    /// Parses the text form `{(1,3),(2,6),(4,5)}` with singletons written
    /// `(4)`. The vertex count is the largest vertex mentioned.
    fn from_str(input: &str) -> Result<Self> {
        let bytes = input.as_bytes();
        let mut pos = 0usize;
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, c: u8| -> Result<()> {
            skip_ws(pos);
            if *pos < bytes.len() && bytes[*pos] == c {
                *pos += 1;
                Ok(())
            } else {
                Err(err(*pos, &format!("expected '{}'", c as char)))
            }
        };
        let number = |pos: &mut usize| -> Result<usize> {
            skip_ws(pos);
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == start {
                return Err(err(start, "expected a vertex number"));
            }
            input[start..*pos]
                .parse::<usize>()
                .map_err(|_| err(start, "vertex number too large"))
        };

        expect(&mut pos, b'{')?;
        let mut chords = Vec::new();
        let mut singles = Vec::new();
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] != b'}' {
            loop {
                expect(&mut pos, b'(')?;
                let a = number(&mut pos)?;
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == b',' {
                    pos += 1;
                    let b = number(&mut pos)?;
                    expect(&mut pos, b')')?;
                    chords.push((a, b));
                } else {
                    expect(&mut pos, b')')?;
                    singles.push(a);
                }
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == b',' {
                    pos += 1;
                } else {
                    break;
                }
            }
        }
        expect(&mut pos, b'}')?;
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(err(pos, "trailing input after '}'"));
        }
        let n = chords
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(singles.iter().copied())
            .max()
            .unwrap_or(0);
        Matching::new(n, chords, singles)
    }
}
