//! String attractor verification, factor complexity, and the hitting-set
//! constraints behind exact minimization.
//!
//! A set `S` of positions is a string attractor of `w` when every distinct
//! nonempty factor of `w` has an occurrence whose interval contains a member
//! of `S`. Verification runs in linear time on the suffix automaton: for each
//! class of factors sharing an end-position set `E`, let `D` be the smallest
//! distance from some `e` in `E` back to the nearest attractor position at or
//! before `e`. A length `l` in the class is covered exactly when `l > D`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sam::SuffixAutomaton;
use crate::word::Word;

/// Sorted, duplicate-free positions inside a prefix of length `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AttractorSet {
    n: usize,
    positions: Vec<usize>,
}

impl AttractorSet {
    pub fn new(n: usize, positions: Vec<usize>) -> Result<Self> {
        if positions.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::UnsortedPositions);
        }
        if let Some(&position) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::PositionOutOfRange { position, len: n });
        }
        Ok(AttractorSet { n, positions })
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(n: usize, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        AttractorSet::new(n, positions)
    }

    pub fn empty(n: usize) -> Self {
        AttractorSet {
            n,
            positions: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn into_positions(self) -> Vec<usize> {
        self.positions
    }

    /// Largest minus smallest element; zero for sets of size at most one.
    pub fn span(&self) -> usize {
        match (self.positions.first(), self.positions.last()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    /// The positions below `n`, as a set for the shorter prefix.
    pub fn restrict(&self, n: usize) -> AttractorSet {
        AttractorSet {
            n,
            positions: self.positions.iter().copied().filter(|&p| p < n).collect(),
        }
    }
}

impl Deref for AttractorSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.positions
    }
}

impl fmt::Display for AttractorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_positions(&self.positions))
    }
}

pub fn format_positions(positions: &[usize]) -> String {
    positions
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_positions(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidRepresentation(format!("bad position `{t}`")))
        })
        .collect()
}

/// A set of factor lengths, stored as sorted disjoint inclusive intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthRange {
    intervals: Vec<(usize, usize)>,
}

impl LengthRange {
    pub fn all() -> Self {
        LengthRange {
            intervals: vec![(1, usize::MAX)],
        }
    }

    pub fn interval(lo: usize, hi: usize) -> Self {
        LengthRange::from_intervals([(lo, hi)])
    }

    pub fn single(l: usize) -> Self {
        LengthRange::interval(l, l)
    }

    /// Zero is dropped; empty intervals are ignored.
    pub fn from_intervals(iter: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut v: Vec<(usize, usize)> = iter
            .into_iter()
            .map(|(a, b)| (a.max(1), b))
            .filter(|(a, b)| a <= b)
            .collect();
        v.sort_unstable();
        let mut merged: Vec<(usize, usize)> = Vec::with_capacity(v.len());
        for (a, b) in v {
            match merged.last_mut() {
                Some(last) if a <= last.1.saturating_add(1) => last.1 = last.1.max(b),
                _ => merged.push((a, b)),
            }
        }
        LengthRange { intervals: merged }
    }

    pub fn union(&self, other: &LengthRange) -> LengthRange {
        LengthRange::from_intervals(self.intervals.iter().chain(&other.intervals).copied())
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, l: usize) -> bool {
        self.intervals.iter().any(|&(a, b)| a <= l && l <= b)
    }

    /// Smallest member in `lo..=hi`.
    pub fn first_in(&self, lo: usize, hi: usize) -> Option<usize> {
        self.intervals
            .iter()
            .filter(|&&(a, b)| b >= lo && a <= hi)
            .map(|&(a, _)| a.max(lo))
            .next()
    }
}

/// Outcome of a verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Ok,
    /// The shortest uncovered factor, leftmost occurrence among ties.
    Uncovered {
        start: usize,
        len: usize,
    },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Ok => f.write_str("ok"),
            Verdict::Uncovered { start, len } => write!(f, "uncovered({start},{len})"),
        }
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "ok" {
            return Ok(Verdict::Ok);
        }
        let inner = s
            .strip_prefix("uncovered(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidRepresentation(format!("bad verdict `{s}`")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::InvalidRepresentation(format!("bad verdict `{s}`")))?;
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidRepresentation(format!("bad verdict `{s}`")))
        };
        Ok(Verdict::Uncovered {
            start: parse(a)?,
            len: parse(b)?,
        })
    }
}

fn check_positions(w: &Word, positions: &[usize]) -> Result<()> {
    match positions.iter().find(|&&p| p >= w.len()) {
        Some(&position) => Err(Error::PositionOutOfRange {
            position,
            len: w.len(),
        }),
        None => Ok(()),
    }
}

/// Distance from each position back to the nearest marked position at or
/// before it; `u64::MAX` when there is none.
fn back_distances(n: usize, positions: &[usize]) -> Vec<u64> {
    let mut marked = vec![false; n];
    for &p in positions {
        marked[p] = true;
    }
    let mut last: Option<usize> = None;
    (0..n)
        .map(|e| {
            if marked[e] {
                last = Some(e);
            }
            last.map_or(u64::MAX, |s| (e - s) as u64)
        })
        .collect()
}

fn verify(w: &Word, positions: &[usize], lengths: &LengthRange) -> Result<Verdict> {
    check_positions(w, positions)?;
    if w.is_empty() {
        return Ok(Verdict::Ok);
    }
    let sam = SuffixAutomaton::build(w.symbols(), w.alphabet_size());
    let dist = back_distances(w.len(), positions);
    let reach = sam.min_over_endpos(|e| dist[e]);
    let mut worst: Option<(usize, usize)> = None;
    for (v, &r) in reach.iter().enumerate().skip(1) {
        let lo = sam.min_len(v);
        let hi = (sam.max_len(v) as u64).min(r) as usize;
        if lo > hi {
            continue;
        }
        if let Some(len) = lengths.first_in(lo, hi) {
            let start = sam.first_end(v) + 1 - len;
            if worst.is_none_or(|best| (len, start) < best) {
                worst = Some((len, start));
            }
        }
    }
    Ok(match worst {
        None => Verdict::Ok,
        Some((len, start)) => Verdict::Uncovered { start, len },
    })
}

/// Checks the attractor property for all factor lengths.
pub fn is_attractor(w: &Word, positions: &[usize]) -> Result<Verdict> {
    verify(w, positions, &LengthRange::all())
}

/// Checks the attractor property only for factors whose length lies in `lengths`.
pub fn is_attractor_for_lengths(
    w: &Word,
    positions: &[usize],
    lengths: &LengthRange,
) -> Result<Verdict> {
    verify(w, positions, lengths)
}

/// Entry `l` is the number of distinct length-`l` factors of `w`.
pub fn factor_counts(w: &Word) -> Vec<usize> {
    SuffixAutomaton::build(w.symbols(), w.alphabet_size()).factor_counts()
}

/// Number of distinct factors of length `len`.
pub fn factor_count(w: &Word, len: usize) -> Result<usize> {
    if len == 0 || len > w.len() {
        return Err(Error::LengthOutOfRange { len, max: w.len() });
    }
    Ok(factor_counts(w)[len])
}

/// `max_l rho_l(w) / l`, exactly.
pub fn delta(w: &Word) -> Result<Ratio<u64>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let counts = factor_counts(w);
    Ok((1..=w.len())
        .map(|l| Ratio::new(counts[l] as u64, l as u64))
        .max()
        .expect("nonempty"))
}

/// One hitting-set constraint: the union of all occurrence intervals of one
/// distinct factor, represented by its leftmost occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorConstraint {
    pub start: usize,
    pub len: usize,
    pub covered: FixedBitSet,
}

impl FactorConstraint {
    pub fn positions(&self) -> Vec<usize> {
        self.covered.ones().collect()
    }
}

fn covered_by(endpos: &FixedBitSet, len: usize, n: usize) -> FixedBitSet {
    let mut covered = FixedBitSet::with_capacity(n);
    let mut filled_to = 0usize;
    for e in endpos.ones() {
        let from = (e + 1 - len).max(filled_to);
        covered.insert_range(from..e + 1);
        filled_to = e + 1;
    }
    covered
}

/// Inclusion-minimal constraints: `S` is an attractor of `w` iff it meets the
/// `covered` set of every returned constraint. Equal sets are reported once,
/// represented by the shortest then leftmost factor; the list is ordered by
/// `(len, start)`.
///
/// Within one automaton state the covered set only grows with the length, so
/// only the shortest member of each class can be minimal.
pub fn constraints(w: &Word) -> Result<Vec<FactorConstraint>> {
    constraints_for_lengths(w, &LengthRange::all())
}

/// As [`constraints`], for factors whose length lies in `lengths`.
pub fn constraints_for_lengths(w: &Word, lengths: &LengthRange) -> Result<Vec<FactorConstraint>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let sam = SuffixAutomaton::build(w.symbols(), w.alphabet_size());
    let endpos = sam.endpos_sets();
    let mut candidates: Vec<(usize, FactorConstraint)> = (1..sam.state_count())
        .filter_map(|v| {
            let len = lengths.first_in(sam.min_len(v), sam.max_len(v))?;
            let covered = covered_by(&endpos[v], len, n);
            let c = FactorConstraint {
                start: sam.first_end(v) + 1 - len,
                len,
                covered,
            };
            Some((c.covered.count_ones(..), c))
        })
        .collect();
    candidates.sort_by(|(ka, a), (kb, b)| (ka, a.len, a.start).cmp(&(kb, b.len, b.start)));
    let mut kept: Vec<FactorConstraint> = Vec::new();
    for (_, c) in candidates {
        if !kept.iter().any(|k| k.covered.is_subset(&c.covered)) {
            kept.push(c);
        }
    }
    kept.sort_by_key(|c| (c.len, c.start));
    Ok(kept)
}
