//! Greedy string attractors of infinite words.
//!
//! Starting from the empty set, the greedy construction repeatedly adds the
//! smallest `j` such that the current set is not an attractor of `w[0..=j]`.
//! If the set is an attractor of `w[0..j-1]`, the only factors of `w[0..=j]`
//! that can be uncovered are the novel ones ending at `j`, and the shortest of
//! those is uncovered exactly when the nearest chosen position at or before
//! `j` lies at distance at least its length. An online suffix automaton gives
//! that length in amortized constant time, so the whole run is linear.

use crate::attractor::AttractorSet;
use crate::error::{Error, Result};
use crate::sam::SuffixAutomaton;
use crate::seqgen::SequenceSpec;
use crate::word::Word;

/// One greedy addition and the factor that forced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub index: usize,
    pub factor_start: usize,
    pub factor_len: usize,
}

enum Source {
    Spec(SequenceSpec),
    Finite,
}

/// Incremental greedy construction over a stream of symbols.
pub struct GreedyState {
    source: Source,
    text: Vec<u8>,
    sam: SuffixAutomaton,
    positions: Vec<usize>,
    history: Vec<GreedyStep>,
    frontier: usize,
}

impl GreedyState {
    pub fn new(spec: SequenceSpec) -> Self {
        let sigma = spec.alphabet_size();
        GreedyState {
            source: Source::Spec(spec),
            text: Vec::new(),
            sam: SuffixAutomaton::new(sigma),
            positions: Vec::new(),
            history: Vec::new(),
            frontier: 0,
        }
    }

    /// Greedy construction over a finite word; it cannot advance past its end.
    pub fn for_word(w: &Word) -> Self {
        GreedyState {
            source: Source::Finite,
            text: w.symbols().to_vec(),
            sam: SuffixAutomaton::new(w.alphabet_size()),
            positions: Vec::new(),
            history: Vec::new(),
            frontier: 0,
        }
    }

    fn ensure(&mut self, len: usize) -> Result<()> {
        if self.text.len() >= len {
            return Ok(());
        }
        match &self.source {
            Source::Spec(spec) => {
                let target = len.max(2 * self.text.len()).max(64);
                self.text = spec.prefix(target)?.symbols().to_vec();
                Ok(())
            }
            Source::Finite => Err(Error::LengthOutOfRange {
                len,
                max: self.text.len(),
            }),
        }
    }

    /// Runs the construction until the set is certified for `w[0..n-1]`.
    pub fn advance_to(&mut self, n: usize) -> Result<()> {
        self.ensure(n)?;
        while self.frontier < n {
            let j = self.frontier;
            self.sam.extend(self.text[j]);
            let novel = self.sam.shortest_novel_suffix();
            let uncovered = match self.positions.last() {
                Some(&last) => j - last >= novel,
                None => true,
            };
            if uncovered {
                self.positions.push(j);
                self.history.push(GreedyStep {
                    index: j,
                    factor_start: j + 1 - novel,
                    factor_len: novel,
                });
            }
            self.frontier = j + 1;
        }
        Ok(())
    }

    /// Smallest prefix length not yet certified.
    pub fn frontier(&self) -> usize {
        self.frontier
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn history(&self) -> &[GreedyStep] {
        &self.history
    }

    /// The greedy set restricted to `[0..n-1]`; advances as needed.
    pub fn attractor(&mut self, n: usize) -> Result<AttractorSet> {
        self.advance_to(n)?;
        Ok(AttractorSet::new(
            n,
            self.positions
                .iter()
                .copied()
                .take_while(|&p| p < n)
                .collect(),
        )
        .expect("greedy positions are increasing"))
    }
}

/// Smallest `j` in `j_start..=j_limit` such that `positions` is not an
/// attractor of `w[0..=j]`, assuming it is one for every shorter prefix
/// reaching `j_start - 1`. Positions beyond `j` are ignored.
pub fn first_violation(
    spec: &SequenceSpec,
    positions: &[usize],
    j_start: usize,
    j_limit: usize,
) -> Result<Option<usize>> {
    if j_start > j_limit {
        return Ok(None);
    }
    let w = spec.prefix(j_limit + 1)?;
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    let mut sam = SuffixAutomaton::new(w.alphabet_size());
    let mut next = 0;
    let mut last: Option<usize> = None;
    for j in 0..=j_limit {
        sam.extend(w[j]);
        while next < sorted.len() && sorted[next] <= j {
            last = Some(sorted[next]);
            next += 1;
        }
        if j < j_start {
            continue;
        }
        let novel = sam.shortest_novel_suffix();
        if last.is_none_or(|s| j - s >= novel) {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

pub fn greedy_attractor(spec: &SequenceSpec, n: usize) -> Result<AttractorSet> {
    GreedyState::new(spec.clone()).attractor(n)
}

/// Greedy attractor of a finite word, i.e. of any infinite extension restricted to it.
pub fn greedy_for_word(w: &Word) -> AttractorSet {
    GreedyState::for_word(w)
        .attractor(w.len())
        .expect("within the word")
}

/// True when `w[p..p+len-1]` has no occurrence starting before `p`.
pub fn is_novel(w: &Word, p: usize, len: usize) -> Result<bool> {
    if len == 0 || p + len > w.len() {
        return Err(Error::LengthOutOfRange {
            len: p + len,
            max: w.len(),
        });
    }
    let end = p + len;
    let sam = SuffixAutomaton::build(&w.symbols()[..end], w.alphabet_size());
    let v = sam
        .walk(w.factor(p, len))
        .expect("factor of its own prefix");
    Ok(sam.first_end(v) + 1 == end)
}

/// Length of the shortest novel factor ending at `j`. Every shorter factor
/// ending at `j` has an earlier occurrence. One always exists because the
/// prefix `w[0..=j]` is itself novel.
pub fn minimal_novel_at(w: &Word, j: usize) -> Result<usize> {
    if j >= w.len() {
        return Err(Error::PositionOutOfRange {
            position: j,
            len: w.len(),
        });
    }
    let sam = SuffixAutomaton::build(&w.symbols()[..=j], w.alphabet_size());
    Ok(sam.shortest_novel_suffix())
}
