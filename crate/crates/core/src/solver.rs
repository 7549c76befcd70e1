//! Exact minimum string attractors.
//!
//! The attractor problem is a hitting-set problem over the inclusion-minimal
//! constraints of [`constraints`]. The minimum size comes from a
//! branch-and-bound that branches on the smallest unhit constraint, seeded
//! with the greedy attractor as incumbent and pruned by a disjoint-packing
//! lower bound. The reported witness is the lexicographically first attractor
//! of that size, found by a second search that picks positions in increasing
//! order. The same ordered search drives [`span_extremes`].

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::attractor::{constraints, delta, is_attractor, AttractorSet};
use crate::error::{Error, Result};
use crate::greedy::{greedy_for_word, GreedyState};
use crate::seqgen::SequenceSpec;
use crate::word::Word;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Per-instance budget; `None` runs to completion.
    pub timeout: Option<Duration>,
    /// Return the lexicographically first minimum attractor rather than the
    /// first one found. Finding it can dominate the running time.
    pub lexicographic: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            timeout: Some(DEFAULT_TIMEOUT),
            lexicographic: true,
        }
    }
}

impl SolverOptions {
    pub fn unlimited() -> Self {
        SolverOptions {
            timeout: None,
            ..SolverOptions::default()
        }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        SolverOptions {
            timeout: Some(timeout),
            ..SolverOptions::default()
        }
    }
}

/// A minimum attractor, or the best verified one when the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub size: usize,
    pub witness: AttractorSet,
    /// `size` is proven optimal.
    pub proven: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanExtremes {
    pub minspan: usize,
    pub min_witness: AttractorSet,
    pub maxspan: usize,
    pub max_witness: AttractorSet,
}

// ---- packed bit rows -------------------------------------------------------

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(i, &b)| {
        let mut b = b;
        std::iter::from_fn(move || {
            if b == 0 {
                None
            } else {
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(i * 64 + t)
            }
        })
    })
}

fn first_one(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &b)| b != 0)
        .map(|(i, &b)| i * 64 + b.trailing_zeros() as usize)
}

fn first_one_from(bits: &[u64], lo: usize) -> Option<usize> {
    let start = lo / 64;
    if start >= bits.len() {
        return None;
    }
    let head = bits[start] & (!0u64 << (lo % 64));
    if head != 0 {
        return Some(start * 64 + head.trailing_zeros() as usize);
    }
    bits[start + 1..]
        .iter()
        .enumerate()
        .find(|(_, &b)| b != 0)
        .map(|(i, &b)| (start + 1 + i) * 64 + b.trailing_zeros() as usize)
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn is_zero(bits: &[u64]) -> bool {
    bits.iter().all(|&b| b == 0)
}

fn and_not(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & !y).collect()
}

fn suffix_mask(words: usize, lo: usize) -> Vec<u64> {
    (0..words)
        .map(|i| {
            let base = i * 64;
            if base + 64 <= lo {
                0
            } else if base >= lo {
                !0
            } else {
                !0u64 << (lo - base)
            }
        })
        .collect()
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn clear_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

// ---- search clock ----------------------------------------------------------

struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Clock {
    fn new(timeout: Option<Duration>) -> Self {
        Clock {
            deadline: timeout.map(|t| Instant::now() + t),
            ticks: 0,
            expired: false,
        }
    }

    fn tick(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(512) {
            if let Some(d) = self.deadline {
                self.expired = Instant::now() >= d;
            }
        }
        self.expired
    }
}

enum Search<T> {
    Found(T),
    Infeasible,
    TimedOut,
}

// ---- hitting-set instance --------------------------------------------------

struct Instance {
    n: usize,
    pos_words: usize,
    con_words: usize,
    /// Covered positions per constraint, ordered by largest position.
    sets: Vec<Vec<u64>>,
    max_pos: Vec<usize>,
    /// Constraints containing each position.
    hits: Vec<Vec<u64>>,
}

/// Positions grouped by the set of constraints they meet. Feasibility only
/// depends on these classes, and there are usually far fewer of them than
/// positions.
struct Quotient {
    inst: Instance,
    /// Largest position of each class.
    class_max: Vec<usize>,
}

impl Quotient {
    fn new(base: &Instance) -> Self {
        let mut index: HashMap<&[u64], usize> = HashMap::new();
        let mut class_max: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (p, row) in base.hits.iter().enumerate() {
            let id = *index.entry(row).or_insert_with(|| {
                rows.push(row.clone());
                rows.len() - 1
            });
            if id == class_max.len() {
                class_max.push(p);
            } else {
                class_max[id] = p;
            }
        }
        let d = class_max.len();
        let words = words_for(d);
        let mut sets = vec![vec![0u64; words]; base.sets.len()];
        for (class, row) in rows.iter().enumerate() {
            for c in ones(row) {
                set_bit(&mut sets[c], class);
            }
        }
        let max_pos = sets.iter().map(|s| ones(s).last().unwrap_or(0)).collect();
        Quotient {
            inst: Instance {
                n: d,
                pos_words: words,
                con_words: base.con_words,
                sets,
                max_pos,
                hits: rows,
            },
            class_max,
        }
    }

    /// Classes with a member above `p` (all classes for `None`).
    fn above(&self, p: Option<usize>) -> Vec<u64> {
        let mut mask = vec![0u64; self.inst.pos_words];
        for (class, &m) in self.class_max.iter().enumerate() {
            if p.is_none_or(|p| m > p) {
                set_bit(&mut mask, class);
            }
        }
        mask
    }
}

impl Instance {
    fn new(w: &Word) -> Result<Self> {
        let n = w.len();
        let pos_words = words_for(n);
        let mut rows: Vec<(usize, usize, Vec<u64>)> = constraints(w)?
            .into_iter()
            .map(|c| {
                let mut row = vec![0u64; pos_words];
                for p in c.covered.ones() {
                    set_bit(&mut row, p);
                }
                let hi = c.covered.maximum().expect("nonempty constraint");
                let lo = c.covered.minimum().expect("nonempty constraint");
                (hi, lo, row)
            })
            .collect();
        rows.sort();
        let con_words = words_for(rows.len());
        let mut hits = vec![vec![0u64; con_words]; n];
        for (ci, (_, _, row)) in rows.iter().enumerate() {
            for p in ones(row) {
                set_bit(&mut hits[p], ci);
            }
        }
        Ok(Instance {
            n,
            pos_words,
            con_words,
            max_pos: rows.iter().map(|r| r.0).collect(),
            sets: rows.into_iter().map(|r| r.2).collect(),
            hits,
        })
    }

    fn all_constraints(&self) -> Vec<u64> {
        let mut all = vec![0u64; self.con_words];
        for c in 0..self.sets.len() {
            set_bit(&mut all, c);
        }
        all
    }

    /// Greedy count of pairwise disjoint constraints restricted to `allowed`,
    /// abandoned once it exceeds `limit`. `None` when some constraint seen has
    /// no allowed position.
    fn packing(&self, unhit: &[u64], allowed: &[u64], limit: usize) -> Option<usize> {
        let mut used = vec![0u64; self.pos_words];
        let mut count = 0;
        for c in ones(unhit) {
            let set = &self.sets[c];
            let mut empty = true;
            let mut disjoint = true;
            for i in 0..self.pos_words {
                let r = set[i] & allowed[i];
                if r != 0 {
                    empty = false;
                    if r & used[i] != 0 {
                        disjoint = false;
                    }
                }
            }
            if empty {
                return None;
            }
            if disjoint {
                for i in 0..self.pos_words {
                    used[i] |= set[i] & allowed[i];
                }
                count += 1;
                if count > limit {
                    break;
                }
            }
        }
        Some(count)
    }

    /// Allowed positions lying in every unhit constraint.
    fn common_positions(&self, unhit: &[u64], allowed: &[u64]) -> Vec<u64> {
        let mut acc = allowed.to_vec();
        for c in ones(unhit) {
            let mut any = 0;
            for (a, s) in acc.iter_mut().zip(&self.sets[c]) {
                *a &= s;
                any |= *a;
            }
            if any == 0 {
                break;
            }
        }
        acc
    }

    fn hits_any(&self, p: usize, unhit: &[u64]) -> bool {
        self.hits[p].iter().zip(unhit).any(|(h, u)| h & u != 0)
    }

    /// Some hitting set of at most `k` allowed positions. Branches on the
    /// unhit constraint with the fewest allowed positions; a position rejected
    /// in one branch is disallowed in its later siblings.
    fn feasible(
        &self,
        unhit: &[u64],
        mut allowed: Vec<u64>,
        k: usize,
        clock: &mut Clock,
    ) -> Search<Vec<usize>> {
        if clock.tick() {
            return Search::TimedOut;
        }
        if is_zero(unhit) {
            return Search::Found(Vec::new());
        }
        if k == 0 {
            return Search::Infeasible;
        }
        if let Some(p) = first_one(&self.common_positions(unhit, &allowed)) {
            return Search::Found(vec![p]);
        }
        if k == 1 {
            return Search::Infeasible;
        }
        match self.packing(unhit, &allowed, k) {
            Some(lb) if lb <= k => {}
            _ => return Search::Infeasible,
        }
        let candidates = self.undominated(self.smallest_constraint(unhit, &allowed), unhit);
        if k == 2 {
            for p in candidates {
                let rest = and_not(unhit, &self.hits[p]);
                if let Some(q) = first_one(&self.common_positions(&rest, &allowed)) {
                    let mut set = vec![p, q];
                    set.sort_unstable();
                    return Search::Found(set);
                }
            }
            return Search::Infeasible;
        }
        for p in candidates {
            match self.feasible(
                &and_not(unhit, &self.hits[p]),
                allowed.clone(),
                k - 1,
                clock,
            ) {
                Search::Found(mut set) => {
                    set.push(p);
                    set.sort_unstable();
                    return Search::Found(set);
                }
                Search::TimedOut => return Search::TimedOut,
                Search::Infeasible => clear_bit(&mut allowed, p),
            }
        }
        Search::Infeasible
    }

    /// Lexicographically first hitting set with at most `k` elements, given
    /// that one exists. Feasibility questions go to `classes`.
    fn lex_first(&self, classes: &Quotient, k: usize, clock: &mut Clock) -> Option<Vec<usize>> {
        let mut unhit = self.all_constraints();
        let mut chosen = Vec::with_capacity(k);
        let mut lo = 0;
        while !is_zero(&unhit) {
            let k_left = k - chosen.len();
            if k_left <= 2 {
                let tail = self
                    .lex_completion(&unhit, &suffix_mask(self.pos_words, lo), k_left)
                    .expect("a completion was proven to exist");
                chosen.extend(tail);
                break;
            }
            let mut next = None;
            // A later position hitting no more than a refuted one, with fewer
            // positions above it, is refuted too.
            let mut refuted: Vec<Vec<u64>> = Vec::new();
            for p in lo..self.n {
                let trace: Vec<u64> = self.hits[p]
                    .iter()
                    .zip(&unhit)
                    .map(|(h, u)| h & u)
                    .collect();
                if is_zero(&trace) || refuted.iter().any(|r| subset(&trace, r)) {
                    continue;
                }
                let rest = and_not(&unhit, &self.hits[p]);
                match classes
                    .inst
                    .feasible(&rest, classes.above(Some(p)), k_left - 1, clock)
                {
                    Search::Found(_) => {
                        next = Some((p, rest));
                        break;
                    }
                    Search::TimedOut => return None,
                    Search::Infeasible => refuted.push(trace),
                }
            }
            let (p, rest) = next.expect("a completion was proven to exist");
            chosen.push(p);
            unhit = rest;
            lo = p + 1;
        }
        Some(chosen)
    }

    /// Lexicographically first completion by at most two allowed positions.
    ///
    /// For two positions, one of them lies in the smallest unhit constraint
    /// `c`: either the first (scan `c` upward, stop at the first success) or
    /// the second (for each `q` in `c`, the best partner below `q`).
    fn lex_completion(&self, unhit: &[u64], allowed: &[u64], k_left: usize) -> Option<Vec<usize>> {
        let mut best = first_one(&self.common_positions(unhit, allowed)).map(|p| vec![p]);
        if k_left < 2 || best.is_some() {
            return best;
        }
        let c = self.smallest_constraint(unhit, allowed);
        let consider = |cand: Vec<usize>, best: &mut Option<Vec<usize>>| {
            if best.as_ref().is_none_or(|b| cand < *b) {
                *best = Some(cand);
            }
        };
        for p in c.iter().copied() {
            let rest = and_not(unhit, &self.hits[p]);
            let mut above = suffix_mask(self.pos_words, p + 1);
            for (a, b) in above.iter_mut().zip(allowed) {
                *a &= b;
            }
            if let Some(q) = first_one(&self.common_positions(&rest, &above)) {
                consider(vec![p, q], &mut best);
                break;
            }
        }
        for q in c.iter().copied() {
            let rest = and_not(unhit, &self.hits[q]);
            let below: Vec<u64> = suffix_mask(self.pos_words, q)
                .iter()
                .zip(allowed)
                .map(|(m, a)| !m & a)
                .collect();
            if let Some(p) = first_one(&self.common_positions(&rest, &below)) {
                consider(vec![p, q], &mut best);
            }
        }
        best
    }

    /// One representative (the smallest) per maximal trace `hits[p] ∩ unhit`;
    /// positions whose trace is contained in another's are dropped.
    fn undominated(&self, positions: Vec<usize>, unhit: &[u64]) -> Vec<usize> {
        let mut traces: Vec<(usize, Vec<u64>)> = Vec::new();
        for p in positions {
            let t: Vec<u64> = self.hits[p].iter().zip(unhit).map(|(h, u)| h & u).collect();
            if !traces.iter().any(|(_, u)| subset(&t, u)) {
                traces.retain(|(_, u)| !subset(u, &t));
                traces.push((p, t));
            }
        }
        // Strongest first: solutions tend to turn up early.
        traces.sort_by_key(|(p, t)| {
            (
                std::cmp::Reverse(t.iter().map(|x| x.count_ones()).sum::<u32>()),
                *p,
            )
        });
        traces.into_iter().map(|(p, _)| p).collect()
    }

    /// Allowed members of the unhit constraint with fewest allowed members.
    fn smallest_constraint(&self, unhit: &[u64], allowed: &[u64]) -> Vec<usize> {
        let mut pick: Option<(u32, usize)> = None;
        for c in ones(unhit) {
            let size: u32 = self.sets[c]
                .iter()
                .zip(allowed)
                .map(|(s, a)| (s & a).count_ones())
                .sum();
            if pick.is_none_or(|(k, _)| size < k) {
                pick = Some((size, c));
            }
        }
        let Some((_, c)) = pick else {
            return Vec::new();
        };
        let masked: Vec<u64> = self.sets[c]
            .iter()
            .zip(allowed)
            .map(|(s, a)| s & a)
            .collect();
        ones(&masked).collect()
    }

    /// Smallest (`maximize == false`) or largest span over hitting sets of
    /// size exactly `k`, where `k` is the minimum size.
    fn span_search(
        &self,
        k: usize,
        maximize: bool,
        clock: &mut Clock,
    ) -> Search<(usize, Vec<usize>)> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut chosen = Vec::with_capacity(k);
        self.span_rec(
            &self.all_constraints(),
            0,
            &mut chosen,
            k,
            maximize,
            &mut best,
            clock,
        );
        if clock.expired {
            return Search::TimedOut;
        }
        match best {
            Some(b) => Search::Found(b),
            None => Search::Infeasible,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn span_rec(
        &self,
        unhit: &[u64],
        lo: usize,
        chosen: &mut Vec<usize>,
        k_left: usize,
        maximize: bool,
        best: &mut Option<(usize, Vec<usize>)>,
        clock: &mut Clock,
    ) {
        if clock.tick() {
            return;
        }
        let better = |span: usize, best: &Option<(usize, Vec<usize>)>| match best {
            None => true,
            Some((b, _)) => (maximize && span > *b) || (!maximize && span < *b),
        };
        let Some(first) = first_one(unhit) else {
            let span = chosen.last().unwrap_or(&0) - chosen.first().unwrap_or(&0);
            if better(span, best) {
                *best = Some((span, chosen.clone()));
            }
            return;
        };
        if k_left == 0 || self.max_pos[first] < lo {
            return;
        }
        let allowed = suffix_mask(self.pos_words, lo);
        if let Some(&head) = chosen.first() {
            if maximize {
                if !better(self.n - 1 - head, best) {
                    return;
                }
            } else {
                let mut need = lo;
                for c in ones(unhit) {
                    match first_one_from(&self.sets[c], lo) {
                        Some(p) => need = need.max(p),
                        None => return,
                    }
                }
                if !better(need - head, best) {
                    return;
                }
            }
        }
        if k_left == 1 {
            let common = self.common_positions(unhit, &allowed);
            let pick = if maximize {
                ones(&common).last()
            } else {
                first_one(&common)
            };
            if let Some(p) = pick {
                let head = chosen.first().copied().unwrap_or(p);
                if better(p - head, best) {
                    let mut set = chosen.clone();
                    set.push(p);
                    *best = Some((p - head, set));
                }
            }
            return;
        }
        match self.packing(unhit, &allowed, k_left) {
            Some(lb) if lb <= k_left => {}
            _ => return,
        }
        for p in lo..=self.max_pos[first] {
            if chosen.is_empty() && maximize && !better(self.n - 1 - p, best) {
                break;
            }
            if !self.hits_any(p, unhit) {
                continue;
            }
            chosen.push(p);
            let next = and_not(unhit, &self.hits[p]);
            self.span_rec(&next, p + 1, chosen, k_left - 1, maximize, best, clock);
            chosen.pop();
            if clock.expired {
                return;
            }
        }
    }
}

fn ceil_ratio(r: Ratio<u64>) -> usize {
    r.ceil().to_integer() as usize
}

/// Minimum attractor size under a time budget.
pub fn solve(w: &Word, opts: &SolverOptions) -> Result<Solution> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let inst = Instance::new(w)?;
    let mut clock = Clock::new(opts.timeout);
    let greedy = greedy_for_word(w).into_positions();
    let lower = ceil_ratio(delta(w)?).max(w.distinct_symbols()).max(
        inst.packing(
            &inst.all_constraints(),
            &suffix_mask(inst.pos_words, 0),
            usize::MAX,
        )
        .unwrap_or(0),
    );
    let classes = Quotient::new(&inst);
    let mut witness = greedy;
    for k in lower..witness.len() {
        match classes
            .inst
            .feasible(&inst.all_constraints(), classes.above(None), k, &mut clock)
        {
            Search::Found(set) => {
                witness = set.iter().map(|&c| classes.class_max[c]).collect();
                witness.sort_unstable();
                break;
            }
            Search::Infeasible => {}
            Search::TimedOut => return finish(w, witness, false),
        }
    }
    if opts.lexicographic {
        // On timeout the size stays proven; only the ordering is lost.
        if let Some(set) = inst.lex_first(&classes, witness.len(), &mut clock) {
            witness = set;
        }
    }
    finish(w, witness, true)
}

fn finish(w: &Word, witness: Vec<usize>, proven: bool) -> Result<Solution> {
    let size = witness.len();
    let witness = AttractorSet::new(w.len(), witness)?;
    debug_assert!(is_attractor(w, &witness)?.is_ok());
    Ok(Solution {
        size,
        witness,
        proven,
    })
}

/// Exact `gamma(w)` and the lexicographically first minimum attractor.
pub fn gamma(w: &Word) -> Result<(usize, AttractorSet)> {
    let s = solve(w, &SolverOptions::unlimited())?;
    Ok((s.size, s.witness))
}

/// Smallest and largest span over all minimum-cardinality attractors, each
/// with the lexicographically first witness attaining it.
pub fn span_extremes(w: &Word) -> Result<SpanExtremes> {
    Ok(span_extremes_with(w, &SolverOptions::unlimited())?.expect("no deadline"))
}

/// As [`span_extremes`]; `None` when the budget runs out.
pub fn span_extremes_with(w: &Word, opts: &SolverOptions) -> Result<Option<SpanExtremes>> {
    let sol = solve(w, opts)?;
    if !sol.proven {
        return Ok(None);
    }
    let inst = Instance::new(w)?;
    let mut clock = Clock::new(opts.timeout);
    let mut run = |maximize| match inst.span_search(sol.size, maximize, &mut clock) {
        Search::Found((span, set)) => Ok(Some((span, set))),
        Search::TimedOut => Ok(None),
        Search::Infeasible => unreachable!("minimum attractors exist"),
    };
    let (Some((minspan, lo)), Some((maxspan, hi))) = (run(false)?, run(true)?) else {
        return Ok(None);
    };
    Ok(Some(SpanExtremes {
        minspan,
        min_witness: AttractorSet::new(w.len(), lo)?,
        maxspan,
        max_witness: AttractorSet::new(w.len(), hi)?,
    }))
}

/// Optional columns of a gamma table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableFields {
    pub span: bool,
    pub delta: bool,
    pub greedy: bool,
}

impl TableFields {
    pub fn all() -> Self {
        TableFields {
            span: true,
            delta: true,
            greedy: true,
        }
    }
}

/// One row of a gamma sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRecord {
    pub n: usize,
    pub gamma: usize,
    pub proven: bool,
    pub witness: AttractorSet,
    pub minspan: Option<usize>,
    pub maxspan: Option<usize>,
    pub delta: Option<Ratio<u64>>,
    pub greedy_size: Option<usize>,
}

/// Solves every prefix length `1..=n_max` on `threads` workers (0 picks the
/// default). Rows come back ordered by `n`; every witness is re-verified.
pub fn gamma_table(
    spec: &SequenceSpec,
    n_max: usize,
    fields: TableFields,
    opts: &SolverOptions,
    threads: usize,
) -> Result<Vec<GammaRecord>> {
    let ns: Vec<usize> = (1..=n_max).collect();
    gamma_rows(spec, &ns, fields, opts, threads)
}

/// As [`gamma_table`] for an arbitrary set of prefix lengths.
pub fn gamma_rows(
    spec: &SequenceSpec,
    ns: &[usize],
    fields: TableFields,
    opts: &SolverOptions,
    threads: usize,
) -> Result<Vec<GammaRecord>> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let n_max = match (ns.first(), ns.last()) {
        (Some(&lo), Some(&hi)) if lo > 0 => hi,
        _ => return Err(Error::LengthOutOfRange { len: 0, max: 0 }),
    };
    let w = spec.prefix(n_max)?;
    let greedy = if fields.greedy {
        let mut g = GreedyState::new(spec.clone());
        g.advance_to(n_max)?;
        Some(g.positions().to_vec())
    } else {
        None
    };
    let row = |n: usize| -> Result<GammaRecord> {
        let prefix = w.prefix(n);
        let sol = solve(&prefix, opts)?;
        if let crate::attractor::Verdict::Uncovered { start, len } =
            is_attractor(&prefix, &sol.witness)?
        {
            return Err(Error::ConstructionFailed { start, len });
        }
        let spans = if fields.span && sol.proven {
            span_extremes_with(&prefix, opts)?
        } else {
            None
        };
        Ok(GammaRecord {
            n,
            gamma: sol.size,
            proven: sol.proven,
            witness: sol.witness,
            minspan: spans.as_ref().map(|s| s.minspan),
            maxspan: spans.as_ref().map(|s| s.maxspan),
            delta: if fields.delta {
                Some(delta(&prefix)?)
            } else {
                None
            },
            greedy_size: greedy
                .as_ref()
                .map(|g| g.iter().take_while(|&&p| p < n).count()),
        })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    pool.install(|| ns.par_iter().map(|&n| row(n)).collect())
}
