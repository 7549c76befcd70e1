//! Online suffix automaton over a small integer alphabet.
//!
//! Each state stands for a class of factors sharing one end-position set; the
//! class holds the lengths `len(link(v)) + 1 ..= len(v)`.

use fixedbitset::FixedBitSet;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct SuffixAutomaton {
    sigma: usize,
    next: Vec<u32>,
    link: Vec<u32>,
    len: Vec<u32>,
    first_end: Vec<u32>,
    is_clone: Vec<bool>,
    last: u32,
    text_len: usize,
}

impl SuffixAutomaton {
    pub fn new(sigma: usize) -> Self {
        let sigma = sigma.max(1);
        SuffixAutomaton {
            sigma,
            next: vec![NONE; sigma],
            link: vec![NONE],
            len: vec![0],
            first_end: vec![0],
            is_clone: vec![false],
            last: 0,
            text_len: 0,
        }
    }

    pub fn build(symbols: &[u8], sigma: usize) -> Self {
        let mut sam = SuffixAutomaton::new(sigma);
        for &c in symbols {
            sam.extend(c);
        }
        sam
    }

    fn add_state(&mut self, len: u32, first_end: u32, clone_of: Option<u32>) -> u32 {
        let id = self.len.len() as u32;
        match clone_of {
            Some(q) => {
                let base = q as usize * self.sigma;
                let row: Vec<u32> = self.next[base..base + self.sigma].to_vec();
                self.next.extend_from_slice(&row);
                self.link.push(self.link[q as usize]);
            }
            None => {
                self.next.extend(std::iter::repeat_n(NONE, self.sigma));
                self.link.push(NONE);
            }
        }
        self.len.push(len);
        self.first_end.push(first_end);
        self.is_clone.push(clone_of.is_some());
        id
    }

    #[inline]
    fn go(&self, v: u32, c: u8) -> u32 {
        self.next[v as usize * self.sigma + c as usize]
    }

    #[inline]
    fn set(&mut self, v: u32, c: u8, to: u32) {
        self.next[v as usize * self.sigma + c as usize] = to;
    }

    /// Appends one symbol and returns the state of the whole current text.
    pub fn extend(&mut self, c: u8) -> u32 {
        debug_assert!((c as usize) < self.sigma);
        let pos = self.text_len as u32;
        self.text_len += 1;
        let cur = self.add_state(self.len[self.last as usize] + 1, pos, None);
        let mut p = self.last;
        while p != NONE && self.go(p, c) == NONE {
            self.set(p, c, cur);
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.go(p, c);
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone = self.add_state(
                    self.len[p as usize] + 1,
                    self.first_end[q as usize],
                    Some(q),
                );
                while p != NONE && self.go(p, c) == q {
                    self.set(p, c, clone);
                    p = self.link[p as usize];
                }
                self.link[q as usize] = clone;
                self.link[cur as usize] = clone;
            }
        }
        self.last = cur;
        cur
    }

    /// State reached by reading `s` from the root, if `s` is a factor.
    pub fn walk(&self, s: &[u8]) -> Option<usize> {
        let mut v = 0u32;
        for &c in s {
            if c as usize >= self.sigma {
                return None;
            }
            v = self.go(v, c);
            if v == NONE {
                return None;
            }
        }
        Some(v as usize)
    }

    pub fn state_count(&self) -> usize {
        self.len.len()
    }

    /// Length of the shortest factor ending at the last position that has not
    /// occurred before. The whole text always qualifies, so this exists
    /// whenever the text is nonempty.
    pub fn shortest_novel_suffix(&self) -> usize {
        let l = self.link[self.last as usize];
        self.len[l as usize] as usize + 1
    }

    pub fn max_len(&self, v: usize) -> usize {
        self.len[v] as usize
    }

    pub fn min_len(&self, v: usize) -> usize {
        self.len[self.link[v] as usize] as usize + 1
    }

    pub fn link(&self, v: usize) -> usize {
        self.link[v] as usize
    }

    pub fn first_end(&self, v: usize) -> usize {
        self.first_end[v] as usize
    }

    /// True for the state created when position `first_end(v)` was appended.
    pub fn is_primary(&self, v: usize) -> bool {
        v != 0 && !self.is_clone[v]
    }

    /// Non-root states, longest first, so children precede their suffix links.
    pub fn by_len_desc(&self) -> Vec<usize> {
        let mut buckets = vec![0usize; self.text_len + 2];
        for &l in &self.len {
            buckets[l as usize] += 1;
        }
        for i in 1..buckets.len() {
            buckets[i] += buckets[i - 1];
        }
        let mut order = vec![0usize; self.len.len()];
        for v in (0..self.len.len()).rev() {
            let l = self.len[v] as usize;
            buckets[l] -= 1;
            order[buckets[l]] = v;
        }
        order.reverse();
        order.pop();
        order
    }

    /// Folds a per-position value up the suffix-link tree with `min`, so each
    /// state receives the minimum over its end-position set.
    pub fn min_over_endpos(&self, at_pos: impl Fn(usize) -> u64) -> Vec<u64> {
        let mut acc = vec![u64::MAX; self.state_count()];
        for (v, a) in acc.iter_mut().enumerate().skip(1) {
            if self.is_primary(v) {
                *a = at_pos(self.first_end(v));
            }
        }
        for v in self.by_len_desc() {
            let l = self.link(v);
            if acc[v] < acc[l] {
                acc[l] = acc[v];
            }
        }
        acc
    }

    /// End-position set of every state as a bitset over `0..text_len`.
    pub fn endpos_sets(&self) -> Vec<FixedBitSet> {
        let n = self.text_len;
        let mut sets = vec![FixedBitSet::with_capacity(n); self.state_count()];
        for (v, set) in sets.iter_mut().enumerate().skip(1) {
            if self.is_primary(v) {
                set.insert(self.first_end(v));
            }
        }
        for v in self.by_len_desc() {
            let l = self.link(v);
            if l != 0 {
                let child = std::mem::take(&mut sets[v]);
                sets[l].union_with(&child);
                sets[v] = child;
            }
        }
        sets
    }

    /// Distinct factor count for every length: entry `l` is the number of
    /// distinct factors of length `l`; entry 0 is unused.
    pub fn factor_counts(&self) -> Vec<usize> {
        let mut diff = vec![0i64; self.text_len + 2];
        for v in 1..self.state_count() {
            diff[self.min_len(v)] += 1;
            diff[self.max_len(v) + 1] -= 1;
        }
        let mut counts = vec![0usize; self.text_len + 1];
        let mut run = 0i64;
        for l in 1..=self.text_len {
            run += diff[l];
            counts[l] = run as usize;
        }
        counts
    }
}
