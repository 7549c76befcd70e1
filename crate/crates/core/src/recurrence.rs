//! Appearance and recurrence on finite windows, the attractor constructions
//! they drive, and a heuristic growth classifier.
//!
//! The appearance and recurrence constants are defined on infinite words.
//! Here they are estimated on a prefix window of length `W` and re-estimated
//! on `2W`; a profile is marked stable only when both windows agree.

use std::collections::HashMap;
use std::fmt;
use std::time::Duration;

use num_rational::Ratio;
use serde::Serialize;

use crate::attractor::{
    constraints_for_lengths, is_attractor, is_attractor_for_lengths, AttractorSet, LengthRange,
    Verdict,
};
use crate::error::{Error, Result};
use crate::greedy::GreedyState;
use crate::seqgen::SequenceSpec;
use crate::solver::{solve, SolverOptions};
use crate::word::Word;

/// A sequence together with a materialized prefix window.
#[derive(Clone, Debug)]
pub struct WindowedSequence {
    spec: SequenceSpec,
    window: Word,
}

impl WindowedSequence {
    pub fn new(spec: SequenceSpec, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        let window = spec.prefix(len)?;
        Ok(WindowedSequence { spec, window })
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn window(&self) -> &Word {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    /// The same sequence over a window twice as long.
    pub fn doubled(&self) -> Result<Self> {
        WindowedSequence::new(self.spec.clone(), 2 * self.len())
    }

    /// Prefix of length `n`, taken from the window when it is long enough.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        if n <= self.len() {
            Ok(self.window.prefix(n))
        } else {
            self.spec.prefix(n)
        }
    }
}

/// Exact class labels of all length-`l` factors, for `l = 1, 2, …`.
///
/// Labels are refined one length at a time from `(label, next symbol)` pairs,
/// numbered by first appearance, so equal labels mean equal factors.
struct FactorLabels<'a> {
    text: &'a [u8],
    len: usize,
    labels: Vec<u32>,
    classes: usize,
}

impl<'a> FactorLabels<'a> {
    fn new(text: &'a [u8]) -> Self {
        let mut map = HashMap::new();
        let labels = text
            .iter()
            .map(|&c| {
                let next = map.len() as u32;
                *map.entry(c).or_insert(next)
            })
            .collect();
        FactorLabels {
            text,
            len: 1,
            labels,
            classes: map.len(),
        }
    }

    /// Advances to the next length; false once it would exceed the text.
    fn extend(&mut self) -> bool {
        let l = self.len;
        if l >= self.text.len() {
            return false;
        }
        let mut map: HashMap<(u32, u8), u32> = HashMap::new();
        let labels = (0..self.text.len() - l)
            .map(|p| {
                let next = map.len() as u32;
                *map.entry((self.labels[p], self.text[p + l]))
                    .or_insert(next)
            })
            .collect();
        self.labels = labels;
        self.classes = map.len();
        self.len += 1;
        true
    }

    /// For each start position, whether its factor occurs exactly once.
    fn unique(&self) -> Vec<bool> {
        let mut count = vec![0u32; self.classes];
        for &c in &self.labels {
            count[c as usize] += 1;
        }
        self.labels
            .iter()
            .map(|&c| count[c as usize] == 1)
            .collect()
    }
}

/// Containment-based appearance value: the shortest prefix containing an
/// occurrence of every length-`l` factor of the window.
fn appearance_of(labels: &FactorLabels) -> usize {
    let mut seen = vec![false; labels.classes];
    let mut last_first = 0;
    for (p, &c) in labels.labels.iter().enumerate() {
        if !seen[c as usize] {
            seen[c as usize] = true;
            last_first = p;
        }
    }
    last_first + labels.len
}

/// Shortest `m` such that every length-`m` window of the text contains an
/// occurrence of every length-`l` factor; `None` when it exceeds `cap`.
fn recurrence_of(labels: &FactorLabels, cap: usize) -> Option<usize> {
    let w = labels.text.len() as i64;
    let l = labels.len as i64;
    let mut last = vec![-1i64; labels.classes];
    let mut gap = 0i64;
    for (p, &c) in labels.labels.iter().enumerate() {
        gap = gap.max(p as i64 - last[c as usize]);
        last[c as usize] = p as i64;
    }
    for &q in &last {
        gap = gap.max(w - l + 1 - q);
    }
    let m = (l - 1 + gap) as usize;
    (m <= cap).then_some(m)
}

fn check_len(l: usize, window: usize, limit: usize) -> Result<()> {
    if l == 0 || l > limit {
        Err(Error::WindowTooShort { len: l, window })
    } else {
        Ok(())
    }
}

fn labels_at(text: &[u8], l: usize) -> FactorLabels<'_> {
    let mut labels = FactorLabels::new(text);
    while labels.len < l {
        labels.extend();
    }
    labels
}

/// Smallest `m` such that every length-`l` factor of the window occurs
/// inside `[0, m)`. Requires `l ≤ W/4`.
pub fn least_appearance(ws: &WindowedSequence, l: usize) -> Result<usize> {
    check_len(l, ws.len(), ws.len() / 4)?;
    Ok(appearance_of(&labels_at(ws.window.symbols(), l)))
}

/// Smallest `m` such that every length-`m` window inside the window contains
/// every length-`l` factor; `None` when no `m ≤ W/2` works. Requires
/// `l ≤ W/8`.
pub fn least_recurrence(ws: &WindowedSequence, l: usize) -> Result<Option<usize>> {
    check_len(l, ws.len(), ws.len() / 8)?;
    Ok(recurrence_of(
        &labels_at(ws.window.symbols(), l),
        ws.len() / 2,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppearanceProfile {
    pub window: usize,
    /// Entry `l - 1` is the appearance value for length `l`.
    pub values: Vec<usize>,
    /// Largest `value / l`.
    #[serde(serialize_with = "ser_ratio")]
    pub constant: Ratio<u64>,
    /// Values are unchanged on the doubled window.
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceProfile {
    pub window: usize,
    /// Entry `l - 1` is the recurrence value for length `l`, `None` if unbounded.
    pub values: Vec<Option<usize>>,
    /// Largest `value / l`; `None` when some length is unbounded.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub constant: Option<Ratio<u64>>,
    pub stable: bool,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(*r))
}

fn ser_opt_ratio<S: serde::Serializer>(
    r: &Option<Ratio<u64>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_ratio(*r)),
        None => s.serialize_none(),
    }
}

/// `p/q`, or just `p` when `q = 1`.
pub fn format_ratio(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn appearance_values(text: &[u8], l_max: usize) -> Vec<usize> {
    let mut labels = FactorLabels::new(text);
    let mut values = vec![appearance_of(&labels)];
    while labels.len < l_max && labels.extend() {
        values.push(appearance_of(&labels));
    }
    values
}

fn recurrence_values(text: &[u8], l_max: usize) -> Vec<Option<usize>> {
    let cap = text.len() / 2;
    let mut labels = FactorLabels::new(text);
    let mut values = vec![recurrence_of(&labels, cap)];
    while labels.len < l_max && labels.extend() {
        values.push(recurrence_of(&labels, cap));
    }
    values
}

fn max_ratio(values: impl Iterator<Item = usize>) -> Ratio<u64> {
    values
        .enumerate()
        .map(|(i, m)| Ratio::new(m as u64, i as u64 + 1))
        .max()
        .unwrap_or_else(|| Ratio::from_integer(1))
}

/// Estimates the appearance constant over lengths `1..=l_max` (`l_max ≤ W/8`).
pub fn appearance_constant_estimate(
    ws: &WindowedSequence,
    l_max: usize,
) -> Result<AppearanceProfile> {
    check_len(l_max, ws.len(), ws.len() / 8)?;
    let values = appearance_values(ws.window.symbols(), l_max);
    let again = appearance_values(ws.doubled()?.window.symbols(), l_max);
    Ok(AppearanceProfile {
        window: ws.len(),
        constant: max_ratio(values.iter().copied()),
        stable: values == again,
        values,
    })
}

/// Estimates the recurrence constant over lengths `1..=l_max` (`l_max ≤ W/8`).
pub fn recurrence_constant_estimate(
    ws: &WindowedSequence,
    l_max: usize,
) -> Result<RecurrenceProfile> {
    check_len(l_max, ws.len(), ws.len() / 8)?;
    let values = recurrence_values(ws.window.symbols(), l_max);
    let again = recurrence_values(ws.doubled()?.window.symbols(), l_max);
    let constant = values
        .iter()
        .copied()
        .collect::<Option<Vec<usize>>>()
        .map(|v| max_ratio(v.into_iter()));
    Ok(RecurrenceProfile {
        window: ws.len(),
        constant,
        stable: values == again,
        values,
    })
}

fn ceil_mul(r: Ratio<u64>, k: usize) -> usize {
    (r * Ratio::from_integer(k as u64)).ceil().to_integer() as usize
}

fn verified(
    w: &Word,
    positions: Vec<usize>,
    lengths: Option<&LengthRange>,
) -> Result<AttractorSet> {
    let verdict = match lengths {
        Some(l) => is_attractor_for_lengths(w, &positions, l)?,
        None => is_attractor(w, &positions)?,
    };
    match verdict {
        Verdict::Ok => AttractorSet::new(w.len(), positions),
        Verdict::Uncovered { start, len } => Err(Error::ConstructionFailed { start, len }),
    }
}

/// Positions `s−1, 2s−1, …` inside the first `min(n, ⌈2Âs⌉)` symbols: an
/// attractor of the length-`n` prefix for factor lengths `[s, 2s]`.
pub fn stride_attractor(
    ws: &WindowedSequence,
    n: usize,
    s: usize,
    a_hat: Ratio<u64>,
) -> Result<AttractorSet> {
    if s == 0 {
        return Err(Error::LengthOutOfRange { len: 0, max: n });
    }
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let w = ws.prefix(n)?;
    let reach = n.min(ceil_mul(a_hat, 2 * s));
    let points = (1..=reach / s).map(|k| k * s - 1).collect();
    verified(&w, points, Some(&LengthRange::interval(s, (2 * s).min(n))))
}

/// Union of stride attractors for `s = 1, 3, 7, …, 2^k − 1`, whose length
/// ranges `[s, 2s]` tile `[1, n]`.
pub fn dyadic_attractor(
    ws: &WindowedSequence,
    n: usize,
    a_hat: Ratio<u64>,
) -> Result<AttractorSet> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let w = ws.prefix(n)?;
    let mut points = Vec::new();
    let mut k = 1;
    loop {
        let s = (1usize << k) - 1;
        let reach = n.min(ceil_mul(a_hat, 2 * s));
        points.extend((1..=reach / s).map(|j| j * s - 1));
        if (1usize << (k + 1)) - 2 >= n {
            break;
        }
        k += 1;
    }
    points.sort_unstable();
    points.dedup();
    verified(&w, points, None)
}

/// Output of [`recurrent_attractor`] with its construction diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrentAttractor {
    pub set: AttractorSet,
    /// Number of top levels kept, `⌈log₂ R̂⌉ + c0`.
    pub kept_levels: usize,
    pub c0: usize,
    /// Levels whose points were retired.
    pub retired_levels: usize,
    /// Points of retired levels that had to be reinstated because no
    /// perturbation covered their short factors.
    pub reinstated: usize,
}

impl RecurrentAttractor {
    /// Every retirement succeeded.
    pub fn bound_met(&self) -> bool {
        self.reinstated == 0
    }
}

/// Points at spacing `2s` from `s − 1` inside `[0, min(n, ⌈6Â⌉·s))`. Rounding
/// `6Â` before scaling gives every uncapped level the same number of points.
fn level_points(n: usize, s: usize, a_hat: Ratio<u64>) -> Vec<usize> {
    let reach = n.min(ceil_mul(a_hat, 6) * s);
    (0..)
        .map(|k| s - 1 + 2 * s * k)
        .take_while(|&p| p < reach)
        .collect()
}

fn ceil_log2(r: Ratio<u64>) -> usize {
    let mut k = 0;
    while Ratio::from_integer(1u64 << k) < r {
        k += 1;
    }
    k
}

/// Attractor whose size depends on the appearance and recurrence constants
/// but not on `n`.
///
/// Level `j ≥ 1` has stride `s = 2^{j−1}` and serves lengths `[3s, 6s]`; a base
/// level serves `[1, 2]`. Only the top `⌈log₂ R̂⌉ + c0` levels are kept. Their
/// points are moved within `±⌊s/2⌋`, which preserves their own lengths, to
/// positions that also hit the short factors the retired levels were
/// responsible for. Short factors still unhit bring back retired points. If
/// the result fails verification, `c0` grows until nothing is retired.
pub fn recurrent_attractor(
    ws: &WindowedSequence,
    n: usize,
    a_hat: Ratio<u64>,
    r_hat: Ratio<u64>,
) -> Result<RecurrentAttractor> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let w = ws.prefix(n)?;
    let base: Vec<usize> = (0..n.min(ceil_mul(a_hat, 2))).collect();
    let mut top = 0;
    while 6 * (1usize << top) < n {
        top += 1;
    }
    // Strides 1, 2, …, 2^top; the last serves lengths up to n.
    let levels: Vec<(usize, Vec<usize>)> = (0..=top)
        .map(|j| {
            let s = 1usize << j;
            (s, level_points(n, s, a_hat))
        })
        .collect();
    let mut c0 = 2;
    loop {
        let kept = ceil_log2(r_hat) + c0;
        let retired = levels.len().saturating_sub(kept);
        let (points, reinstated) = assemble(&w, &base, &levels, retired)?;
        let result = RecurrentAttractor {
            set: AttractorSet::from_unsorted(n, points)?,
            kept_levels: kept,
            c0,
            retired_levels: retired,
            reinstated,
        };
        match is_attractor(&w, &result.set)? {
            Verdict::Ok => return Ok(result),
            Verdict::Uncovered { start, len } if retired == 0 => {
                return Err(Error::ConstructionFailed { start, len })
            }
            Verdict::Uncovered { .. } => c0 += 1,
        }
    }
}

/// Base points, the kept levels after perturbation, and any reinstated
/// points; also returns how many were reinstated.
fn assemble(
    w: &Word,
    base: &[usize],
    levels: &[(usize, Vec<usize>)],
    retired: usize,
) -> Result<(Vec<usize>, usize)> {
    let n = w.len();
    let mut points: Vec<usize> = base.to_vec();
    if retired == 0 {
        for (_, level) in levels {
            points.extend(level);
        }
        return Ok((points, 0));
    }
    // Lengths the retired levels served, above what the base covers.
    let short_max = 6 * levels[retired - 1].0;
    let short = constraints_for_lengths(w, &LengthRange::interval(3, short_max.min(n)))?;
    let mut unhit: Vec<bool> = short
        .iter()
        .map(|c| !base.iter().any(|&p| c.covered.contains(p)))
        .collect();
    let gain = |q: usize, unhit: &[bool]| {
        short
            .iter()
            .zip(unhit)
            .filter(|(c, &u)| u && c.covered.contains(q))
            .count()
    };
    let mark = |q: usize, unhit: &mut Vec<bool>| {
        for (c, u) in short.iter().zip(unhit.iter_mut()) {
            if c.covered.contains(q) {
                *u = false;
            }
        }
    };
    // Widest windows first. Points stay distinct so that each level
    // contributes its full count whatever n is.
    let mut taken = vec![false; n];
    for &p in base {
        taken[p] = true;
    }
    for (s, level) in levels[retired..].iter().rev() {
        let slack = s / 2;
        for &p in level {
            let lo = p.saturating_sub(slack);
            let hi = (p + slack).min(n - 1);
            let mut order: Vec<usize> = (lo..=hi).filter(|&q| !taken[q]).collect();
            order.sort_by_key(|&q| (q.abs_diff(p), q));
            if order.is_empty() {
                // The whole window is occupied; the nearest free position
                // keeps the count.
                order.extend(
                    (0..n)
                        .filter(|&q| !taken[q])
                        .min_by_key(|&q| (q.abs_diff(p), q)),
                );
            }
            let Some(&nearest) = order.first() else {
                continue;
            };
            let mut best = (0, nearest);
            if unhit.iter().any(|&u| u) {
                for q in order {
                    let g = gain(q, &unhit);
                    if g > best.0 {
                        best = (g, q);
                    }
                }
            }
            mark(best.1, &mut unhit);
            taken[best.1] = true;
            points.push(best.1);
        }
    }
    let mut reinstated = 0;
    let spare: Vec<usize> = levels[..retired]
        .iter()
        .flat_map(|(_, l)| l.iter().copied())
        .collect();
    while unhit.iter().any(|&u| u) {
        let (g, q) = spare
            .iter()
            .map(|&q| (gain(q, &unhit), std::cmp::Reverse(q)))
            .max()
            .map(|(g, q)| (g, q.0))
            .expect("retired levels exist");
        if g == 0 {
            break;
        }
        mark(q, &mut unhit);
        points.push(q);
        reinstated += 1;
    }
    Ok((points, reinstated))
}

/// A factor starting at `index` that occurs only once in the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonrecurrentWitness {
    pub index: usize,
    pub len: usize,
}

/// Indices `i < W/4` starting a factor of length at most `W/16` with no
/// second occurrence in the window, each with its shortest such factor.
pub fn nonrecurrent_positions(ws: &WindowedSequence) -> Vec<NonrecurrentWitness> {
    nonrecurrent_positions_with(ws, (ws.len() / 16).max(1))
}

/// As [`nonrecurrent_positions`] with an explicit cap on witness length.
pub fn nonrecurrent_positions_with(
    ws: &WindowedSequence,
    max_len: usize,
) -> Vec<NonrecurrentWitness> {
    let text = ws.window.symbols();
    let limit = ws.len() / 4;
    let mut found: Vec<Option<usize>> = vec![None; limit];
    let mut labels = FactorLabels::new(text);
    loop {
        let unique = labels.unique();
        for (i, slot) in found.iter_mut().enumerate() {
            if slot.is_none() && unique.get(i).copied().unwrap_or(false) {
                *slot = Some(labels.len);
            }
        }
        if labels.len >= max_len || !labels.extend() {
            break;
        }
    }
    found
        .into_iter()
        .enumerate()
        .filter_map(|(index, len)| len.map(|len| NonrecurrentWitness { index, len }))
        .collect()
}

/// Largest family of witnesses with pairwise disjoint occurrence intervals,
/// by earliest end.
pub fn disjoint_witnesses(witnesses: &[NonrecurrentWitness]) -> Vec<NonrecurrentWitness> {
    let mut sorted = witnesses.to_vec();
    sorted.sort_by_key(|w| (w.index + w.len, w.index));
    let mut chosen: Vec<NonrecurrentWitness> = Vec::new();
    for w in sorted {
        if chosen.last().is_none_or(|c| c.index + c.len <= w.index) {
            chosen.push(w);
        }
    }
    chosen
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Growth {
    Constant,
    Logarithmic,
    Inconclusive,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Growth::Constant => "constant",
            Growth::Logarithmic => "logarithmic",
            Growth::Inconclusive => "inconclusive",
        })
    }
}

/// Smallest verified attractor found at one sample length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthPoint {
    pub n: usize,
    pub size: usize,
    /// Which construction produced it: `exact`, `greedy`, `dyadic` or
    /// `recurrent`.
    pub source: &'static str,
    /// The size is the proven minimum.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub class: Growth,
    pub points: Vec<GrowthPoint>,
    /// Sum of squared residuals of the best constant fit.
    pub constant_residual: f64,
    /// Sum of squared residuals of the best `c·log₂ n` fit.
    pub log_residual: f64,
    pub nonrecurrent: Vec<NonrecurrentWitness>,
    pub disjoint: Vec<NonrecurrentWitness>,
}

/// Per-point solver budget used by [`classify_growth`].
pub const CLASSIFY_BUDGET: Duration = Duration::from_secs(10);

/// Heuristic: fits attractor sizes at the sample lengths against a constant
/// and a `c·log₂ n` model and looks for non-recurrent factors. Never a proof.
///
/// Logarithmic when the log fit's residual is below half the constant fit's
/// and at least three disjoint non-recurrent witnesses exist; constant when
/// the sizes at the three largest samples agree and no witness exists.
pub fn classify_growth(spec: &SequenceSpec, n_points: &[usize]) -> Result<GrowthReport> {
    if n_points.len() < 5 {
        return Err(Error::IndexTooSmall {
            what: "number of sample points",
            index: n_points.len(),
            min: 5,
        });
    }
    if n_points[0] == 0 || n_points.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::UnsortedPositions);
    }
    let n_max = *n_points.last().expect("nonempty");
    let ws = WindowedSequence::new(spec.clone(), n_max)?;
    let l_max = (n_max / 8).clamp(1, 64);
    let a_hat = appearance_constant_estimate(&ws, l_max)?.constant;
    let r_hat = recurrence_constant_estimate(&ws, l_max)?.constant;
    let mut greedy = GreedyState::new(spec.clone());
    greedy.advance_to(n_max)?;
    let opts = SolverOptions {
        lexicographic: false,
        ..SolverOptions::with_timeout(CLASSIFY_BUDGET)
    };
    let mut points = Vec::new();
    for &n in n_points {
        let w = ws.prefix(n)?;
        let mut best = GrowthPoint {
            n,
            size: greedy.positions().iter().take_while(|&&p| p < n).count(),
            source: "greedy",
            exact: false,
        };
        let mut offer = |size: usize, source, exact| {
            if size < best.size || (exact && size == best.size) {
                best = GrowthPoint {
                    n,
                    size,
                    source,
                    exact,
                };
            }
        };
        if let Ok(set) = dyadic_attractor(&ws, n, a_hat) {
            offer(set.len(), "dyadic", false);
        }
        if let Some(r) = r_hat {
            if let Ok(rec) = recurrent_attractor(&ws, n, a_hat, r) {
                offer(rec.set.len(), "recurrent", false);
            }
        }
        let sol = solve(&w, &opts)?;
        offer(
            sol.size,
            if sol.proven { "exact" } else { "solver" },
            sol.proven,
        );
        points.push(best);
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.n as f64).log2()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.size as f64).collect();
    let mean = ys.iter().sum::<f64>() / ys.len() as f64;
    let constant_residual = ys.iter().map(|y| (y - mean).powi(2)).sum();
    let c =
        xs.iter().zip(&ys).map(|(x, y)| x * y).sum::<f64>() / xs.iter().map(|x| x * x).sum::<f64>();
    let log_residual = xs.iter().zip(&ys).map(|(x, y)| (y - c * x).powi(2)).sum();
    let nonrecurrent = nonrecurrent_positions(&ws);
    let disjoint = disjoint_witnesses(&nonrecurrent);
    let top = &ys[ys.len() - 3..];
    let class = if log_residual < 0.5 * constant_residual && disjoint.len() >= 3 {
        Growth::Logarithmic
    } else if top.iter().all(|&y| y == top[0]) && nonrecurrent.is_empty() {
        Growth::Constant
    } else {
        Growth::Inconclusive
    };
    Ok(GrowthReport {
        class,
        points,
        constant_residual,
        log_residual,
        nonrecurrent,
        disjoint,
    })
}
