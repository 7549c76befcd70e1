mod common;

use common::*;
use rayon::prelude::*;
use string_attractors::families::{pd_maxspan_closed, pd_minspan_closed};
use string_attractors::solver::span_extremes;
use string_attractors::{Builtin, SequenceSpec, Word};

/// (minspan, maxspan) over all minimum attractors, by enumeration.
fn naive_spans(w: &[u8]) -> (usize, usize) {
    let n = w.len();
    let g = naive_gamma(w);
    let spans: Vec<usize> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == g)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| naive_is_attractor(w, s))
        .map(|s| s[s.len() - 1] - s[0])
        .collect();
    (*spans.iter().min().unwrap(), *spans.iter().max().unwrap())
}

#[test]
fn spans_match_enumeration() {
    let pd = period_doubling(16);
    let tm = thue_morse(14);
    for n in 1..=16 {
        let s = span_extremes(&Word::from_symbols(pd[..n].to_vec())).unwrap();
        assert_eq!((s.minspan, s.maxspan), naive_spans(&pd[..n]), "pd n={n}");
    }
    for n in 1..=14 {
        let s = span_extremes(&Word::from_symbols(tm[..n].to_vec())).unwrap();
        assert_eq!((s.minspan, s.maxspan), naive_spans(&tm[..n]), "tm n={n}");
        assert!(naive_is_attractor(&tm[..n], &s.min_witness));
        assert!(naive_is_attractor(&tm[..n], &s.max_witness));
    }
}

#[test]
fn period_doubling_spans_follow_closed_forms() {
    let w = SequenceSpec::from(Builtin::PeriodDoubling)
        .prefix(512)
        .unwrap();
    let rows: Vec<_> = (1..=512usize)
        .into_par_iter()
        .map(|n| (n, span_extremes(&w.prefix(n)).unwrap()))
        .collect();
    let mut min_gaps = Vec::new();
    let mut max_gaps = Vec::new();
    for (n, s) in rows {
        match pd_minspan_closed(n).unwrap() {
            Some(v) => assert_eq!(s.minspan, v, "minspan n={n}"),
            None => min_gaps.push((n, s.minspan)),
        }
        match pd_maxspan_closed(n).unwrap() {
            Some(v) => assert_eq!(s.maxspan, v, "maxspan n={n}"),
            None => max_gaps.push((n, s.maxspan)),
        }
    }
    // Lengths outside every closed-form interval, with the searched values.
    assert_eq!(min_gaps, vec![(2, 1), (5, 1)]);
    assert_eq!(
        max_gaps,
        vec![
            (4, 2),
            (10, 4),
            (22, 8),
            (46, 16),
            (94, 32),
            (190, 64),
            (382, 128)
        ]
    );
}
