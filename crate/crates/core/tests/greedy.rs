mod common;

use common::*;
use num_rational::Ratio;
use string_attractors::greedy::{first_violation, greedy_for_word, minimal_novel_at, GreedyState};
use string_attractors::recurrence::{appearance_constant_estimate, WindowedSequence};
use string_attractors::{is_attractor, Builtin, SequenceSpec, Word};

fn run(b: Builtin, n: usize) -> (Vec<u8>, GreedyState) {
    let spec = SequenceSpec::from(b);
    let w = spec.prefix(n).unwrap().symbols().to_vec();
    let mut g = GreedyState::new(spec);
    g.advance_to(n).unwrap();
    (w, g)
}

#[test]
fn greedy_sets_attract_every_prefix() {
    for b in Builtin::ALL {
        let (w, mut g) = run(b, 4096);
        let word = Word::from_symbols(w);
        for n in 1..=4096 {
            let set = g.attractor(n).unwrap();
            assert!(
                is_attractor(&word.prefix(n), &set).unwrap().is_ok(),
                "{} n={n}",
                b.name()
            );
        }
    }
}

#[test]
fn greedy_matches_definition_on_short_prefixes() {
    // Smallest j such that the current set fails on w[0..=j], found by brute force.
    for b in Builtin::ALL {
        let (w, g) = run(b, 40);
        let mut set = Vec::new();
        for j in 0..40 {
            if !naive_is_attractor(&w[..=j], &set) {
                set.push(j);
            }
        }
        let got: Vec<usize> = g.positions().iter().copied().filter(|&p| p < 40).collect();
        assert_eq!(got, set, "{}", b.name());
    }
}

#[test]
fn recorded_steps_are_minimal_novel_factors() {
    for b in Builtin::ALL {
        let (w, g) = run(b, 4096);
        let steps = g.history();
        for (k, s) in steps.iter().enumerate() {
            let (p, l) = (s.factor_start, s.factor_len);
            assert_eq!(p + l - 1, s.index);
            assert!(naive_is_novel(&w, p, l), "{} step {k}", b.name());
            // No proper factor is novel.
            if l <= 64 {
                for q in p..p + l {
                    for m in 1..=p + l - q {
                        if m < l {
                            assert!(!naive_is_novel(&w, q, m), "{} step {k}", b.name());
                        }
                    }
                }
            } else {
                assert!(!naive_is_novel(&w, p + 1, l - 1));
                assert!(!naive_is_novel(&w, p, l - 1));
            }
            if k > 0 {
                assert!(l <= s.index - steps[k - 1].index, "{} step {k}", b.name());
            }
        }
    }
}

#[test]
fn consecutive_elements_grow_geometrically() {
    for b in Builtin::ALL {
        let spec = SequenceSpec::from(b);
        let ws = WindowedSequence::new(spec, 4096).unwrap();
        let a = appearance_constant_estimate(&ws, 64).unwrap().constant * Ratio::new(105, 100);
        let factor = Ratio::from_integer(1) + a.recip();
        let (_, g) = run(b, 4096);
        for p in g.positions().windows(2).filter(|p| p[0] >= 16) {
            assert!(
                Ratio::from_integer(p[1] as u64) >= factor * Ratio::from_integer(p[0] as u64),
                "{} {:?}",
                b.name(),
                p
            );
        }
    }
}

#[test]
fn helpers_agree_with_brute_force() {
    let w = thue_morse(200);
    let word = Word::from_symbols(w.clone());
    for j in 0..200 {
        let l = minimal_novel_at(&word, j).unwrap();
        let expect = (1..=j + 1)
            .find(|&m| naive_is_novel(&w, j + 1 - m, m))
            .unwrap();
        assert_eq!(l, expect, "j={j}");
    }
    let spec = SequenceSpec::from(Builtin::ThueMorse);
    assert_eq!(first_violation(&spec, &[0, 1, 3], 0, 199).unwrap(), Some(6));
    let g = greedy_for_word(&Word::from_text("abracadabra"));
    assert!(naive_is_attractor(b"abracadabra", &g));
}
