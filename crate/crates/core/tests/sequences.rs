mod common;

use common::*;
use string_attractors::seqgen::{representation, trib_number, Builtin, Morphism, NumerationSystem};
use string_attractors::SequenceSpec;

fn prefix(b: Builtin, n: usize) -> Vec<u8> {
    SequenceSpec::from(b).prefix(n).unwrap().symbols().to_vec()
}

#[test]
fn builtins_match_independent_definitions() {
    let n = 4096;
    assert_eq!(prefix(Builtin::ThueMorse, n), thue_morse(n));
    assert_eq!(prefix(Builtin::PeriodDoubling, n), period_doubling(n));
    assert_eq!(prefix(Builtin::PowersOfTwo, n), powers_of_two(n));
    assert_eq!(prefix(Builtin::Tribonacci, n), tribonacci(n));
    assert_eq!(prefix(Builtin::Vtm, n), vtm(n));
}

#[test]
fn automata_agree_with_morphisms() {
    for b in Builtin::ALL {
        let (dfao, ns) = b.dfao();
        let w = prefix(b, 4096);
        for (i, &c) in w.iter().enumerate() {
            assert_eq!(dfao.eval(ns, i as u64).unwrap(), c, "{} at {i}", b.name());
        }
    }
}

#[test]
fn known_prefixes() {
    let s = |b, n| SequenceSpec::from(b).prefix(n).unwrap().to_string();
    assert_eq!(s(Builtin::PeriodDoubling, 12), "101110101011");
    assert_eq!(s(Builtin::PowersOfTwo, 8), "11010001");
    assert_eq!(s(Builtin::Tribonacci, 7), "0102010");
}

#[test]
fn tribonacci_numbers_and_greedy_representations() {
    // T_0 = 0, T_1 = T_2 = 1, then sums of the previous three.
    let mut t = vec![0u64, 1, 1];
    while t.len() < 40 {
        let k = t.len();
        t.push(t[k - 1] + t[k - 2] + t[k - 3]);
    }
    for (i, &v) in t.iter().enumerate() {
        assert_eq!(trib_number(i).unwrap(), v);
    }
    // Representations: no three consecutive 1s and the value is recovered
    // with weights 1, 2, 4, 7, 13, ...
    for n in 0..5000u64 {
        let digits = representation(NumerationSystem::Tribonacci, n);
        assert!(!digits.windows(3).any(|d| d == [1, 1, 1]), "{n}");
        let value: u64 = digits
            .iter()
            .rev()
            .enumerate()
            .map(|(k, &d)| d as u64 * t[k + 2])
            .sum();
        assert_eq!(value, n);
        assert!(n == 0 || digits[0] == 1);
    }
}

#[test]
fn morphism_specs() {
    let m = SequenceSpec::parse("morphism:0->01,1->10;seed=0").unwrap();
    assert_eq!(m.prefix(512).unwrap().symbols(), &thue_morse(512)[..]);
    let coded = Morphism::parse("morphism:0->01,1->10;seed=0;coding=0:1,1:0").unwrap();
    let flipped: Vec<u8> = thue_morse(64).iter().map(|c| 1 - c).collect();
    assert_eq!(coded.fixed_point_prefix(64).symbols(), &flipped[..]);
    for bad in [
        "morphism:0->1,1->0;seed=0",
        "morphism:0->01;seed=2",
        "nope",
        "morphism:0->;seed=0",
    ] {
        assert!(
            SequenceSpec::parse(bad).and_then(|s| s.prefix(8)).is_err(),
            "{bad}"
        );
    }
}
