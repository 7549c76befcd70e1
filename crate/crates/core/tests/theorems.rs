//! Exact minimum attractor sizes of the builtin words against their reference
//! values and closed forms.

use string_attractors::families::{tm_gamma_closed, vtm_gamma_closed};
use string_attractors::solver::{gamma_table, SolverOptions, TableFields};
use string_attractors::{Builtin, SequenceSpec};

fn gammas(b: Builtin, n_max: usize) -> Vec<usize> {
    let fields = TableFields {
        span: false,
        delta: false,
        greedy: false,
    };
    gamma_table(
        &SequenceSpec::from(b),
        n_max,
        fields,
        &SolverOptions::unlimited(),
        0,
    )
    .unwrap()
    .into_iter()
    .map(|r| {
        assert!(r.proven);
        r.gamma
    })
    .collect()
}

#[test]
fn thue_morse_reference_table() {
    let expected = [
        1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4,
        4, 4,
    ];
    assert_eq!(gammas(Builtin::ThueMorse, 32), expected);
}

#[test]
fn thue_morse_closed_form() {
    let g = gammas(Builtin::ThueMorse, 59);
    for (i, &v) in g.iter().enumerate() {
        assert_eq!(v, tm_gamma_closed(i + 1).unwrap(), "n = {}", i + 1);
    }
}

#[test]
fn period_doubling_is_two() {
    let g = gammas(Builtin::PeriodDoubling, 256);
    assert_eq!(g[0], 1);
    assert!(g[1..].iter().all(|&v| v == 2));
}

#[test]
fn tribonacci_is_three() {
    let g = gammas(Builtin::Tribonacci, 200);
    assert_eq!(&g[..3], &[1, 2, 2]);
    assert!(g[3..].iter().all(|&v| v == 3));
}

#[test]
fn vtm_closed_form() {
    let g = gammas(Builtin::Vtm, 100);
    for (i, &v) in g.iter().enumerate() {
        assert_eq!(v, vtm_gamma_closed(i + 1).unwrap(), "n = {}", i + 1);
    }
}
