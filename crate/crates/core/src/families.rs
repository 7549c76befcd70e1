//! Closed-form attractor families and closed-form γ / span values for the
//! built-in sequences.
//!
//! Every family function returns a [`FamilyResult`] describing which case
//! fired. Nothing here is trusted: [`check`] runs the verifier on the
//! matching prefix, and the test suites sweep every case.

use std::fmt;

use crate::attractor::{is_attractor, AttractorSet, Verdict};
use crate::error::{Error, Result};
use crate::seqgen::{trib_number, trib_w, Builtin, SequenceSpec};

/// Which closed-form case produced a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyCase {
    pub family: Builtin,
    /// Case label, e.g. `"a"` or `"first"`.
    pub case: &'static str,
    pub i: u32,
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:i={}", self.family.name(), self.case, self.i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyResult {
    pub n: usize,
    /// `None` when `n` lies outside every closed-form interval.
    pub case: Option<FamilyCase>,
    pub positions: AttractorSet,
    pub claimed_size: usize,
}

impl FamilyResult {
    pub fn applicable(&self) -> bool {
        self.case.is_some()
    }

    fn hit(n: usize, case: FamilyCase, positions: Vec<usize>) -> Result<Self> {
        let positions = AttractorSet::from_unsorted(n, positions)?;
        Ok(FamilyResult {
            n,
            case: Some(case),
            claimed_size: positions.len(),
            positions,
        })
    }

    fn miss(n: usize) -> Self {
        FamilyResult {
            n,
            case: None,
            positions: AttractorSet::empty(n),
            claimed_size: 0,
        }
    }
}

/// Runs the verifier on the prefix the family claims to attract.
/// Inapplicable results are reported as `None`.
pub fn check(result: &FamilyResult) -> Result<Option<Verdict>> {
    let Some(case) = result.case else {
        return Ok(None);
    };
    let w = SequenceSpec::from(case.family).prefix(result.n)?;
    is_attractor(&w, &result.positions).map(Some)
}

fn require(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::IndexTooSmall {
            what,
            index: n,
            min,
        })
    } else {
        Ok(())
    }
}

fn pow2(k: u32) -> usize {
    1usize << k
}

/// The family of a builtin sequence at prefix length `n`.
pub fn family(b: Builtin, n: usize) -> Result<FamilyResult> {
    match b {
        Builtin::ThueMorse => tm_family(n),
        Builtin::PeriodDoubling => pd_family(n),
        Builtin::Vtm => vtm_family(n),
        Builtin::Tribonacci => trib_family(n),
        Builtin::PowersOfTwo => pow2_family(n),
    }
}

/// Which reading of the second period-doubling case to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PdReading {
    /// `{2^i−1, 2^{i+1}−1}` on `3·2^i ≤ n < 2^{i+2}`.
    #[default]
    Corrected,
    /// The interval `3·2^i ≤ n < 2^{i+1}` read literally, which is
    /// empty, so only the first case can fire.
    Literal,
}

/// Size-2 attractor for the period-doubling prefix of length `n ≥ 6`.
pub fn pd_family(n: usize) -> Result<FamilyResult> {
    pd_family_with(n, PdReading::Corrected)
}

pub fn pd_family_with(n: usize, reading: PdReading) -> Result<FamilyResult> {
    require("pd family length", n, 6)?;
    let top = n.ilog2();
    if reading == PdReading::Corrected {
        // 3·2^i ≤ n < 4·2^i forces i = top − 1.
        let i = top - 1;
        if 3 * pow2(i) <= n {
            let case = FamilyCase {
                family: Builtin::PeriodDoubling,
                case: "second",
                i,
            };
            return FamilyResult::hit(n, case, vec![pow2(i) - 1, pow2(i + 1) - 1]);
        }
    }
    // First case: 2^i ≤ n < 3·2^i, largest such i; needs i ≥ 3.
    if top >= 3 {
        let case = FamilyCase {
            family: Builtin::PeriodDoubling,
            case: "first",
            i: top,
        };
        return FamilyResult::hit(n, case, vec![3 * pow2(top - 3) - 1, 3 * pow2(top - 2) - 1]);
    }
    Ok(FamilyResult::miss(n))
}

/// Size-4 attractor for the Thue–Morse prefix of length `n ≥ 12`. Claims are
/// tried in the order a, b, c.
pub fn tm_family(n: usize) -> Result<FamilyResult> {
    require("tm family length", n, 12)?;
    let p = pow2;
    let tm = |case, i| FamilyCase {
        family: Builtin::ThueMorse,
        case,
        i,
    };
    let top = n.ilog2() + 1;
    for i in 2..=top {
        if 13 * p(i) / 4 - 1 <= n && n <= 5 * p(i) {
            let set = vec![p(i) - 1, 3 * p(i - 1) - 1, p(i + 1) - 1, 3 * p(i) - 1];
            return FamilyResult::hit(n, tm("a", i), set);
        }
    }
    for i in 1..=top {
        if 9 * p(i - 1) - 1 <= n && n <= 3 * p(i + 1) {
            let set = vec![3 * p(i - 1) - 1, p(i + 1) - 1, 3 * p(i) - 1, p(i + 2) - 1];
            return FamilyResult::hit(n, tm("b", i), set);
        }
    }
    for i in 1..=top {
        if 3 * p(i + 1) - 1 <= n && n <= 13 * p(i - 1) {
            let set = vec![3 * p(i - 1) - 1, p(i + 1) - 1, p(i + 2) - 1, 5 * p(i) - 1];
            return FamilyResult::hit(n, tm("c", i), set);
        }
    }
    Ok(FamilyResult::miss(n))
}

/// Closed-form γ of the Thue–Morse prefix of length `n`.
pub fn tm_gamma_closed(n: usize) -> Result<usize> {
    require("tm prefix length", n, 1)?;
    Ok(match n {
        1 => 1,
        2..=6 => 2,
        7..=14 | 17..=24 => 3,
        _ => 4,
    })
}

/// Size-3 attractor for the Tribonacci prefix of length `n ≥ 4`:
/// `{T_{i−2}−1, T_{i−1}−1, T_i−1}` for `W_i ≤ n < W_{i+1}`.
pub fn trib_family(n: usize) -> Result<FamilyResult> {
    require("trib family length", n, 4)?;
    let mut i = 4;
    while trib_w(i + 1)? as usize <= n {
        i += 1;
    }
    let t = |k| -> Result<usize> { Ok(trib_number(k)? as usize - 1) };
    let case = FamilyCase {
        family: Builtin::Tribonacci,
        case: "main",
        i: i as u32,
    };
    FamilyResult::hit(n, case, vec![t(i - 2)?, t(i - 1)?, t(i)?])
}

/// Size-4 attractor for the vtm prefix of length `n ≥ 13`. Claims are tried
/// in the order a, b, c.
pub fn vtm_family(n: usize) -> Result<FamilyResult> {
    require("vtm family length", n, 13)?;
    let p = pow2;
    let vtm = |case, i| FamilyCase {
        family: Builtin::Vtm,
        case,
        i,
    };
    let top = n.ilog2() + 1;
    for i in 2..=top {
        if 13 * p(i) / 4 <= n && n < 5 * p(i) {
            let set = vec![p(i) - 1, 3 * p(i - 1) - 1, p(i + 1) - 1, 3 * p(i) - 1];
            return FamilyResult::hit(n, vtm("a", i), set);
        }
    }
    for i in 2..=top {
        if 5 * p(i) <= n && n < 6 * p(i) {
            let set = vec![p(i) - 1, p(i + 1) - 1, 3 * p(i) - 1, 9 * p(i - 1) - 1];
            return FamilyResult::hit(n, vtm("b", i), set);
        }
    }
    for i in 2..=top {
        if 6 * p(i) <= n && n < 13 * p(i - 1) {
            let set = vec![3 * p(i - 1) - 1, p(i + 1) - 1, p(i + 2) - 1, 5 * p(i) - 1];
            return FamilyResult::hit(n, vtm("c", i), set);
        }
    }
    Ok(FamilyResult::miss(n))
}

/// Closed-form γ of the vtm prefix of length `n`.
pub fn vtm_gamma_closed(n: usize) -> Result<usize> {
    require("vtm prefix length", n, 1)?;
    Ok(match n {
        1 => 1,
        2 => 2,
        3..=6 => 3,
        _ => 4,
    })
}

/// Logarithmic-size attractor for the powers-of-two characteristic prefix
/// of length `n ≥ 3`: size `i+2` on `3·4^i ≤ n < 6·4^i`, size `i+3` on
/// `6·4^i ≤ n < 12·4^i`.
pub fn pow2_family(n: usize) -> Result<FamilyResult> {
    require("pow2 family length", n, 3)?;
    let four = |j: u32| 1usize << (2 * j);
    let mut i = 0u32;
    while 3 * four(i + 1) <= n {
        i += 1;
    }
    let case = |case| FamilyCase {
        family: Builtin::PowersOfTwo,
        case,
        i,
    };
    if n < 6 * four(i) {
        let mut set: Vec<usize> = (0..=i).map(|j| 2 * four(j) - 1).collect();
        set.push(3 * four(i) - 1);
        FamilyResult::hit(n, case("a"), set)
    } else {
        let mut set: Vec<usize> = (0..=i + 1).map(|j| four(j) - 1).collect();
        set.push(6 * four(i) - 1);
        FamilyResult::hit(n, case("b"), set)
    }
}

/// Closed-form minimum span over minimum attractors of the period-doubling
/// prefix of length `n`; `None` for lengths outside every closed-form interval.
pub fn pd_minspan_closed(n: usize) -> Result<Option<usize>> {
    require("pd prefix length", n, 1)?;
    Ok(match n {
        1 => Some(0),
        3 | 4 => Some(1),
        _ if n >= 6 => {
            // 3·2^i ≤ n < 3·2^{i+1}
            let i = (n / 3).ilog2();
            Some(pow2(i))
        }
        _ => None,
    })
}

/// Closed-form maximum span over minimum attractors of the period-doubling
/// prefix of length `n`; `None` for lengths outside every closed-form interval.
pub fn pd_maxspan_closed(n: usize) -> Result<Option<usize>> {
    require("pd prefix length", n, 1)?;
    if n == 1 {
        return Ok(Some(0));
    }
    if n <= 3 {
        return Ok(Some(1));
    }
    let top = n.ilog2() + 1;
    for i in 1..=top {
        if 5 * pow2(i - 1) - 1 <= n && n < 6 * pow2(i - 1) - 2 {
            return Ok(Some(pow2(i)));
        }
    }
    for i in 0..=top {
        if 6 * pow2(i) - 1 <= n && n <= 5 * pow2(i + 1) - 2 {
            return Ok(Some(3 * pow2(i)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn positions(r: &FamilyResult) -> &[usize] {
        r.positions.positions()
    }

    #[test]
    fn pd_examples() {
        assert_eq!(positions(&pd_family(26).unwrap()), &[7, 15]);
        assert_eq!(positions(&pd_family(16).unwrap()), &[5, 11]);
        assert_eq!(positions(&pd_family(6).unwrap()), &[1, 3]);
        assert!(!pd_family_with(6, PdReading::Literal).unwrap().applicable());
        assert!(pd_family(5).is_err());
    }

    #[test]
    fn tm_examples() {
        let r = tm_family(20).unwrap();
        assert_eq!(
            (r.case.unwrap().case, positions(&r)),
            ("a", &[3, 5, 7, 11][..])
        );
        assert_eq!(positions(&tm_family(12).unwrap()), &[3, 5, 7, 11]);
        // 17 lies in claim (a) for i = 2, which takes precedence.
        let r = tm_family(17).unwrap();
        assert_eq!((r.case.unwrap().case, r.case.unwrap().i), ("a", 2));
        assert_eq!(tm_gamma_closed(16).unwrap(), 4);
        assert_eq!(tm_gamma_closed(17).unwrap(), 3);
        assert_eq!(tm_gamma_closed(1000).unwrap(), 4);
    }

    #[test]
    fn trib_examples() {
        assert_eq!(positions(&trib_family(4).unwrap()), &[0, 1, 3]);
        assert_eq!(positions(&trib_family(10).unwrap()), &[1, 3, 6]);
        assert_eq!(positions(&trib_family(20).unwrap()), &[3, 6, 12]);
    }

    #[test]
    fn vtm_examples() {
        assert_eq!(positions(&vtm_family(13).unwrap()), &[3, 5, 7, 11]);
        assert_eq!(positions(&vtm_family(20).unwrap()), &[3, 7, 11, 17]);
        assert_eq!(positions(&vtm_family(24).unwrap()), &[5, 7, 15, 19]);
        assert_eq!(
            (1..=8)
                .map(|n| vtm_gamma_closed(n).unwrap())
                .collect::<Vec<_>>(),
            [1, 2, 3, 3, 3, 3, 4, 4]
        );
    }

    #[test]
    fn pow2_examples() {
        assert_eq!(positions(&pow2_family(3).unwrap()), &[1, 2]);
        assert_eq!(positions(&pow2_family(6).unwrap()), &[0, 3, 5]);
        assert_eq!(positions(&pow2_family(48).unwrap()), &[1, 7, 31, 47]);
    }

    #[test]
    fn span_closed_forms() {
        assert_eq!(pd_minspan_closed(1).unwrap(), Some(0));
        assert_eq!(pd_minspan_closed(12).unwrap(), Some(4));
        assert_eq!(pd_minspan_closed(11).unwrap(), Some(2));
        assert_eq!(pd_maxspan_closed(11).unwrap(), Some(6));
        for n in [2, 5] {
            assert_eq!(pd_minspan_closed(n).unwrap(), None);
        }
        for n in [4, 10, 22, 46] {
            assert_eq!(pd_maxspan_closed(n).unwrap(), None);
        }
    }

    #[test]
    fn checked_examples_verify() {
        for r in [
            pd_family(26),
            tm_family(20),
            trib_family(10),
            vtm_family(24),
            pow2_family(48),
        ] {
            assert_eq!(check(&r.unwrap()).unwrap(), Some(Verdict::Ok));
        }
    }
}
