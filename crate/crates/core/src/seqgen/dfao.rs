use std::path::Path;

use super::numeration::NumerationSystem;
use crate::error::{Error, Result};

/// Deterministic finite automaton with output. Input is read most significant
/// digit first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfao {
    digits: usize,
    initial: usize,
    transitions: Vec<Vec<usize>>,
    outputs: Vec<u8>,
}

impl Dfao {
    pub fn new(
        digits: usize,
        initial: usize,
        transitions: Vec<Vec<usize>>,
        outputs: Vec<u8>,
    ) -> Result<Self> {
        let bad = |m: String| Error::MalformedDfao(m);
        let states = transitions.len();
        if states == 0 || outputs.len() != states {
            return Err(bad(format!(
                "{states} transition rows but {} outputs",
                outputs.len()
            )));
        }
        if initial >= states {
            return Err(bad(format!("initial state {initial} does not exist")));
        }
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != digits {
                return Err(bad(format!(
                    "state {q} has {} of {digits} transitions",
                    row.len()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= states) {
                return Err(bad(format!("state {q} moves to missing state {t}")));
            }
        }
        Ok(Dfao {
            digits,
            initial,
            transitions,
            outputs,
        })
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn digit_count(&self) -> usize {
        self.digits
    }

    pub fn alphabet_size(&self) -> usize {
        self.outputs
            .iter()
            .map(|&o| o as usize + 1)
            .max()
            .unwrap_or(1)
    }

    /// Output after reading `digits` from the initial state.
    pub fn run(&self, digits: &[u8]) -> Result<u8> {
        let mut q = self.initial;
        for &d in digits {
            if d as usize >= self.digits {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    base: self.digits,
                });
            }
            q = self.transitions[q][d as usize];
        }
        Ok(self.outputs[q])
    }

    /// The `n`-th term of the automatic sequence generated by this automaton
    /// in numeration system `ns`.
    pub fn eval(&self, ns: NumerationSystem, n: u64) -> Result<u8> {
        self.run(&ns.representation(n))
    }

    /// Parses the text format
    ///
    /// ```text
    /// base 2
    /// initial 0
    /// 0 0 : 0->0 1->1
    /// 1 1 : 0->1 1->0
    /// ```
    ///
    /// `base` also accepts `fib` and `trib`. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<(Dfao, NumerationSystem)> {
        let bad = |line: usize, m: &str| Error::MalformedDfao(format!("line {line}: {m}"));
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (ln, base_line) = lines.next().ok_or_else(|| bad(1, "missing `base` line"))?;
        let base = base_line
            .strip_prefix("base")
            .map(str::trim)
            .ok_or_else(|| bad(ln, "expected `base <k>`"))?;
        let ns = match base {
            "fib" => NumerationSystem::Fibonacci,
            "trib" => NumerationSystem::Tribonacci,
            k => {
                let k: u32 = k.parse().map_err(|_| bad(ln, "bad base"))?;
                if k < 2 {
                    return Err(bad(ln, "base must be at least 2"));
                }
                NumerationSystem::Base(k)
            }
        };
        let (ln, init_line) = lines
            .next()
            .ok_or_else(|| bad(ln + 1, "missing `initial` line"))?;
        let initial: usize = init_line
            .strip_prefix("initial")
            .map(str::trim)
            .ok_or_else(|| bad(ln, "expected `initial <q>`"))?
            .parse()
            .map_err(|_| bad(ln, "bad initial state"))?;

        let digits = ns.digit_count();
        let mut rows: Vec<(usize, u8, Vec<usize>)> = Vec::new();
        for (ln, line) in lines {
            let (head, tail) = line.split_once(':').ok_or_else(|| bad(ln, "missing `:`"))?;
            let mut head = head.split_whitespace();
            let q: usize = head
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad(ln, "bad state"))?;
            let out: u8 = head
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad(ln, "bad output"))?;
            let mut row = vec![None; digits];
            for tr in tail.split_whitespace() {
                let (d, t) = tr
                    .split_once("->")
                    .ok_or_else(|| bad(ln, "bad transition"))?;
                let d: usize = d.parse().map_err(|_| bad(ln, "bad digit"))?;
                let t: usize = t.parse().map_err(|_| bad(ln, "bad target"))?;
                *row.get_mut(d)
                    .ok_or_else(|| bad(ln, "digit outside base"))? = Some(t);
            }
            let row = row
                .into_iter()
                .collect::<Option<Vec<usize>>>()
                .ok_or_else(|| bad(ln, "transition function is not total"))?;
            rows.push((q, out, row));
        }
        rows.sort_by_key(|r| r.0);
        if rows.iter().enumerate().any(|(i, r)| r.0 != i) {
            return Err(Error::MalformedDfao(
                "states must be numbered 0..k-1 exactly once".into(),
            ));
        }
        let outputs = rows.iter().map(|r| r.1).collect();
        let transitions = rows.into_iter().map(|r| r.2).collect();
        Ok((Dfao::new(digits, initial, transitions, outputs)?, ns))
    }

    pub fn load(path: &Path) -> Result<(Dfao, NumerationSystem)> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Dfao::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TM: &str = "base 2\ninitial 0\n0 0 : 0->0 1->1\n1 1 : 0->1 1->0\n";

    #[test]
    fn parses_and_runs() {
        let (d, ns) = Dfao::parse(TM).unwrap();
        assert_eq!(ns, NumerationSystem::Base(2));
        let t: Vec<u8> = (0..8).map(|n| d.eval(ns, n).unwrap()).collect();
        assert_eq!(t, vec![0, 1, 1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn digit_outside_base() {
        let (d, _) = Dfao::parse(TM).unwrap();
        assert_eq!(
            d.run(&[1, 2]),
            Err(Error::DigitOutOfRange { digit: 2, base: 2 })
        );
    }

    #[test]
    fn rejects_partial_transition_table() {
        let text = "base 2\ninitial 0\n0 0 : 0->0\n";
        assert!(Dfao::parse(text).is_err());
        let text = "base 2\ninitial 3\n0 0 : 0->0 1->0\n";
        assert!(Dfao::parse(text).is_err());
    }
}
