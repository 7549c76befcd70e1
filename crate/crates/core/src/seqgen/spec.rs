use std::fmt;
use std::path::Path;
use std::str::FromStr;

use super::dfao::Dfao;
use super::morphism::Morphism;
use super::numeration::NumerationSystem;
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest prefix `prefix` will materialize unless told otherwise.
pub const DEFAULT_BUDGET: usize = 1 << 28;

/// The named infinite words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Thue-Morse, fixed point of 0 -> 01, 1 -> 10.
    ThueMorse,
    /// Period-doubling, fixed point of 1 -> 10, 0 -> 11.
    PeriodDoubling,
    /// Ternary Thue-Morse variant, fixed point of 2 -> 210, 1 -> 20, 0 -> 1.
    Vtm,
    /// Tribonacci word, fixed point of 0 -> 01, 1 -> 02, 2 -> 0.
    Tribonacci,
    /// Characteristic sequence with `p[n] = 1` iff `n + 1` is a power of two.
    PowersOfTwo,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [
        Builtin::ThueMorse,
        Builtin::PeriodDoubling,
        Builtin::Vtm,
        Builtin::Tribonacci,
        Builtin::PowersOfTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::ThueMorse => "tm",
            Builtin::PeriodDoubling => "pd",
            Builtin::Vtm => "vtm",
            Builtin::Tribonacci => "trib",
            Builtin::PowersOfTwo => "pow2",
        }
    }

    /// The generating morphism, for the words that are pure morphic.
    pub fn morphism(self) -> Option<Morphism> {
        let (images, seed): (Vec<Vec<u8>>, u8) = match self {
            Builtin::ThueMorse => (vec![vec![0, 1], vec![1, 0]], 0),
            Builtin::PeriodDoubling => (vec![vec![1, 1], vec![1, 0]], 1),
            Builtin::Vtm => (vec![vec![1], vec![2, 0], vec![2, 1, 0]], 2),
            Builtin::Tribonacci => (vec![vec![0, 1], vec![0, 2], vec![0]], 0),
            Builtin::PowersOfTwo => return None,
        };
        Some(Morphism::new(images, seed, None).expect("builtin morphism is valid"))
    }

    /// An automaton generating the same word, independent of the morphism.
    pub fn dfao(self) -> (Dfao, NumerationSystem) {
        let base2 = NumerationSystem::Base(2);
        let (digits, transitions, outputs, ns): (usize, Vec<Vec<usize>>, Vec<u8>, _) = match self {
            // parity of the number of ones
            Builtin::ThueMorse => (2, vec![vec![0, 1], vec![1, 0]], vec![0, 1], base2),
            // parity of the number of trailing ones
            Builtin::PeriodDoubling => (2, vec![vec![0, 1], vec![0, 0]], vec![1, 0], base2),
            // states (ones parity, trailing ones parity): 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)
            Builtin::Vtm => (
                2,
                vec![vec![0, 3], vec![0, 2], vec![2, 1], vec![2, 0]],
                vec![2, 1, 0, 1],
                base2,
            ),
            // last Tribonacci digits: ...0, ...01, ...11
            Builtin::Tribonacci => (
                2,
                vec![vec![0, 1], vec![0, 2], vec![0, 2]],
                vec![0, 1, 2],
                NumerationSystem::Tribonacci,
            ),
            // 0*1* accepted; anything else is dead
            Builtin::PowersOfTwo => (
                2,
                vec![vec![0, 1], vec![2, 1], vec![2, 2]],
                vec![1, 1, 0],
                base2,
            ),
        };
        (
            Dfao::new(digits, 0, transitions, outputs).expect("builtin automaton is valid"),
            ns,
        )
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// Description of an infinite word that can emit any prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    Builtin(Builtin),
    Morphic(Morphism),
    Automatic {
        dfao: Dfao,
        numeration: NumerationSystem,
    },
}

impl SequenceSpec {
    /// Accepts a builtin name, `morphism:...`, or `dfao:<path>`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.starts_with("morphism:") {
            Ok(SequenceSpec::Morphic(Morphism::parse(s)?))
        } else if let Some(path) = s.strip_prefix("dfao:") {
            let (dfao, numeration) = Dfao::load(Path::new(path))?;
            Ok(SequenceSpec::Automatic { dfao, numeration })
        } else {
            Ok(SequenceSpec::Builtin(s.parse()?))
        }
    }

    pub fn alphabet_size(&self) -> usize {
        match self {
            SequenceSpec::Builtin(b) => match b {
                Builtin::Vtm | Builtin::Tribonacci => 3,
                _ => 2,
            },
            SequenceSpec::Morphic(m) => m.output_alphabet_size(),
            SequenceSpec::Automatic { dfao, .. } => dfao.alphabet_size(),
        }
    }

    /// The first `n` symbols.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        self.prefix_with_budget(n, DEFAULT_BUDGET)
    }

    pub fn prefix_with_budget(&self, n: usize, budget: usize) -> Result<Word> {
        if n > budget {
            return Err(Error::BudgetExceeded {
                requested: n,
                budget,
            });
        }
        match self {
            SequenceSpec::Builtin(Builtin::PowersOfTwo) => {
                let symbols = (0..n).map(|i| ((i + 1).is_power_of_two()) as u8).collect();
                Word::new(symbols, 2)
            }
            SequenceSpec::Builtin(b) => {
                Ok(b.morphism().expect("morphic builtin").fixed_point_prefix(n))
            }
            SequenceSpec::Morphic(m) => Ok(m.fixed_point_prefix(n)),
            SequenceSpec::Automatic { dfao, numeration } => {
                let symbols = (0..n as u64)
                    .map(|i| dfao.eval(*numeration, i))
                    .collect::<Result<Vec<u8>>>()?;
                Word::new(symbols, dfao.alphabet_size())
            }
        }
    }
}

impl From<Builtin> for SequenceSpec {
    fn from(b: Builtin) -> Self {
        SequenceSpec::Builtin(b)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Builtin(b) => f.write_str(b.name()),
            SequenceSpec::Morphic(m) => write!(f, "morphism(seed={})", m.seed()),
            SequenceSpec::Automatic { numeration, .. } => write!(f, "dfao({numeration:?})"),
        }
    }
}
