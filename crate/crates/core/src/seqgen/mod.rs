//! Prefixes of automatic and morphic infinite words, and the numeration
//! systems their automata read.

mod dfao;
mod morphism;
mod numeration;
mod spec;

pub use dfao::Dfao;
pub use morphism::Morphism;
pub use numeration::{trib_number, trib_w, NumerationSystem};
pub use spec::{Builtin, SequenceSpec, DEFAULT_BUDGET};

use crate::error::Result;
use crate::word::Word;

pub fn prefix(spec: &SequenceSpec, n: usize) -> Result<Word> {
    spec.prefix(n)
}

pub fn dfao_eval(dfao: &Dfao, ns: NumerationSystem, n: u64) -> Result<u8> {
    dfao.eval(ns, n)
}

pub fn representation(ns: NumerationSystem, n: u64) -> Vec<u8> {
    ns.representation(n)
}
