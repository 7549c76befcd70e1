//! String attractors of prefixes of automatic and morphic words.
//!
//! The crate generates prefixes of infinite words ([`seqgen`]), verifies
//! attractors in linear time ([`attractor`]), computes minimum attractors
//! exactly ([`solver`]), builds greedy attractors ([`greedy`]), evaluates the
//! closed-form attractor families of several classical words ([`families`]),
//! and estimates appearance and recurrence constants together with the
//! constructions that depend on them ([`recurrence`]).

pub mod attractor;
pub mod error;
pub mod families;
pub mod greedy;
pub mod output;
pub mod recurrence;
pub mod seqgen;
pub mod solver;
pub mod word;

mod sam;

pub use attractor::{
    constraints, constraints_for_lengths, delta, factor_count, factor_counts, is_attractor,
    is_attractor_for_lengths, AttractorSet, FactorConstraint, LengthRange, Verdict,
};
pub use error::{Error, Result};
pub use seqgen::{Builtin, SequenceSpec};
pub use word::Word;
