//! Greedy attractors grow geometrically on words with linear appearance.

use string_attractors::greedy::GreedyState;
use string_attractors::recurrence::{appearance_constant_estimate, format_ratio, WindowedSequence};
use string_attractors::{is_attractor, Builtin, SequenceSpec};

fn main() -> string_attractors::Result<()> {
    let n = 4096;
    for b in Builtin::ALL {
        let spec = SequenceSpec::from(b);
        let mut g = GreedyState::new(spec.clone());
        let set = g.attractor(n)?;
        let ok = is_attractor(&spec.prefix(n)?, &set)?;
        let a = appearance_constant_estimate(&WindowedSequence::new(spec, n)?, 64)?.constant;
        let worst = set
            .windows(2)
            .filter(|p| p[0] >= 16)
            .map(|p| p[1] as f64 / p[0] as f64)
            .fold(f64::INFINITY, f64::min);
        println!(
            "{:>5}: {} points ({ok}), appearance ~ {}, smallest ratio {worst:.3}",
            b.name(),
            set.len(),
            format_ratio(a)
        );
    }

    println!("\ntm steps up to 200:");
    let mut g = GreedyState::new(SequenceSpec::from(Builtin::ThueMorse));
    g.advance_to(200)?;
    for s in g.history() {
        println!(
            "  add {:>3}: factor [{}, {})",
            s.index,
            s.factor_start,
            s.factor_start + s.factor_len
        );
    }
    Ok(())
}
