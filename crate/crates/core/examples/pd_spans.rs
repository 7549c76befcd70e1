//! Smallest and largest span of a minimum attractor of period-doubling
//! prefixes, next to the closed forms. Lengths where no closed form applies
//! show `-`.

use string_attractors::families::{pd_maxspan_closed, pd_minspan_closed};
use string_attractors::solver::span_extremes;
use string_attractors::{Builtin, SequenceSpec};

fn main() -> string_attractors::Result<()> {
    let w = SequenceSpec::from(Builtin::PeriodDoubling).prefix(64)?;
    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    println!(
        "{:>3} {:>7} {:>6} {:>7} {:>6}  witnesses",
        "n", "minspan", "closed", "maxspan", "closed"
    );
    for n in 1..=64 {
        let s = span_extremes(&w.prefix(n))?;
        println!(
            "{n:>3} {:>7} {:>6} {:>7} {:>6}  {{{}}} {{{}}}",
            s.minspan,
            show(pd_minspan_closed(n)?),
            s.maxspan,
            show(pd_maxspan_closed(n)?),
            s.min_witness,
            s.max_witness,
        );
    }
    Ok(())
}
