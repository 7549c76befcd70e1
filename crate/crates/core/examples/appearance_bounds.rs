//! Appearance and recurrence constants on a window, and the attractors built
//! from them.

use string_attractors::recurrence::*;
use string_attractors::{Builtin, SequenceSpec};

fn main() -> string_attractors::Result<()> {
    for b in Builtin::ALL {
        let ws = WindowedSequence::new(SequenceSpec::from(b), 4096)?;
        let a = appearance_constant_estimate(&ws, 64)?;
        let r = recurrence_constant_estimate(&ws, 64)?;
        println!(
            "{}: appearance {} (stable {}), recurrence {} (stable {})",
            b.name(),
            format_ratio(a.constant),
            a.stable,
            r.constant.map_or("unbounded".into(), format_ratio),
            r.stable,
        );
        let stride = stride_attractor(&ws, 1024, 8, a.constant)?;
        println!("  stride 8 at n=1024: {} points", stride.len());
        for n in [256, 1024, 4096] {
            let dyadic = dyadic_attractor(&ws, n, a.constant)?;
            let recurrent = match r.constant {
                Some(rc) => {
                    let x = recurrent_attractor(&ws, n, a.constant, rc)?;
                    format!(
                        "{} (levels kept {}, c0 {})",
                        x.set.len(),
                        x.kept_levels,
                        x.c0
                    )
                }
                None => "-".into(),
            };
            println!(
                "  n={n:<5} dyadic {:<4} recurrent {recurrent}",
                dyadic.len()
            );
        }
        let witnesses = nonrecurrent_positions(&ws);
        if !witnesses.is_empty() {
            let disjoint = disjoint_witnesses(&witnesses);
            println!(
                "  {} non-recurrent positions, disjoint witnesses {:?}",
                witnesses.len(),
                disjoint
            );
        }
    }
    Ok(())
}
