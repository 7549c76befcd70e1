//! Closed-form attractors of the builtin words, each checked by the verifier.

use string_attractors::families::{check, family, tm_gamma_closed, vtm_gamma_closed};
use string_attractors::Builtin;

fn main() -> string_attractors::Result<()> {
    for b in Builtin::ALL {
        println!("{}:", b.name());
        for n in [17, 26, 100, 1000, 3072] {
            let r = family(b, n)?;
            match (r.case, check(&r)?) {
                (Some(case), Some(v)) => println!("  n={n:<5} {case:<16} {{{}}} {v}", r.positions),
                _ => println!("  n={n:<5} outside every case"),
            }
        }
    }
    let tm: Vec<usize> = (1..=40).map(tm_gamma_closed).collect::<Result<_, _>>()?;
    let vtm: Vec<usize> = (1..=40).map(vtm_gamma_closed).collect::<Result<_, _>>()?;
    println!("tm gamma 1..40:  {tm:?}");
    println!("vtm gamma 1..40: {vtm:?}");
    Ok(())
}
