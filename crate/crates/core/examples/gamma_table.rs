//! Exact minimum attractors for every prefix of Thue-Morse up to length 32.
//!
//! Pass a sequence name and a maximum length to sweep something else:
//! `cargo run --release --example gamma_table -- pd 64`.

use string_attractors::solver::{gamma_table, SolverOptions, TableFields};
use string_attractors::SequenceSpec;

fn main() -> string_attractors::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = SequenceSpec::parse(&args.next().unwrap_or_else(|| "tm".into()))?;
    let n_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(32);

    let rows = gamma_table(
        &spec,
        n_max,
        TableFields::all(),
        &SolverOptions::default(),
        0,
    )?;
    println!(
        "{:>4} {:>5} {:>7} {:>8} {:>7} {:>7}  witness",
        "n", "gamma", "delta", "greedy", "minspan", "maxspan"
    );
    for r in rows {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:>4} {:>5} {:>7} {:>8} {:>7} {:>7}  {{{}}}{}",
            r.n,
            r.gamma,
            r.delta.map_or("-".into(), |d| d.to_string()),
            opt(r.greedy_size),
            opt(r.minspan),
            opt(r.maxspan),
            r.witness,
            if r.proven { "" } else { "  (budget hit)" },
        );
    }
    Ok(())
}
