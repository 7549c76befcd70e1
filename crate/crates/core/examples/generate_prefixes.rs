//! Prefixes of the builtin words, a user morphism, and the same words read
//! through their automata.

use string_attractors::seqgen::{representation, trib_number, Builtin, Morphism, NumerationSystem};
use string_attractors::SequenceSpec;

fn main() -> string_attractors::Result<()> {
    for b in Builtin::ALL {
        let spec = SequenceSpec::from(b);
        println!("{:>5}  {}", b.name(), spec.prefix(40)?);
    }

    // Fibonacci word as a user-supplied morphism.
    let fib = SequenceSpec::Morphic(Morphism::parse("morphism:0->01,1->0;seed=0")?);
    println!("{:>5}  {}", "fib", fib.prefix(40)?);

    // The automaton for each builtin agrees with the morphic prefix.
    for b in Builtin::ALL {
        let (dfao, ns) = b.dfao();
        let word = SequenceSpec::from(b).prefix(512)?;
        let agree = (0..512).all(|i| dfao.eval(ns, i as u64).ok() == Some(word[i]));
        println!("{:>5}  automaton agrees on 512 symbols: {agree}", b.name());
    }

    println!();
    println!(
        "Tribonacci numbers: {:?}",
        (0..12).map(trib_number).collect::<Result<Vec<_>, _>>()?
    );
    for n in [10u64, 23, 44] {
        let digits: String = representation(NumerationSystem::Tribonacci, n)
            .iter()
            .map(|d| char::from(b'0' + d))
            .collect();
        println!("{n} in Tribonacci numeration: {digits}");
    }
    Ok(())
}
