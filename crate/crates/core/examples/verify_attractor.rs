//! Checking candidate attractors and counting factors.

use string_attractors::{
    delta, factor_count, is_attractor, is_attractor_for_lengths, Builtin, LengthRange,
    SequenceSpec, Word,
};

fn main() -> string_attractors::Result<()> {
    let pd = SequenceSpec::from(Builtin::PeriodDoubling).prefix(26)?;
    println!("pd[0..26) = {pd}");
    for set in [vec![7, 15], vec![7], vec![3, 15]] {
        println!("  {:?}: {}", set, is_attractor(&pd, &set)?);
    }

    // A set can attract one band of lengths without attracting the rest.
    let tm = SequenceSpec::from(Builtin::ThueMorse).prefix(64)?;
    let stride4: Vec<usize> = (3..64).step_by(4).take(7).collect();
    println!("tm[0..64), {:?}", stride4);
    println!(
        "  lengths 4..8: {}",
        is_attractor_for_lengths(&tm, &stride4, &LengthRange::interval(4, 8))?
    );
    println!("  all lengths:  {}", is_attractor(&tm, &stride4)?);

    let tm60 = SequenceSpec::from(Builtin::ThueMorse).prefix(60)?;
    println!(
        "tm[0..60): {} factors of length 13, delta = {}",
        factor_count(&tm60, 13)?,
        delta(&tm60)?
    );

    let w = Word::from_text("alfalfa");
    println!("alfalfa, {{0,1,2}}: {}", is_attractor(&w, &[0, 1, 2])?);
    Ok(())
}
