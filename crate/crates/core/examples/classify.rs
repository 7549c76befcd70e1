//! Constant versus logarithmic growth of the minimum attractor size.

use string_attractors::recurrence::classify_growth;
use string_attractors::{Builtin, SequenceSpec};

fn main() -> string_attractors::Result<()> {
    let points: Vec<usize> = (6..=12).map(|k| 1 << k).collect();
    for b in Builtin::ALL {
        let report = classify_growth(&SequenceSpec::from(b), &points)?;
        let sizes: Vec<usize> = report.points.iter().map(|p| p.size).collect();
        println!(
            "{:>5}: {:<12} sizes {:?}  residuals {:.3} / {:.3}  disjoint witnesses {}",
            b.name(),
            report.class.to_string(),
            sizes,
            report.constant_residual,
            report.log_residual,
            report.disjoint.len(),
        );
    }
    Ok(())
}
