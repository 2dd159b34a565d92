//! Compares eigenvalue nonvanishing with the alternating-sum conditions.

use garnir::eigen::{alternating_zero_indices, condition_equivalence_report};
use garnir::OmegaTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = condition_equivalence_report(50);
    println!(
        "{} triples with n <= 50, {} disagreements",
        report.checked,
        report.mismatches.len()
    );

    let (n, m, l) = (5, 4, 2);
    let table = OmegaTable::new(n, m)?;
    println!(
        "(n,m,l) = ({n},{m},{l}): ω vanishes at i = {:?}, the sum vanishes at j = {:?}",
        table.zeros_below_m(l),
        alternating_zero_indices(n, m, l)?
    );
    Ok(())
}
