//! Recomputes every eigenvalue with `n + m <= 9` by projecting onto a
//! single irreducible summand and reading off one coefficient.

use garnir::verify::Bounds;
use garnir::{omega, projected_eigenvalue_oracle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bounds = Bounds::default();
    let mut checked = 0;
    for total in 2..=bounds.oracle {
        for m in 1..=total / 2 {
            let n = total - m;
            for l in 1..=m {
                for i in 0..=m {
                    let projected = projected_eigenvalue_oracle(n, m, l, i, &bounds)?;
                    let formula = omega(n, m, l, i)?;
                    assert_eq!(projected, formula, "n={n} m={m} l={l} i={i}");
                    checked += 1;
                }
            }
        }
    }
    println!("{checked} eigenvalues agree with the projection");
    println!(
        "e.g. ω(2,1) on M^(5,4)' = {}",
        projected_eigenvalue_oracle(5, 4, 2, 1, &bounds)?
    );
    Ok(())
}
