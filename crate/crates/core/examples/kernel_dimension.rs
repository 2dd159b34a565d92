//! Exact kernel dimensions of `η_ℓ` against the eigenvalue prediction, and
//! the minimal-polynomial check on the smaller shapes.
//!
//! Usage: `cargo run --release --example kernel_dimension [MAX_N_PLUS_M]` (default 10)

use garnir::verify::{annihilator_check, kernel_dimension_report, Bounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(10);
    let bounds = Bounds::uniform(max);
    for total in 2..=max {
        for m in 1..=total / 2 {
            let n = total - m;
            for l in 1..=m {
                let k = kernel_dimension_report(n, m, l, &bounds)?;
                let annihilated = annihilator_check(n, m, l, &bounds)?;
                println!(
                    "n={n:<2} m={m:<2} l={l:<2} ker={:<5} predicted={:<5} zeros at {:?}{}",
                    k.kernel_dim,
                    k.predicted_dim,
                    k.zero_components,
                    if k.holds() && annihilated {
                        ""
                    } else {
                        "  MISMATCH"
                    }
                );
            }
        }
    }
    Ok(())
}
