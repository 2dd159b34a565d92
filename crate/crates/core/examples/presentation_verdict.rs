//! Exact-rank verdicts for presentations of Specht modules by the
//! symmetrized relations, on every shape with at least three columns and
//! `|λ| <= N`, for every choice of exchange sizes.
//!
//! Usage: `cargo run --release --example presentation_verdict [N]`

use garnir::verify::{lhat_choices, verify_presentation, Bounds};
use garnir::{GarnirError, Partition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(8);
    let bounds = Bounds::uniform(max);
    let (mut agree, mut disagree) = (0, 0);
    for size in 1..=max {
        for lambda in Partition::all(size) {
            if lambda.num_columns() < 3 {
                continue;
            }
            for lhat in lhat_choices(&lambda) {
                let v = match verify_presentation(&lambda, &lhat, &bounds) {
                    Ok(v) => v,
                    Err(GarnirError::SizeBound { .. }) => {
                        println!("{lambda:<16} skipped: tabloid space too large");
                        break;
                    }
                    Err(e) => return Err(e.into()),
                };
                let mark = if v.consistent() {
                    agree += 1;
                    ""
                } else {
                    disagree += 1;
                    "  <-- differs"
                };
                println!(
                    "{lambda:<16} lhat={lhat:?} predicted={} observed={} quotient={} specht={}{mark}",
                    v.predicted, v.observed, v.quotient_dim, v.specht_dim
                );
            }
        }
    }
    println!("{agree} consistent, {disagree} inconsistent");
    Ok(())
}
