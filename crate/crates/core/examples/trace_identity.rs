//! Σ_i ω(ℓ,i)·dim S^(2^i 1^(n+m-2i)) = C(m,ℓ)·C(n+m,n), symbolically and
//! against an actual matrix trace.

use garnir::eigen::{spectral_trace, trace_identity_check};
use garnir::{binomial, eta_matrix_closed_form};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut checked = 0;
    for n in 1..=25 {
        for m in 1..=n {
            for l in 1..=m {
                assert!(trace_identity_check(n, m, l)?, "n={n} m={m} l={l}");
                checked += 1;
            }
        }
    }
    println!("symbolic identity holds on {checked} triples");

    let (n, m, l) = (8, 7, 3);
    let h = eta_matrix_closed_form(n, m, l)?;
    println!(
        "(n,m,l) = ({n},{m},{l}): matrix trace {}, spectral sum {}, C(m,l)·C(n+m,n) = {}",
        h.trace(),
        spectral_trace(n, m, l)?,
        binomial(m, l as i64) * binomial(n + m, n as i64)
    );
    Ok(())
}
