//! Scans for parameters where an eigenvalue below the top component vanishes.
//!
//! Usage: `cargo run --release --example zero_tuple_scan [N_MAX]` (default 28)

use garnir::{scan_zero_tuples, ExchangeRange};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(28);

    let strict = scan_zero_tuples(n_max, ExchangeRange::BelowM);
    println!(
        "{} tuples with l < m and n <= {n_max}:",
        strict.tuples.len()
    );
    for t in strict.tuples.iter().take(10) {
        println!("  n={:<3} m={:<3} l={:<3} i={}", t.n, t.m, t.l, t.i);
    }
    if strict.tuples.len() > 10 {
        println!("  ...");
    }

    for range in [ExchangeRange::BelowM, ExchangeRange::UpToM] {
        let report = scan_zero_tuples(n_max, range);
        println!("{range}: {}", report.summary());
    }
    Ok(())
}
