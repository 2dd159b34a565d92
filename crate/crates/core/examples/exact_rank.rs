//! Exact ranks by fraction-free elimination and by agreeing modular ranks.

use garnir::eta_matrix_closed_form;
use garnir::verify::{RankConfig, DEFAULT_PRIMES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let small = eta_matrix_closed_form(2, 1, 1)?.to_exact();
    let kernel = small.kernel_basis();
    println!(
        "η_1 on M^(2,1)': rank {}, kernel dimension {}",
        small.rank_fraction_free(),
        kernel.len()
    );

    let big = eta_matrix_closed_form(6, 6, 3)?.to_exact();
    let ranks = big.rank_multi_modular(&DEFAULT_PRIMES);
    println!(
        "η_3 on M^(6,6)' ({}×{}): ranks mod p = {ranks:?}",
        big.rows(),
        big.cols()
    );
    let forced = RankConfig {
        fraction_free_max_entries: usize::MAX,
        ..RankConfig::default()
    };
    let mid = eta_matrix_closed_form(6, 3, 2)?.to_exact();
    println!(
        "η_2 on M^(6,3)': fraction-free {} / modular {}",
        mid.rank_with(&forced),
        mid.rank()
    );
    Ok(())
}
