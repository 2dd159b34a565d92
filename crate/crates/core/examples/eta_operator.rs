//! Builds the matrix of `η_ℓ` twice, from the closed-form entry rule and by
//! exchanging entries tabloid by tabloid, and shows one image vector.

use garnir::{
    eta_apply, eta_matrix_by_exchange, eta_matrix_closed_form, ColumnTabloid, TabloidVector,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, m, l) = (4, 3, 2);
    let closed = eta_matrix_closed_form(n, m, l)?;
    let exchanged = eta_matrix_by_exchange(n, m, l)?;
    println!(
        "η_{l} on M^({n},{m})': dim {}, {} nonzeros, trace {}",
        closed.dim(),
        closed.nnz(),
        closed.trace()
    );
    println!(
        "closed form == exchange definition: {}",
        closed == exchanged
    );

    let t = ColumnTabloid::new(vec![vec![1, 2, 3, 4], vec![5, 6, 7]])?;
    let image = eta_apply(&TabloidVector::basis_vector(t.clone()), l)?;
    println!("η_{l}[{t}] has {} terms:", image.support_len());
    for (s, x) in image.iter().take(8) {
        println!("  {x:>3} · [{s}]");
    }

    let small = eta_matrix_closed_form(2, 1, 1)?;
    println!("η_1 on M^(2,1)' as triplets:\n{}", small.to_triplet_text());
    Ok(())
}
