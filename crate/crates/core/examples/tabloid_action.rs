//! Column tabloids, their signs, and the symmetric-group action that `η_ℓ`
//! commutes with.

use garnir::tabloid::permute;
use garnir::{eta_apply, Permutation, Tableau, TabloidBasis, TabloidVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Tableau::new(vec![vec![3, 1, 4], vec![5, 2]])?;
    let (canon, sign) = t.canonicalize();
    println!(
        "[{}] = {sign} · [{canon}]",
        t.columns()
            .iter()
            .map(|c| format!("{c:?}"))
            .collect::<Vec<_>>()
            .join(" ")
    );

    let basis = TabloidBasis::two_column(3, 2)?;
    println!(
        "M^(3,2)' has {} basis tabloids; the first three:",
        basis.len()
    );
    for t in basis.iter().take(3) {
        println!("  [{t}]");
    }

    let sigma = Permutation::new(vec![2, 3, 4, 5, 1])?;
    let v = TabloidVector::from_tableau(&t);
    let lhs = eta_apply(&permute(&sigma, &v)?, 1)?;
    let rhs = permute(&sigma, &eta_apply(&v, 1)?)?;
    println!("η_1(σ·v) == σ·η_1(v): {}", lhs == rhs);
    println!("as JSON: {}", serde_json::to_string(&canon)?);
    Ok(())
}
