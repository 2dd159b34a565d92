//! Prints `ω(ℓ,i)` for one two-column shape, one row per exchange size.
//!
//! Usage: `cargo run --example omega_table [N M]` (defaults to 5 4)

use garnir::OmegaTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (n, m) = match args[..] {
        [n, m] => (n, m),
        _ => (5, 4),
    };
    let table = OmegaTable::new(n, m)?;

    print!("{:>4}", "l\\i");
    for i in 0..=m {
        print!("{i:>10}");
    }
    println!();
    for l in 1..=m {
        print!("{l:>4}");
        for w in table.column(l) {
            print!("{w:>10}");
        }
        let zeros = table.zeros_below_m(l);
        if zeros.is_empty() {
            println!();
        } else {
            println!("   zero below m at i = {zeros:?}");
        }
    }
    Ok(())
}
