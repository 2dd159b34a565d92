//! Symmetrized dual Garnir operators on column tabloids.
//!
//! The operator `η_ℓ` acts on the space `M^(n,m)'` spanned by column
//! tabloids of the two-column shape with columns of lengths `n >= m`. It is
//! a scalar `ω(ℓ,i)` on each irreducible summand, and the quotient of
//! `M^(n,m)'` by its image is the Specht module exactly when none of the
//! scalars below the top summand vanishes. This crate computes the scalars
//! in closed form, builds the operators as exact sparse matrices, and checks
//! both against each other.
//!
//! ```
//! use garnir::eigen::omega;
//! use num_bigint::BigInt;
//!
//! assert_eq!(omega(5, 4, 2, 1).unwrap(), BigInt::from(0));
//! assert_eq!(omega(3, 2, 1, 0).unwrap(), BigInt::from(8));
//! ```

pub mod cli;
pub mod combinat;
pub mod eigen;
pub mod error;
pub mod garnir;
pub mod tabloid;
pub mod verify;

pub use combinat::{binomial, hook_dim, hook_dim_two_column, Partition};
pub use eigen::{omega, scan_zero_tuples, ExchangeRange, OmegaTable, ScanReport, ZeroTuple};
pub use error::{GarnirError, Result};
pub use garnir::{
    eta_apply, eta_matrix_by_exchange, eta_matrix_closed_form, h_apply, GarnirSpec, OperatorMatrix,
};
pub use tabloid::{ColumnTabloid, Permutation, Tableau, TabloidBasis, TabloidVector};
pub use verify::{
    annihilator_check, kernel_dimension_check, projected_eigenvalue_oracle, verify_presentation,
    Bounds, ExactMatrix, PresentationVerdict,
};
