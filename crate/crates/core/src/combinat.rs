//! Partitions, binomial coefficients and dimensions of Specht modules.
//!
//! Everything that can leave the range of a machine word is computed with
//! [`BigInt`]; `usize` is only used for indices, part sizes and loop bounds.

use std::fmt;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{GarnirError, Result};

/// Upper bound on `sum(λ)` accepted by [`count_standard_tableaux_bruteforce`].
pub const BRUTEFORCE_MAX_SIZE: usize = 12;

/// An integer partition stored as its weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(GarnirError::InvalidShape(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(GarnirError::InvalidShape(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The two-column shape `2^m 1^(n-m)`, whose columns have lengths `n` and `m`.
    pub fn two_column(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(GarnirError::InvalidShape(format!(
                "two-column shape needs 1 <= m <= n, got n={n}, m={m}"
            )));
        }
        Self::from_column_lengths(&[n, m])
    }

    /// Builds the partition whose conjugate is `columns`.
    pub fn from_column_lengths(columns: &[usize]) -> Result<Self> {
        let conj = Partition::new(columns.to_vec())?;
        Ok(conj.conjugate())
    }

    /// Builds a partition from a multiplicity vector: `mult[k]` copies of the part `k + 1`.
    pub fn from_multiplicities(mult: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (k, &count) in mult.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(k + 1, count));
        }
        Partition { parts }
    }

    pub fn to_multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.largest_part()];
        for &p in &self.parts {
            mult[p - 1] += 1;
        }
        mult
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_1`, the number of columns.
    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest_part();
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Column lengths `λ'_1 ≥ λ'_2 ≥ …`.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    pub fn num_columns(&self) -> usize {
        self.largest_part()
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let cols = self.column_lengths();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (0..len)
                    .map(|c| (len - c - 1) + (cols[c] - r - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Whether the shape has exactly two columns.
    pub fn is_two_column(&self) -> bool {
        self.largest_part() == 2
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = GarnirError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binomial(a: usize, b: i64) -> BigInt {
    if b < 0 || b as u64 > a as u64 {
        return BigInt::zero();
    }
    let b = (b as usize).min(a - b as usize);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc *= a - k;
        acc /= k + 1;
    }
    acc
}

/// Precomputed rows `C(a, ·)` for `a <= max`.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max: usize) -> Self {
        let rows = (0..=max)
            .map(|a| {
                let mut row = Vec::with_capacity(a + 1);
                let mut cur = BigInt::one();
                for b in 0..=a {
                    row.push(cur.clone());
                    cur = cur * (a - b) / (b + 1);
                }
                row
            })
            .collect();
        BinomialTable { rows }
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(a, b)` with the same zero convention as [`binomial`]. Falls back to
    /// direct evaluation when `a` is past the table.
    pub fn get(&self, a: usize, b: i64) -> BigInt {
        if b < 0 || b as u64 > a as u64 {
            return BigInt::zero();
        }
        match self.rows.get(a) {
            Some(row) => row[b as usize].clone(),
            None => binomial(a, b),
        }
    }

    /// Borrowed lookup; `None` when the value is zero or `a` is past the table.
    pub fn get_ref(&self, a: usize, b: i64) -> Option<&BigInt> {
        if b < 0 || b as u64 > a as u64 {
            return None;
        }
        self.rows.get(a).map(|row| &row[b as usize])
    }
}

pub(crate) static BINOMIALS: LazyLock<BinomialTable> = LazyLock::new(|| BinomialTable::new(160));

/// `dim S^(2^i 1^(n+m-2i))`, i.e. `C(n+m, i)·(n+m-2i+1)/(n+m-i+1)`.
pub fn hook_dim_two_column(n: usize, m: usize, i: usize) -> Result<BigInt> {
    if !(i <= m && m <= n) {
        return Err(GarnirError::InvalidShape(format!(
            "need 0 <= i <= m <= n, got n={n}, m={m}, i={i}"
        )));
    }
    let total = n + m;
    let numer = BINOMIALS.get(total, i as i64) * (total - 2 * i + 1);
    let denom = BigInt::from(total - i + 1);
    let (q, r) = numer.div_rem(&denom);
    if !r.is_zero() {
        return Err(GarnirError::Invariant(format!(
            "hook quotient not integral for n={n}, m={m}, i={i}"
        )));
    }
    Ok(q)
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn hook_dim(lambda: &Partition) -> BigInt {
    let mut numer: BigInt = (1..=lambda.size()).map(BigInt::from).product();
    let hooks: BigInt = lambda
        .hook_lengths()
        .into_iter()
        .flatten()
        .map(BigInt::from)
        .product();
    numer /= hooks;
    numer
}

/// Counts standard fillings of `λ` by placing `1, 2, …, n` one at a time in
/// every admissible cell.
pub fn count_standard_tableaux_bruteforce(lambda: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    if n > BRUTEFORCE_MAX_SIZE {
        return Err(GarnirError::SizeBound {
            what: "sum(λ)",
            value: n,
            bound: BRUTEFORCE_MAX_SIZE,
        });
    }

    fn walk(shape: &[usize], filled: &mut [usize], left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                total += walk(shape, filled, left - 1);
                filled[r] -= 1;
            }
        }
        total
    }

    let mut filled = vec![0; lambda.len()];
    Ok(BigInt::from(walk(lambda.parts(), &mut filled, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Pascal's triangle by repeated addition only.
    fn pascal_rows(max: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for a in 1..=max {
            let prev = &rows[a - 1];
            let mut row = vec![BigInt::one(); a + 1];
            for b in 1..a {
                row[b] = &prev[b - 1] + &prev[b];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_matches_additive_pascal() {
        let rows = pascal_rows(100);
        assert_eq!(binomial(100, 50), rows[100][50]);
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
        let table = BinomialTable::new(100);
        for (a, row) in rows.iter().enumerate().take(101) {
            for (b, x) in row.iter().enumerate() {
                assert_eq!(&table.get(a, b as i64), x);
            }
        }
    }

    #[test]
    fn pascal_rule_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let a = rng.gen_range(1..=200usize);
            let b = rng.gen_range(-2..=a as i64 + 2);
            assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }

    #[test]
    fn two_column_constructor() {
        let mu = Partition::two_column(4, 3).unwrap();
        assert_eq!(mu.parts(), &[2, 2, 2, 1]);
        assert_eq!(mu.column_lengths(), vec![4, 3]);
        assert!(Partition::two_column(2, 3).is_err());
        assert!(Partition::two_column(2, 0).is_err());
    }

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn multiplicity_round_trip() {
        let lam = p(&[4, 2, 2, 1]);
        assert_eq!(lam.to_multiplicities(), vec![1, 2, 0, 1]);
        assert_eq!(
            Partition::from_multiplicities(&lam.to_multiplicities()),
            lam
        );
    }

    #[test]
    fn conjugation_is_an_involution_up_to_30() {
        for n in 0..=30 {
            for lam in Partition::all(n) {
                let conj = lam.conjugate();
                assert_eq!(conj.size(), lam.size());
                assert_eq!(conj.conjugate(), lam);
            }
        }
        assert_eq!(Partition::all(30).len(), 5604);
    }

    #[test]
    fn hook_dim_two_column_examples() {
        assert_eq!(hook_dim_two_column(5, 4, 0).unwrap(), BigInt::one());
        assert_eq!(hook_dim_two_column(5, 4, 1).unwrap(), BigInt::from(8));
        // 2·1^7 has 8 standard tableaux: choose the entry in row 1, column 2.
        assert_eq!(
            count_standard_tableaux_bruteforce(&p(&[2, 1, 1, 1, 1, 1, 1, 1])).unwrap(),
            BigInt::from(8)
        );
        assert!(hook_dim_two_column(3, 4, 0).is_err());
        assert!(hook_dim_two_column(5, 4, 5).is_err());
    }

    #[test]
    fn two_column_dims_sum_to_tabloid_count() {
        for n in 1..=12 {
            for m in 1..=n {
                let sum: BigInt = (0..=m).map(|i| hook_dim_two_column(n, m, i).unwrap()).sum();
                assert_eq!(sum, binomial(n + m, n as i64), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn hook_dim_examples() {
        assert_eq!(hook_dim(&p(&[1, 1, 1])), BigInt::one());
        assert_eq!(hook_dim(&p(&[2, 2, 1])), BigInt::from(5));
        assert_eq!(
            count_standard_tableaux_bruteforce(&p(&[2, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            count_standard_tableaux_bruteforce(&p(&[2, 2])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            count_standard_tableaux_bruteforce(&p(&[2, 2, 1])).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            count_standard_tableaux_bruteforce(&p(&[3, 2, 1])).unwrap(),
            BigInt::from(16)
        );
    }

    #[test]
    fn hook_dim_agrees_with_bruteforce_up_to_10() {
        for n in 0..=10 {
            for lam in Partition::all(n) {
                assert_eq!(
                    hook_dim(&lam),
                    count_standard_tableaux_bruteforce(&lam).unwrap(),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn hook_dim_matches_two_column_formula() {
        for n in 1..=8 {
            for m in 1..=n {
                for i in 0..=m {
                    let mut parts = vec![2; i];
                    parts.extend(std::iter::repeat_n(1, n + m - 2 * i));
                    assert_eq!(hook_dim(&p(&parts)), hook_dim_two_column(n, m, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn bruteforce_size_guard() {
        let big = p(&[4, 4, 4, 1]);
        assert!(matches!(
            count_standard_tableaux_bruteforce(&big),
            Err(GarnirError::SizeBound { .. })
        ));
    }

    proptest! {
        #[test]
        fn conjugate_preserves_size(parts in proptest::collection::vec(1usize..8, 0..8)) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts).unwrap();
            prop_assert_eq!(lam.conjugate().size(), lam.size());
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}
