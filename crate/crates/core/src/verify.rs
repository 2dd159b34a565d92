//! Matrix-level checks of the eigenvalue formula and of the presentations it
//! predicts.
//!
//! Ranks are exact over `Q`. Small matrices go through fraction-free
//! (Bareiss) elimination; larger ones are reduced modulo several primes
//! below `2^31` and accepted when every prime reports the same rank, with
//! Bareiss as the fallback on disagreement. A rank modulo `p` never exceeds
//! the rational rank, so disagreement always means some prime was unlucky.

use std::env;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{hook_dim, hook_dim_two_column, Partition};
use crate::eigen::{omega_unchecked, OmegaTable};
use crate::error::{GarnirError, Result};
use crate::garnir::{eta_apply, eta_matrix_closed_form, h_matrix, GarnirSpec, OperatorMatrix};
use crate::tabloid::{combinations, ColumnTabloid, Permutation, TabloidVector};

/// Environment variable overriding every `n + m` size bound.
pub const BOUND_ENV: &str = "GARNIR_BOUND_NM";

/// Primes just below `2^31`, so that products of residues fit in a `u64`.
pub const DEFAULT_PRIMES: [u64; 5] = [
    2_147_483_647,
    2_147_483_629,
    2_147_483_587,
    2_147_483_579,
    2_147_483_563,
];

/// Size limits for the matrix checks; exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `n + m` for [`kernel_dimension_check`].
    pub kernel: usize,
    /// `n + m` for [`annihilator_check`].
    pub annihilator: usize,
    /// `n + m` for [`projected_eigenvalue_oracle`].
    pub oracle: usize,
    /// `sum(λ)` for [`verify_presentation`].
    pub presentation: usize,
    /// `dim M^λ` for [`verify_presentation`]; not affected by `$GARNIR_BOUND_NM`.
    pub tabloids: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            kernel: 14,
            annihilator: 10,
            oracle: 9,
            presentation: 10,
            tabloids: 5040,
        }
    }
}

impl Bounds {
    pub fn uniform(bound: usize) -> Self {
        Bounds {
            kernel: bound,
            annihilator: bound,
            oracle: bound,
            presentation: bound,
            tabloids: Bounds::default().tabloids,
        }
    }

    /// Defaults, with every bound replaced by `$GARNIR_BOUND_NM` when set.
    pub fn from_env() -> Result<Self> {
        match env::var(BOUND_ENV) {
            Ok(raw) => raw.trim().parse().map(Bounds::uniform).map_err(|_| {
                GarnirError::InvalidParameters(format!("{BOUND_ENV}={raw:?} is not an integer"))
            }),
            Err(_) => Ok(Bounds::default()),
        }
    }
}

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(GarnirError::SizeBound { what, value, bound });
    }
    Ok(())
}

/// How [`ExactMatrix::rank`] picks its method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankConfig {
    /// Matrices with at most this many entries use fraction-free elimination only.
    pub fraction_free_max_entries: usize,
    /// At least three primes; all must agree for a modular rank to be accepted.
    pub primes: Vec<u64>,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            fraction_free_max_entries: 64 * 64,
            primes: DEFAULT_PRIMES[..3].to_vec(),
        }
    }
}

/// A sparse matrix over `Q`, stored by rows with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, BigRational)>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k].push((k, BigRational::one()));
        }
        m
    }

    pub fn from_rational_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Self {
        let data = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged row");
                r.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect::<Vec<_>>();
        ExactMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rational_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Rows given as `(column, value)` lists.
    pub fn from_sparse_integer_rows(cols: usize, rows: Vec<Vec<(usize, i64)>>) -> Self {
        let data = rows
            .into_iter()
            .map(|mut r| {
                r.sort_unstable_by_key(|&(c, _)| c);
                r.into_iter()
                    .filter(|&(c, x)| {
                        assert!(c < cols, "column {c} out of range");
                        x != 0
                    })
                    .map(|(c, x)| (c, BigRational::from_integer(x.into())))
                    .collect()
            })
            .collect::<Vec<_>>();
        ExactMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[ExactMatrix]) -> Self {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        for p in parts {
            assert_eq!(p.cols, cols, "column mismatch in vstack");
            data.extend(p.data.iter().cloned());
        }
        ExactMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        let row = &self.data[r];
        row.binary_search_by_key(&c, |(k, _)| *k)
            .map(|k| row[k].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |(k, _)| *k) {
            Ok(k) if value.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = value,
            Err(_) if value.is_zero() => {}
            Err(k) => row.insert(k, (c, value)),
        }
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().map(|(c, a)| a * &x[*c]).sum())
            .collect()
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.data
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
                row.iter()
                    .map(|(c, x)| (*c, x.numer() * (&lcm / x.denom())))
                    .collect()
            })
            .collect()
    }

    /// Rank by fraction-free elimination: every intermediate entry is a minor
    /// of the row-scaled integer matrix, so each division is exact.
    pub fn rank_fraction_free(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = self
            .integer_rows()
            .into_iter()
            .map(|row| {
                let mut dense = vec![BigInt::zero(); self.cols];
                for (c, x) in row {
                    dense[c] = x;
                }
                dense
            })
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let (top, below) = a.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            let pivot = pivot_row[col].clone();
            below.par_iter_mut().for_each(|row| {
                let factor = std::mem::take(&mut row[col]);
                for j in col + 1..row.len() {
                    let v = &pivot * &row[j] - &factor * &pivot_row[j];
                    let (q, r) = v.div_rem(&prev);
                    debug_assert!(r.is_zero(), "fraction-free division must be exact");
                    row[j] = q;
                }
            });
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Rank of the row-scaled integer matrix reduced modulo `p`.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        assert!(p < 1 << 31, "modulus must be below 2^31");
        let big_p = BigInt::from(p);
        let cols = self.cols;
        let mut a: Vec<Vec<u32>> = self
            .integer_rows()
            .into_iter()
            .map(|row| {
                let mut dense = vec![0u32; cols];
                for (c, x) in row {
                    dense[c] = x.mod_floor(&big_p).to_u32().expect("residue below p");
                }
                dense
            })
            .collect();
        rank_mod_p_dense(&mut a, cols, p)
    }

    /// Ranks modulo each prime, computed in parallel.
    pub fn rank_multi_modular(&self, primes: &[u64]) -> Vec<usize> {
        primes.par_iter().map(|&p| self.rank_mod_p(p)).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank_with(&RankConfig::default())
    }

    pub fn rank_with(&self, config: &RankConfig) -> usize {
        if self.rows * self.cols <= config.fraction_free_max_entries {
            return self.rank_fraction_free();
        }
        assert!(
            config.primes.len() >= 3,
            "modular rank needs at least three primes"
        );
        let ranks = self.rank_multi_modular(&config.primes);
        if ranks.windows(2).all(|w| w[0] == w[1]) {
            ranks[0]
        } else {
            self.rank_fraction_free()
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of `{x : A x = 0}` from the reduced row echelon form over `Q`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let mut a: Vec<Vec<BigRational>> = self
            .data
            .iter()
            .map(|row| {
                let mut dense = vec![BigRational::zero(); self.cols];
                for (c, x) in row {
                    dense[*c] = x.clone();
                }
                dense
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&k| !a[k][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][col].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = a[r].clone();
            for (k, row) in a.iter_mut().enumerate() {
                if k != r && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[k][f].clone();
                }
                v
            })
            .collect()
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Row-reduces in place. Residues fit in `u32` since `p < 2^31`; only the
/// nonzero positions of each pivot row are touched, which keeps sparse
/// relation matrices cheap until fill-in sets in.
fn rank_mod_p_dense(a: &mut [Vec<u32>], cols: usize, p: u64) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut support: Vec<usize> = Vec::with_capacity(cols);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &mut top[rank];
        let inv = inv_mod(u64::from(pivot_row[col]), p);
        support.clear();
        for (j, x) in pivot_row.iter_mut().enumerate().skip(col) {
            if *x != 0 {
                *x = (u64::from(*x) * inv % p) as u32;
                support.push(j);
            }
        }
        let pivot_row = &*pivot_row;
        let support = &support;
        let update = |row: &mut Vec<u32>| {
            let f = row[col];
            if f == 0 {
                return;
            }
            let neg = p - u64::from(f);
            for &j in support {
                row[j] = ((u64::from(row[j]) + neg * u64::from(pivot_row[j])) % p) as u32;
            }
        };
        if below.len() * support.len() > 1 << 18 {
            below.par_iter_mut().for_each(update);
        } else {
            below.iter_mut().for_each(update);
        }
        rank += 1;
    }
    rank
}

/// Free function form of [`ExactMatrix::rank`].
pub fn exact_rank(m: &ExactMatrix) -> usize {
    m.rank()
}

/// Outcome of [`kernel_dimension_report`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCheck {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    /// `dim ker η_ℓ` from the matrix.
    pub kernel_dim: usize,
    /// Components `i` (including `i = m`) with `ω(ℓ,i) = 0`.
    pub zero_components: Vec<usize>,
    /// `Σ dim S^(2^i 1^(n+m-2i))` over `zero_components`.
    pub predicted_dim: usize,
}

impl KernelCheck {
    pub fn holds(&self) -> bool {
        self.kernel_dim == self.predicted_dim
    }
}

fn check_two_column(n: usize, m: usize, l: usize) -> Result<()> {
    if !(1 <= l && l <= m && m <= n) {
        return Err(GarnirError::InvalidParameters(format!(
            "need 1 <= l <= m <= n, got n={n}, m={m}, l={l}"
        )));
    }
    Ok(())
}

pub fn kernel_dimension_report(
    n: usize,
    m: usize,
    l: usize,
    bounds: &Bounds,
) -> Result<KernelCheck> {
    check_two_column(n, m, l)?;
    check_bound("n + m", n + m, bounds.kernel)?;
    let matrix = eta_matrix_closed_form(n, m, l)?.to_exact();
    let kernel_dim = matrix.nullity();
    let zero_components: Vec<usize> = (0..=m)
        .filter(|&i| omega_unchecked(n, m, l, i).is_zero())
        .collect();
    let mut predicted_dim = 0usize;
    for &i in &zero_components {
        predicted_dim += hook_dim_two_column(n, m, i)?
            .to_usize()
            .expect("dimension fits in usize");
    }
    Ok(KernelCheck {
        n,
        m,
        l,
        kernel_dim,
        zero_components,
        predicted_dim,
    })
}

/// `dim ker η_ℓ` equals the total dimension of the components with `ω(ℓ,i) = 0`.
pub fn kernel_dimension_check(n: usize, m: usize, l: usize, bounds: &Bounds) -> Result<bool> {
    Ok(kernel_dimension_report(n, m, l, bounds)?.holds())
}

/// Dense square matrix product `(H - w·I)·P` for column-sparse `H`.
fn shifted_product<T>(h: &OperatorMatrix, w: &T, p: &[Vec<T>]) -> Option<Vec<Vec<T>>>
where
    T: Clone + Zero + CheckedArith,
{
    let mut out: Vec<Vec<T>> = p
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| w.c_mul(x)?.c_neg())
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<_>>()?;
    for (k, source) in p.iter().enumerate() {
        for &(r, hv) in h.column(k) {
            let hv = T::from_i64(hv);
            for (o, x) in out[r].iter_mut().zip(source) {
                *o = o.c_add(&hv.c_mul(x)?)?;
            }
        }
    }
    Some(out)
}

trait CheckedArith: Sized {
    fn from_i64(x: i64) -> Self;
    fn c_add(&self, other: &Self) -> Option<Self>;
    fn c_mul(&self, other: &Self) -> Option<Self>;
    fn c_neg(self) -> Option<Self>;
}

impl CheckedArith for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn c_add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn c_mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn c_neg(self) -> Option<Self> {
        self.checked_neg()
    }
}

impl CheckedArith for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn c_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn c_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn c_neg(self) -> Option<Self> {
        Some(-self)
    }
}

fn annihilates<T>(h: &OperatorMatrix, spectrum: &[T]) -> Option<bool>
where
    T: Clone + Zero + One + CheckedArith,
{
    let dim = h.dim();
    let mut p: Vec<Vec<T>> = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if r == c { T::one() } else { T::zero() })
                .collect()
        })
        .collect();
    for w in spectrum {
        p = shifted_product(h, w, &p)?;
    }
    Some(p.iter().all(|row| row.iter().all(Zero::is_zero)))
}

/// `Π_w (H - w·I) = 0` over the distinct values `w` of `ω(ℓ,0..=m)`, so `η_ℓ`
/// is diagonalizable with its spectrum inside the predicted values.
pub fn annihilator_check(n: usize, m: usize, l: usize, bounds: &Bounds) -> Result<bool> {
    check_two_column(n, m, l)?;
    check_bound("n + m", n + m, bounds.annihilator)?;
    let h = eta_matrix_closed_form(n, m, l)?;
    let spectrum = OmegaTable::new(n, m)?.spectrum(l);
    let small: Option<Vec<i128>> = spectrum.iter().map(|w| w.to_i128()).collect();
    if let Some(small) = small {
        if let Some(done) = annihilates(&h, &small) {
            return Ok(done);
        }
    }
    Ok(annihilates(&h, &spectrum).expect("big integers never overflow"))
}

/// `⟨η_ℓ(r_t f_t v_T), v_T⟩` for `T = [n]` and the standard tableau `t` of
/// shape `2^i 1^(n+m-2i)` whose first column is `1..=n, n+i+1..=n+m` and
/// second column `n+1..=n+i`.
///
/// `r_t` sums the `2^i` row permutations, `f_t` is the signed sum of the
/// left coset representatives of `S_[n] × S_{n+1..n+i} × S_{n+i+1..n+m}` in
/// the column group (permutations increasing on each of the three blocks).
/// The coefficient of `v_T` in `r_t f_t v_T` is checked to be exactly 1.
pub fn projected_eigenvalue_oracle(
    n: usize,
    m: usize,
    l: usize,
    i: usize,
    bounds: &Bounds,
) -> Result<BigInt> {
    check_two_column(n, m, l)?;
    check_bound("n + m", n + m, bounds.oracle)?;
    if i > m {
        return Err(GarnirError::InvalidParameters(format!(
            "component index i={i} exceeds m={m}"
        )));
    }
    let v_t = ColumnTabloid::new(vec![(1..=n).collect(), (n + 1..=n + m).collect()])?;
    let projected = row_column_projection(n, m, i, &v_t);
    let lead = projected.coefficient(&v_t);
    if !lead.is_one() {
        return Err(GarnirError::Invariant(format!(
            "coefficient of v_T in r_t f_t v_T is {lead}, expected 1"
        )));
    }
    let image = eta_apply(&projected, l)?;
    let value = image.coefficient(&v_t);
    if !value.is_integer() {
        return Err(GarnirError::Invariant(format!(
            "non-integral eigenvalue {value}"
        )));
    }
    Ok(value.to_integer())
}

/// `r_t f_t v_T` as a tabloid vector.
fn row_column_projection(n: usize, m: usize, i: usize, v_t: &ColumnTabloid) -> TabloidVector {
    let size = n + m;
    // The long column of t: 1..=n followed by n+i+1..=n+m, already increasing.
    let long: Vec<usize> = (1..=n).chain(n + i + 1..=n + m).collect();
    let mut f_terms: Vec<(Permutation, i8)> = Vec::new();
    for chosen in combinations(long.len(), n) {
        let mut images: Vec<usize> = (1..=size).collect();
        let rest: Vec<usize> = (0..long.len())
            .filter(|k| chosen.binary_search(k).is_err())
            .collect();
        // inversions between the block sent to 1..=n and the block sent to n+i+1..
        let mut inversions = 0usize;
        for &a in &chosen {
            inversions += rest.iter().filter(|&&b| b < a).count();
        }
        for (src, &k) in (1..=n).zip(&chosen) {
            images[src - 1] = long[k];
        }
        for (src, &k) in (n + i + 1..=size).zip(&rest) {
            images[src - 1] = long[k];
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        f_terms.push((Permutation::new(images).expect("block interleaving"), sign));
    }

    let mut out =
        TabloidVector::zero(Partition::two_column(n, m).expect("valid two-column parameters"));
    let one = BigRational::one();
    for rows in 0u64..(1 << i) {
        let mut images: Vec<usize> = (1..=size).collect();
        for u in 1..=i {
            if rows >> (u - 1) & 1 == 1 {
                images.swap(u - 1, n + u - 1);
            }
        }
        let alpha = Permutation::new(images).expect("product of disjoint transpositions");
        for (sigma, sign) in &f_terms {
            let (t, s) = v_t.relabel(&alpha.compose(sigma));
            out.add_signed(t, s * sign, &one);
        }
    }
    out
}

/// Whether `M^λ / H^{λ,ℓ̂}` has the dimension of `S^λ`, alongside the
/// prediction from the eigenvalue conditions on every adjacent column pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationVerdict {
    pub shape: Partition,
    pub column_lengths: Vec<usize>,
    pub lhat: Vec<usize>,
    /// Every `ω(ℓ_c, i)` with `i < λ'_{c+1}` is nonzero, for every `c`.
    pub predicted: bool,
    /// The quotient dimension equals `dim S^λ`.
    pub observed: bool,
    /// `dim M^λ`.
    pub tabloid_dim: usize,
    pub relation_rank: usize,
    /// `dim M^λ - relation_rank`.
    pub quotient_dim: usize,
    pub specht_dim: usize,
    /// `(c, i)` pairs where the eigenvalue condition fails.
    pub failing_components: Vec<(usize, usize)>,
    pub claim: &'static str,
}

impl PresentationVerdict {
    pub fn consistent(&self) -> bool {
        self.predicted == self.observed
    }
}

/// `|λ|! / Π λ'_c!`, without building the basis.
fn tabloid_count(lambda: &Partition) -> Result<usize> {
    let mut count = BigInt::one();
    let mut used = 0usize;
    for len in lambda.column_lengths() {
        used += len;
        count *= crate::combinat::binomial(used, len as i64);
    }
    count.to_usize().ok_or(GarnirError::SizeBound {
        what: "dim M^λ",
        value: usize::MAX,
        bound: 0,
    })
}

/// Builds every `h_{c,ℓ_c}[t]`, takes the exact rank of their span and
/// compares the quotient dimension with `dim S^λ`.
pub fn verify_presentation(
    lambda: &Partition,
    lhat: &[usize],
    bounds: &Bounds,
) -> Result<PresentationVerdict> {
    check_bound("sum(λ)", lambda.size(), bounds.presentation)?;
    let tabloid_dim = tabloid_count(lambda)?;
    check_bound("dim M^λ", tabloid_dim, bounds.tabloids)?;
    let specs = GarnirSpec::for_each_pair(lambda, lhat)?;
    let cols = lambda.column_lengths();

    let mut failing_components = Vec::new();
    for spec in &specs {
        let (long, short) = spec.column_pair();
        for i in 0..short {
            if omega_unchecked(long, short, spec.exchange, i).is_zero() {
                failing_components.push((spec.column, i));
            }
        }
    }
    let predicted = failing_components.is_empty();

    let relations: Vec<ExactMatrix> = if lambda.is_two_column() {
        vec![eta_matrix_closed_form(cols[0], cols[1], lhat[0])?.to_exact()]
    } else {
        specs
            .iter()
            .map(|s| h_matrix(s).map(|h| h.to_exact().transpose()))
            .collect::<Result<_>>()?
    };
    let relation_rank = if relations.is_empty() {
        0
    } else {
        ExactMatrix::vstack(&relations).rank()
    };
    let quotient_dim = tabloid_dim - relation_rank;
    let specht_dim = hook_dim(lambda)
        .to_usize()
        .expect("dimension fits in usize");
    if quotient_dim < specht_dim {
        return Err(GarnirError::Invariant(format!(
            "quotient of dimension {quotient_dim} is smaller than dim S^λ = {specht_dim} for {lambda}"
        )));
    }
    Ok(PresentationVerdict {
        shape: lambda.clone(),
        column_lengths: cols,
        lhat: lhat.to_vec(),
        predicted,
        observed: quotient_dim == specht_dim,
        tabloid_dim,
        relation_rank,
        quotient_dim,
        specht_dim,
        failing_components,
        claim: "M^lambda modulo the symmetrized exchange relations is the Specht module \
                iff no eigenvalue below the top component vanishes",
    })
}

/// Every `ℓ̂` with `1 <= ℓ_c <= λ'_{c+1}`, in lexicographic order.
pub fn lhat_choices(lambda: &Partition) -> Vec<Vec<usize>> {
    let cols = lambda.column_lengths();
    let mut out = vec![Vec::new()];
    for &short in cols.iter().skip(1) {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (1..=short).map(move |l| {
                    let mut v = prefix.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// [`verify_presentation`] on the shape with columns `n`, `m` and `ℓ̂ = (ℓ)`.
pub fn verify_two_column(
    n: usize,
    m: usize,
    l: usize,
    bounds: &Bounds,
) -> Result<PresentationVerdict> {
    check_two_column(n, m, l)?;
    verify_presentation(&Partition::two_column(n, m)?, &[l], bounds)
}

/// The largest absolute value among the entries, handy for diagnostics.
pub fn max_abs_entry(m: &ExactMatrix) -> BigRational {
    m.data
        .iter()
        .flat_map(|r| r.iter().map(|(_, x)| x.abs()))
        .max()
        .unwrap_or_else(BigRational::zero)
}
