//! Eigenvalues of `η_ℓ` and the combinatorial conditions derived from them.
//!
//! `M^(n,m)'` splits as the multiplicity-free sum of the Specht modules
//! `S^(2^i 1^(n+m-2i))`, `0 <= i <= m`, and `η_ℓ` is the scalar
//!
//! ```text
//! ω(ℓ,i) = C(m,ℓ) - Σ_{k=0..ℓ} C(m-i,k)·C(n-i,k)·C(i,ℓ-k)·(-1)^k
//! ```
//!
//! on the `i`-th summand. The quotient of `M^(n,m)'` by the image of `η_ℓ` is
//! the Specht module exactly when `ω(ℓ,i) ≠ 0` for every `i < m`. A second,
//! independently stated family of conditions (indexed by `j = 1..=m`) is
//! equivalent; [`condition_equivalence_check`] compares the two.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{binomial, hook_dim_two_column, BINOMIALS};
use crate::error::{GarnirError, Result};

fn check_range(n: usize, m: usize, l: usize) -> Result<()> {
    if !(1 <= l && l <= m && m <= n) {
        return Err(GarnirError::InvalidParameters(format!(
            "need 1 <= l <= m <= n, got n={n}, m={m}, l={l}"
        )));
    }
    Ok(())
}

fn c(a: usize, b: i64) -> BigInt {
    BINOMIALS.get(a, b)
}

/// `C(a,b)·C(d,e)·C(f,g)` without cloning table entries.
fn triple_product(a: (usize, i64), b: (usize, i64), d: (usize, i64)) -> BigInt {
    let table = &*BINOMIALS;
    let within = [a.0, b.0, d.0].iter().all(|&x| x <= table.max());
    if within {
        match (
            table.get_ref(a.0, a.1),
            table.get_ref(b.0, b.1),
            table.get_ref(d.0, d.1),
        ) {
            (Some(x), Some(y), Some(z)) => x * y * z,
            _ => BigInt::zero(),
        }
    } else {
        binomial(a.0, a.1) * binomial(b.0, b.1) * binomial(d.0, d.1)
    }
}

/// `Σ_{k=0..ℓ} C(m-i,k)·C(n-i,k)·C(i,ℓ-k)·(-1)^k`, the part of `ω` subtracted
/// from the diagonal.
fn exchange_sum(n: usize, m: usize, l: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=l {
        let term = triple_product(
            (m - i, k as i64),
            (n - i, k as i64),
            (i, l as i64 - k as i64),
        );
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The scalar by which `η_ℓ` acts on the summand `S^(2^i 1^(n+m-2i))` of `M^(n,m)'`.
pub fn omega(n: usize, m: usize, l: usize, i: usize) -> Result<BigInt> {
    check_range(n, m, l)?;
    if i > m {
        return Err(GarnirError::InvalidParameters(format!(
            "component index i={i} exceeds m={m}"
        )));
    }
    Ok(omega_unchecked(n, m, l, i))
}

pub(crate) fn omega_unchecked(n: usize, m: usize, l: usize, i: usize) -> BigInt {
    c(m, l as i64) - exchange_sum(n, m, l, i)
}

/// All eigenvalues `ω(ℓ,i)` of a two-column shape, `1 <= ℓ <= m`, `0 <= i <= m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTable {
    n: usize,
    m: usize,
    values: Vec<Vec<BigInt>>,
}

impl OmegaTable {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        check_range(n, m, 1)?;
        let values = (1..=m)
            .map(|l| (0..=m).map(|i| omega_unchecked(n, m, l, i)).collect())
            .collect();
        Ok(OmegaTable { n, m, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, l: usize, i: usize) -> &BigInt {
        &self.values[l - 1][i]
    }

    /// `ω(ℓ,0), …, ω(ℓ,m)`.
    pub fn column(&self, l: usize) -> &[BigInt] {
        &self.values[l - 1]
    }

    /// The components `i < m` killed by `η_ℓ`.
    pub fn zeros_below_m(&self, l: usize) -> Vec<usize> {
        (0..self.m).filter(|&i| self.get(l, i).is_zero()).collect()
    }

    /// Distinct eigenvalues of `η_ℓ`, sorted.
    pub fn spectrum(&self, l: usize) -> Vec<BigInt> {
        let mut vals = self.column(l).to_vec();
        vals.sort();
        vals.dedup();
        vals
    }
}

/// The combinatorial identity obtained by computing `tr η_ℓ` twice: the
/// double sum over `i` and `k` of the exchange terms weighted by
/// `dim S^(2^i 1^(n+m-2i))` vanishes, and equivalently
/// `C(m,ℓ)·C(n+m,n) = Σ_i ω(ℓ,i)·dim S^(2^i 1^(n+m-2i))`.
///
/// The hook factor `C(n+m,i)(n+m-2i+1)/(n+m-i+1)` is evaluated as a rational
/// and must come out integral; a fractional value is reported as an error.
pub fn trace_identity_check(n: usize, m: usize, l: usize) -> Result<bool> {
    check_range(n, m, l)?;
    let total = n + m;
    let mut symbolic = BigRational::zero();
    let mut spectral = BigInt::zero();
    for i in 0..=m {
        let hook = BigRational::new(
            c(total, i as i64) * (total - 2 * i + 1),
            BigInt::from(total - i + 1),
        );
        if !hook.is_integer() {
            return Err(GarnirError::Invariant(format!(
                "hook factor {hook} not integral at n={n}, m={m}, i={i}"
            )));
        }
        symbolic += BigRational::from_integer(exchange_sum(n, m, l, i)) * &hook;
        spectral += omega_unchecked(n, m, l, i) * hook.to_integer();
    }
    let trace = c(m, l as i64) * c(total, n as i64);
    Ok(symbolic.is_zero() && spectral == trace)
}

/// `Σ_i ω(ℓ,i)·dim S^(2^i 1^(n+m-2i))`, the trace predicted by the spectrum.
pub fn spectral_trace(n: usize, m: usize, l: usize) -> Result<BigInt> {
    check_range(n, m, l)?;
    (0..=m).try_fold(BigInt::zero(), |acc, i| {
        Ok(acc + omega_unchecked(n, m, l, i) * hook_dim_two_column(n, m, i)?)
    })
}

/// `Σ_{t=1..j} (-1)^(t-1)·C(m-t, m-ℓ)·C(j,t)·C(n-m+j+t, t)`.
pub fn alternating_sum(n: usize, m: usize, l: usize, j: usize) -> Result<BigInt> {
    check_range(n, m, l)?;
    if j == 0 || j > m {
        return Err(GarnirError::InvalidParameters(format!(
            "index j={j} outside 1..={m}"
        )));
    }
    let mut acc = BigInt::zero();
    for t in 1..=j {
        let term = triple_product(
            (m - t, (m - l) as i64),
            (j, t as i64),
            (n - m + j + t, t as i64),
        );
        if t % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Every `j` in `1..=m` at which [`alternating_sum`] vanishes; the scan does not stop
/// at the first zero.
pub fn alternating_zero_indices(n: usize, m: usize, l: usize) -> Result<Vec<usize>> {
    check_range(n, m, l)?;
    let mut zeros = Vec::new();
    for j in 1..=m {
        if alternating_sum(n, m, l, j)?.is_zero() {
            zeros.push(j);
        }
    }
    Ok(zeros)
}

/// True iff [`alternating_sum`] is nonzero for every `j = 1..=m`.
pub fn alternating_condition(n: usize, m: usize, l: usize) -> Result<bool> {
    Ok(alternating_zero_indices(n, m, l)?.is_empty())
}

/// Which exchange sizes a scan covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeRange {
    /// `1 <= ℓ < m`
    BelowM,
    /// `1 <= ℓ <= m`
    UpToM,
}

impl ExchangeRange {
    fn upper(self, m: usize) -> usize {
        match self {
            ExchangeRange::BelowM => m - 1,
            ExchangeRange::UpToM => m,
        }
    }
}

impl fmt::Display for ExchangeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExchangeRange::BelowM => write!(f, "1 <= l < m"),
            ExchangeRange::UpToM => write!(f, "1 <= l <= m"),
        }
    }
}

/// Parameters `(n, m, ℓ, i)` with `i < m` and `ω(ℓ,i) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ZeroTuple {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub i: usize,
}

/// Result of [`scan_zero_tuples`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n_max: usize,
    pub range: ExchangeRange,
    /// Number of `(n, m, ℓ)` triples examined.
    pub triples_scanned: usize,
    /// Sorted lexicographically.
    pub tuples: Vec<ZeroTuple>,
    /// Number of vanishing `i < m`, for every triple with at least one.
    pub zero_counts: BTreeMap<(usize, usize, usize), usize>,
}

impl ScanReport {
    pub fn triples_with_zeros(&self) -> usize {
        self.zero_counts.len()
    }

    pub fn triples_with_exactly(&self, k: usize) -> usize {
        self.zero_counts.values().filter(|&&c| c == k).count()
    }

    /// `count of zeros → number of triples`.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &c in self.zero_counts.values() {
            *h.entry(c).or_insert(0) += 1;
        }
        h
    }

    /// Header `n,m,l,i` followed by one line per tuple.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,m,l,i\n");
        for t in &self.tuples {
            writeln!(s, "{},{},{},{}", t.n, t.m, t.l, t.i).unwrap();
        }
        s
    }

    pub fn summary(&self) -> String {
        let mut parts = vec![format!(
            "{} of {} triples with zeros",
            self.triples_with_zeros(),
            self.triples_scanned
        )];
        for (k, count) in self.histogram() {
            let noun = if k == 1 { "zero" } else { "zeros" };
            parts.push(format!("{count} with {k} {noun}"));
        }
        parts.join("; ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n_max": self.n_max,
            "range": self.range,
            "triples_scanned": self.triples_scanned,
            "triples_with_zeros": self.triples_with_zeros(),
            "zero_count_histogram": self
                .histogram()
                .into_iter()
                .map(|(k, c)| (k.to_string(), c))
                .collect::<BTreeMap<_, _>>(),
            "claim": "eta_l has a nonzero eigenvalue on every component below the Specht module",
            "tuples": self.tuples,
        })
    }
}

fn triples(n_max: usize, range: ExchangeRange) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in 1..=n {
            for l in 1..=range.upper(m) {
                out.push((n, m, l));
            }
        }
    }
    out
}

/// Every `(n, m, ℓ, i)` with `1 <= ℓ <= m <= n <= n_max` (or `ℓ < m`), `i < m`
/// and `ω(ℓ,i) = 0`.
pub fn scan_zero_tuples(n_max: usize, range: ExchangeRange) -> ScanReport {
    let triples = triples(n_max, range);
    let per_triple: Vec<Vec<ZeroTuple>> = triples
        .par_iter()
        .map(|&(n, m, l)| {
            (0..m)
                .filter(|&i| omega_unchecked(n, m, l, i).is_zero())
                .map(|i| ZeroTuple { n, m, l, i })
                .collect()
        })
        .collect();
    let mut tuples: Vec<ZeroTuple> = per_triple.iter().flatten().copied().collect();
    tuples.sort_unstable();
    let zero_counts = per_triple
        .iter()
        .filter(|z| !z.is_empty())
        .map(|z| ((z[0].n, z[0].m, z[0].l), z.len()))
        .collect();
    ScanReport {
        n_max,
        range,
        triples_scanned: triples.len(),
        tuples,
        zero_counts,
    }
}

/// Triples where the two condition families disagree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub checked: usize,
    pub mismatches: Vec<(usize, usize, usize)>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `[ω(ℓ,i) ≠ 0 for all i < m]` with [`alternating_condition`] on every
/// `1 <= ℓ <= m <= n <= n_max`.
pub fn condition_equivalence_report(n_max: usize) -> EquivalenceReport {
    let triples = triples(n_max, ExchangeRange::UpToM);
    let mut mismatches: Vec<(usize, usize, usize)> = triples
        .par_iter()
        .filter(|&&(n, m, l)| {
            let omega_ok = (0..m).all(|i| !omega_unchecked(n, m, l, i).is_zero());
            let alternating_ok = alternating_condition(n, m, l).expect("triple in range");
            omega_ok != alternating_ok
        })
        .copied()
        .collect();
    mismatches.sort_unstable();
    EquivalenceReport {
        checked: triples.len(),
        mismatches,
    }
}

pub fn condition_equivalence_check(n_max: usize) -> bool {
    condition_equivalence_report(n_max).holds()
}

/// `1 - C(n-i, m-i)·(-1)^(m-i)`, the value of `ω(m,i)`.
pub fn omega_maximal_exchange(n: usize, m: usize, i: usize) -> BigInt {
    let sign = if (m - i).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    BigInt::one() - c(n - i, (m - i) as i64) * sign
}

/// `(m-i)(n-i+1)`, the value of `ω(1,i)`.
pub fn omega_single_exchange(n: usize, m: usize, i: usize) -> BigInt {
    BigInt::from(m - i) * BigInt::from(n - i + 1)
}
