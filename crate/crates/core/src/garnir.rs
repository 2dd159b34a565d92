//! Dual Garnir relations and the symmetrized exchange operators built from them.
//!
//! For a two-column shape with columns of lengths `n ≥ m`, `η_ℓ` sends a
//! tabloid `[t]` to `C(m,ℓ)[t]` minus every tabloid obtained by exchanging
//! `ℓ` entries of the second column with `ℓ` entries of the first, keeping
//! the vertical order of each moved block. On a general shape, `h_{c,ℓ}`
//! runs the same operator on columns `c` and `c+1` and leaves the rest alone.
//!
//! Matrices use the convention that column `k` holds the image of basis
//! vector `k`, so applying an operator is an ordinary matrix-vector product.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{binomial, Partition};
use crate::error::{GarnirError, Result};
use crate::tabloid::{
    combinations, sort_sign, ColumnTabloid, Tableau, TabloidBasis, TabloidVector,
};
use crate::verify::ExactMatrix;

/// One exchange: columns `column` and `column + 1` (1-based), `exchange` entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GarnirSpec {
    #[serde(skip)]
    shape: Partition,
    pub column: usize,
    pub exchange: usize,
}

impl GarnirSpec {
    pub fn new(shape: &Partition, column: usize, exchange: usize) -> Result<Self> {
        let width = shape.num_columns();
        if width < 2 {
            return Err(GarnirError::InvalidShape(format!(
                "shape {shape} has a single column, no adjacent pair to exchange"
            )));
        }
        if column == 0 || column >= width {
            return Err(GarnirError::InvalidParameters(format!(
                "column index {column} outside 1..={}",
                width - 1
            )));
        }
        let next = shape.column_lengths()[column];
        if exchange == 0 || exchange > next {
            return Err(GarnirError::InvalidParameters(format!(
                "exchange size {exchange} outside 1..={next} for column {column} of {shape}"
            )));
        }
        Ok(GarnirSpec {
            shape: shape.clone(),
            column,
            exchange,
        })
    }

    /// One spec per adjacent column pair, from `ℓ̂ = (ℓ_1, …, ℓ_{λ_1 - 1})`.
    pub fn for_each_pair(shape: &Partition, lhat: &[usize]) -> Result<Vec<GarnirSpec>> {
        let pairs = shape.num_columns().saturating_sub(1);
        if lhat.len() != pairs {
            return Err(GarnirError::InvalidParameters(format!(
                "shape {shape} needs {pairs} exchange sizes, got {}",
                lhat.len()
            )));
        }
        lhat.iter()
            .enumerate()
            .map(|(k, &l)| GarnirSpec::new(shape, k + 1, l))
            .collect()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Lengths of the two columns involved, `(λ'_c, λ'_{c+1})`.
    pub fn column_pair(&self) -> (usize, usize) {
        let cols = self.shape.column_lengths();
        (cols[self.column - 1], cols[self.column])
    }
}

/// Moves `left[pos_left[k]]` into `right[pos_right[k]]` and back, for every `k`.
fn exchange(
    columns: &[Vec<usize>],
    c: usize,
    pos_left: &[usize],
    pos_right: &[usize],
) -> Vec<Vec<usize>> {
    let mut out = columns.to_vec();
    for (&a, &b) in pos_left.iter().zip(pos_right) {
        let x = columns[c][a];
        let y = columns[c + 1][b];
        out[c][a] = y;
        out[c + 1][b] = x;
    }
    out
}

/// `g_{c,ℓ}(t) = [t] - Σ [s]`: the top `ℓ` entries of column `c + 1` are
/// exchanged with every `ℓ`-subset of column `c`.
pub fn garnir_relation(t: &Tableau, spec: &GarnirSpec) -> Result<TabloidVector> {
    if t.shape() != spec.shape() {
        return Err(GarnirError::InvalidShape(format!(
            "tableau of shape {} with relation for shape {}",
            t.shape(),
            spec.shape()
        )));
    }
    let c = spec.column - 1;
    let l = spec.exchange;
    let cols = t.columns();
    let top: Vec<usize> = (0..l).collect();
    let mut out = TabloidVector::from_tableau(t);
    let minus_one = -BigRational::one();
    for chosen in combinations(cols[c].len(), l) {
        let s = Tableau::new(exchange(cols, c, &chosen, &top))?;
        let (canon, sign) = s.canonicalize();
        out.add_signed(canon, sign, &minus_one);
    }
    Ok(out)
}

/// Adds `coeff · η` applied to columns `c, c+1` of `t` into `out`.
fn symmetrized_exchange(
    t: &ColumnTabloid,
    c: usize,
    l: usize,
    coeff: &BigRational,
    diagonal: &BigRational,
    out: &mut TabloidVector,
) {
    let cols = t.columns();
    out.add_term(t.clone(), coeff * diagonal);
    let neg = -coeff.clone();
    let right_subsets = combinations(cols[c + 1].len(), l);
    for left in combinations(cols[c].len(), l) {
        for right in &right_subsets {
            let (canon, sign) = Tableau::new(exchange(cols, c, &left, right))
                .expect("exchange keeps a valid filling")
                .canonicalize();
            out.add_signed(canon, sign, &neg);
        }
    }
}

fn require_two_column(shape: &Partition) -> Result<(usize, usize)> {
    if !shape.is_two_column() {
        return Err(GarnirError::InvalidShape(format!(
            "η_ℓ acts on two-column shapes, got {shape}"
        )));
    }
    let cols = shape.column_lengths();
    Ok((cols[0], cols[1]))
}

/// `η_ℓ(v)` on `M^(n,m)'`, straight from the exchange definition.
pub fn eta_apply(v: &TabloidVector, l: usize) -> Result<TabloidVector> {
    let (_, m) = require_two_column(v.shape())?;
    if l == 0 || l > m {
        return Err(GarnirError::InvalidParameters(format!(
            "exchange size {l} outside 1..={m}"
        )));
    }
    let diagonal = BigRational::from_integer(binomial(m, l as i64));
    let mut out = TabloidVector::zero(v.shape().clone());
    for (t, x) in v.iter() {
        symmetrized_exchange(t, 0, l, x, &diagonal, &mut out);
    }
    Ok(out)
}

/// `h_{c,ℓ_c}(v)` for every adjacent pair, one output vector per spec.
pub fn h_apply(v: &TabloidVector, specs: &[GarnirSpec]) -> Result<Vec<TabloidVector>> {
    let pairs = v.shape().num_columns().saturating_sub(1);
    if specs.len() != pairs {
        return Err(GarnirError::InvalidParameters(format!(
            "shape {} needs {pairs} specs, got {}",
            v.shape(),
            specs.len()
        )));
    }
    specs
        .iter()
        .enumerate()
        .map(|(k, spec)| {
            if spec.shape() != v.shape() || spec.column != k + 1 {
                return Err(GarnirError::InvalidParameters(format!(
                    "spec #{k} does not describe columns {}, {} of {}",
                    k + 1,
                    k + 2,
                    v.shape()
                )));
            }
            let (_, next) = spec.column_pair();
            let diagonal = BigRational::from_integer(binomial(next, spec.exchange as i64));
            let mut out = TabloidVector::zero(v.shape().clone());
            for (t, x) in v.iter() {
                symmetrized_exchange(t, k, spec.exchange, x, &diagonal, &mut out);
            }
            Ok(out)
        })
        .collect()
}

/// Square integer matrix of an operator on a tabloid basis; column `k` is
/// the image of basis vector `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    basis: TabloidBasis,
    columns: Vec<Vec<(usize, i64)>>,
}

impl PartialEq for TabloidBasis {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
    }
}

impl Eq for TabloidBasis {}

#[derive(Serialize)]
struct MatrixJson<'a> {
    shape: &'a Partition,
    dim: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl OperatorMatrix {
    fn from_columns(basis: TabloidBasis, mut columns: Vec<Vec<(usize, i64)>>) -> Self {
        for col in columns.iter_mut() {
            col.sort_unstable_by_key(|&(r, _)| r);
            col.retain(|&(_, x)| x != 0);
        }
        OperatorMatrix { basis, columns }
    }

    fn from_images<F>(basis: TabloidBasis, image: F) -> Result<Self>
    where
        F: Fn(&ColumnTabloid) -> Result<TabloidVector> + Sync,
    {
        let columns = (0..basis.len())
            .into_par_iter()
            .map(|k| {
                let img = image(basis.tabloid_at(k))?;
                img.iter()
                    .map(|(t, x)| {
                        let row = basis.index_of(t).expect("image lies in the same space");
                        let value = x
                            .to_integer()
                            .to_i64()
                            .filter(|_| x.is_integer())
                            .ok_or_else(|| {
                                GarnirError::Invariant(format!("non-integer entry {x}"))
                            })?;
                        Ok((row, value))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_columns(basis, columns))
    }

    pub fn basis(&self) -> &TabloidBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        let c = &self.columns[col];
        c.binary_search_by_key(&row, |&(r, _)| r)
            .map(|k| c[k].1)
            .unwrap_or(0)
    }

    /// Nonzero entries of column `col` as `(row, value)`, sorted by row.
    pub fn column(&self, col: usize) -> &[(usize, i64)] {
        &self.columns[col]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim()).map(|k| BigInt::from(self.get(k, k))).sum()
    }

    /// `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, x)| (r, c, x)))
    }

    /// One `row col value` line per nonzero entry, 0-based indices.
    pub fn to_triplet_text(&self) -> String {
        let mut s = String::new();
        for (r, c, x) in self.triplets() {
            writeln!(s, "{r} {c} {x}").unwrap();
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixJson {
            shape: self.basis.shape(),
            dim: self.dim(),
            entries: self.triplets().collect(),
        })
        .expect("plain data serializes")
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let mut rows: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); self.dim()];
        for (r, c, x) in self.triplets() {
            rows[r].insert(c, x);
        }
        ExactMatrix::from_sparse_integer_rows(
            self.dim(),
            rows.into_iter().map(|r| r.into_iter().collect()).collect(),
        )
    }
}

/// Sign of the off-diagonal entry `⟨η_ℓ(v_S), v_T⟩` when `S` and `T` differ in
/// exactly `ℓ` elements: `(-1)^(Σ(S∖T) + Σ(T∖S) + ℓ + 1)`.
fn exchange_sign(removed: &[usize], added: &[usize], l: usize) -> i64 {
    let total: usize = removed.iter().sum::<usize>() + added.iter().sum::<usize>() + l + 1;
    if total.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The coefficient of `v_T` in `η_ℓ(v_S)`, from the first columns `S`, `T` alone.
pub fn closed_form_entry(n: usize, m: usize, l: usize, s: &[usize], t: &[usize]) -> i64 {
    debug_assert!(s.len() == n && t.len() == n);
    if s == t {
        return binomial(m, l as i64)
            .to_i64()
            .expect("operator entries fit in i64");
    }
    let removed: Vec<usize> = s
        .iter()
        .copied()
        .filter(|x| t.binary_search(x).is_err())
        .collect();
    if removed.len() != l {
        return 0;
    }
    let added: Vec<usize> = t
        .iter()
        .copied()
        .filter(|x| s.binary_search(x).is_err())
        .collect();
    exchange_sign(&removed, &added, l)
}

fn check_two_column_params(n: usize, m: usize, l: usize) -> Result<()> {
    if !(1 <= l && l <= m && m <= n) {
        return Err(GarnirError::InvalidParameters(format!(
            "need 1 <= l <= m <= n, got n={n}, m={m}, l={l}"
        )));
    }
    Ok(())
}

/// `C(a, b)` for `a <= universe`, as a flat `u64` Pascal triangle.
fn pascal_u64(universe: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(universe + 1);
    for a in 0..=universe {
        let mut row = vec![1u64; a + 1];
        for b in 1..a {
            row[b] = rows[a - 1][b - 1] + rows[a - 1][b];
        }
        rows.push(row);
    }
    rows
}

/// Position of the sorted `k`-subset `set` of `1..=universe` in lexicographic order.
fn lex_subset_rank(set: &[usize], universe: usize, pascal: &[Vec<u64>]) -> usize {
    let k = set.len();
    let choose = |a: usize, b: usize| if b > a { 0 } else { pascal[a][b] };
    let mut rank = 0u64;
    let mut prev = 0;
    for (j, &x) in set.iter().enumerate() {
        for v in prev + 1..x {
            rank += choose(universe - v, k - j - 1);
        }
        prev = x;
    }
    rank as usize
}

/// The `η_ℓ` matrix on `M^(n,m)'` from the closed-form entry rule; no
/// tableau is exchanged or re-sorted, and rows are located by ranking the
/// new first column among all `n`-subsets.
pub fn eta_matrix_closed_form(n: usize, m: usize, l: usize) -> Result<OperatorMatrix> {
    check_two_column_params(n, m, l)?;
    if n + m > 62 {
        return Err(GarnirError::InvalidParameters(format!(
            "n + m = {} is too large to index",
            n + m
        )));
    }
    let basis = TabloidBasis::two_column(n, m)?;
    let diag = binomial(m, l as i64)
        .to_i64()
        .ok_or_else(|| GarnirError::InvalidParameters("C(m,l) exceeds i64".into()))?;
    let pascal = pascal_u64(n + m);
    let out_subsets = combinations(n, l);
    let in_subsets = combinations(m, l);
    let columns = (0..basis.len())
        .into_par_iter()
        .map(|k| {
            let cols = basis.tabloid_at(k).columns();
            let (first, second) = (&cols[0], &cols[1]);
            let mut col = Vec::with_capacity(1 + out_subsets.len() * in_subsets.len());
            col.push((k, diag));
            let mut removed = Vec::with_capacity(l);
            let mut added = Vec::with_capacity(l);
            let mut new_first = Vec::with_capacity(n);
            for out_pos in &out_subsets {
                removed.clear();
                removed.extend(out_pos.iter().map(|&p| first[p]));
                let kept: Vec<usize> = first
                    .iter()
                    .copied()
                    .filter(|x| removed.binary_search(x).is_err())
                    .collect();
                for in_pos in &in_subsets {
                    added.clear();
                    added.extend(in_pos.iter().map(|&p| second[p]));
                    new_first.clear();
                    let (mut a, mut b) = (0, 0);
                    while a < kept.len() || b < added.len() {
                        if b == added.len() || (a < kept.len() && kept[a] < added[b]) {
                            new_first.push(kept[a]);
                            a += 1;
                        } else {
                            new_first.push(added[b]);
                            b += 1;
                        }
                    }
                    let row = lex_subset_rank(&new_first, n + m, &pascal);
                    col.push((row, exchange_sign(&removed, &added, l)));
                }
            }
            col
        })
        .collect();
    Ok(OperatorMatrix::from_columns(basis, columns))
}

/// The `η_ℓ` matrix assembled column by column from [`eta_apply`].
pub fn eta_matrix_by_exchange(n: usize, m: usize, l: usize) -> Result<OperatorMatrix> {
    check_two_column_params(n, m, l)?;
    let basis = TabloidBasis::two_column(n, m)?;
    OperatorMatrix::from_images(basis, |t| {
        eta_apply(&TabloidVector::basis_vector(t.clone()), l)
    })
}

/// The matrix of `h_{c,ℓ_c}` on the full tabloid basis of the spec's shape,
/// with integer arithmetic throughout.
pub fn h_matrix(spec: &GarnirSpec) -> Result<OperatorMatrix> {
    let basis = TabloidBasis::new(spec.shape());
    let (_, next) = spec.column_pair();
    let l = spec.exchange;
    let diag = binomial(next, l as i64)
        .to_i64()
        .ok_or_else(|| GarnirError::InvalidParameters("C(m,l) exceeds i64".into()))?;
    let c = spec.column - 1;
    let left_subsets = combinations(basis.shape().column_lengths()[c], l);
    let right_subsets = combinations(next, l);
    let columns = (0..basis.len())
        .into_par_iter()
        .map(|k| {
            let cols = basis.tabloid_at(k).columns();
            let mut col = vec![(k, diag)];
            for left in &left_subsets {
                for right in &right_subsets {
                    let mut swapped = exchange(cols, c, left, right);
                    let sign = sort_sign(&swapped[c]) * sort_sign(&swapped[c + 1]);
                    swapped[c].sort_unstable();
                    swapped[c + 1].sort_unstable();
                    let row = basis
                        .index_of(&ColumnTabloid::from_sorted(swapped))
                        .expect("exchange stays in the basis");
                    col.push((row, -i64::from(sign)));
                }
            }
            col
        })
        .collect();
    Ok(OperatorMatrix::from_columns(basis, columns))
}

/// [`h_matrix`] assembled from [`h_apply`]-style rational tabloid vectors.
pub fn h_matrix_by_exchange(spec: &GarnirSpec) -> Result<OperatorMatrix> {
    let basis = TabloidBasis::new(spec.shape());
    let (_, next) = spec.column_pair();
    let diagonal = BigRational::from_integer(binomial(next, spec.exchange as i64));
    let c = spec.column - 1;
    OperatorMatrix::from_images(basis, |t| {
        let mut out = TabloidVector::zero(spec.shape().clone());
        symmetrized_exchange(
            t,
            c,
            spec.exchange,
            &BigRational::one(),
            &diagonal,
            &mut out,
        );
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabloid::{permute, Permutation};
    use num_traits::Zero;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn tab(cols: Vec<Vec<usize>>) -> ColumnTabloid {
        ColumnTabloid::new(cols).unwrap()
    }

    #[test]
    fn worked_example_eta2_on_seven_letters() {
        let t = tab(vec![vec![1, 2, 3, 4], vec![5, 6, 7]]);
        let v = TabloidVector::basis_vector(t.clone());
        let img = eta_apply(&v, 2).unwrap();
        assert_eq!(img.coefficient(&t), q(3));
        // 18 exchanges, each landing on a different tabloid with coefficient ±1.
        assert_eq!(img.support_len(), 19);
        assert!(img
            .iter()
            .filter(|(s, _)| **s != t)
            .all(|(_, x)| *x == q(1) || *x == q(-1)));

        // First listed term: rows 1,2 of both columns exchanged, giving
        // columns (5,6,3,4 | 1,2,7); sorting the first column is an even
        // permutation, so the term enters with coefficient -1.
        let s = tab(vec![vec![3, 4, 5, 6], vec![1, 2, 7]]);
        assert_eq!(img.coefficient(&s), q(-1));
    }

    #[test]
    fn smallest_shape_matrix() {
        // M^(1,1)' has basis v_{1}, v_{2}; exchanging the two entries of
        // (1|2) gives (2|1) = v_{2}.
        let h = eta_matrix_by_exchange(1, 1, 1).unwrap();
        assert_eq!(h.dim(), 2);
        let dense: Vec<Vec<i64>> = (0..2)
            .map(|r| (0..2).map(|c| h.get(r, c)).collect())
            .collect();
        assert_eq!(dense, vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(eta_matrix_closed_form(1, 1, 1).unwrap(), h);
    }

    #[test]
    fn eta_of_zero_is_zero() {
        let shape = Partition::two_column(3, 2).unwrap();
        assert!(eta_apply(&TabloidVector::zero(shape), 1).unwrap().is_zero());
    }

    #[test]
    fn eta_rejects_bad_exchange_sizes() {
        let v = TabloidVector::basis_vector(tab(vec![vec![1, 2], vec![3]]));
        assert!(eta_apply(&v, 0).is_err());
        assert!(eta_apply(&v, 2).is_err());
        let three = TabloidVector::basis_vector(tab(vec![vec![1, 3], vec![2], vec![4]]));
        assert!(eta_apply(&three, 1).is_err());
        assert!(eta_matrix_closed_form(2, 3, 1).is_err());
    }

    #[test]
    fn closed_form_three_by_three() {
        let h = eta_matrix_closed_form(2, 1, 1).unwrap();
        // basis v_{12}, v_{13}, v_{23}
        let dense: Vec<Vec<i64>> = (0..3)
            .map(|r| (0..3).map(|c| h.get(r, c)).collect())
            .collect();
        assert_eq!(dense, vec![vec![1, -1, 1], vec![-1, 1, -1], vec![1, -1, 1]]);
        assert_eq!(h, eta_matrix_by_exchange(2, 1, 1).unwrap());
    }

    #[test]
    fn closed_form_entry_cases() {
        assert_eq!(closed_form_entry(4, 3, 2, &[1, 2, 3, 4], &[1, 2, 3, 4]), 3);
        assert_eq!(closed_form_entry(4, 3, 2, &[1, 2, 3, 4], &[1, 2, 3, 5]), 0);
        // S∖T = {1,2}, T∖S = {5,6}: 1+2+5+6+2+1 = 17, odd.
        assert_eq!(closed_form_entry(4, 3, 2, &[1, 2, 3, 4], &[3, 4, 5, 6]), -1);
    }

    #[test]
    fn closed_form_entry_matches_builder_on_all_pairs() {
        for (n, m, l) in [(3, 2, 1), (3, 3, 2), (4, 2, 2)] {
            let h = eta_matrix_closed_form(n, m, l).unwrap();
            let b = h.basis();
            for s in 0..b.len() {
                for t in 0..b.len() {
                    let sf = &b.tabloid_at(s).columns()[0];
                    let tf = &b.tabloid_at(t).columns()[0];
                    assert_eq!(h.get(t, s), closed_form_entry(n, m, l, sf, tf));
                }
            }
        }
    }

    #[test]
    fn closed_form_equals_exchange_definition_small() {
        for n in 1..=5 {
            for m in 1..=n.min(9 - n) {
                for l in 1..=m {
                    assert_eq!(
                        eta_matrix_closed_form(n, m, l).unwrap(),
                        eta_matrix_by_exchange(n, m, l).unwrap(),
                        "n={n} m={m} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn diagonal_of_eight_seven_three() {
        let h = eta_matrix_closed_form(8, 7, 3).unwrap();
        assert_eq!(h.dim(), 6435);
        assert!((0..h.dim()).all(|k| h.get(k, k) == 35));
        assert_eq!(h.trace(), BigInt::from(35) * BigInt::from(6435));
    }

    #[test]
    fn column_support_bound() {
        for (n, m, l) in [(4, 3, 2), (5, 3, 3), (4, 4, 1)] {
            let h = eta_matrix_closed_form(n, m, l).unwrap();
            let bound = 1 + binomial(n, l as i64).to_usize().unwrap()
                * binomial(m, l as i64).to_usize().unwrap();
            for k in 0..h.dim() {
                // distinct exchanges always land on distinct tabloids
                assert_eq!(h.column(k).len(), bound);
            }
        }
    }

    #[test]
    fn garnir_relation_term_count() {
        let shape = Partition::from_column_lengths(&[4, 3]).unwrap();
        let t = Tableau::new(vec![vec![1, 2, 3, 4], vec![5, 6, 7]]).unwrap();
        let spec = GarnirSpec::new(&shape, 1, 2).unwrap();
        let g = garnir_relation(&t, &spec).unwrap();
        // 1 + C(4,2) terms, all on distinct tabloids here
        assert_eq!(g.support_len(), 7);
    }

    #[test]
    fn single_column_has_no_relation() {
        let shape = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(GarnirSpec::new(&shape, 1, 1).is_err());
        assert!(GarnirSpec::for_each_pair(&shape, &[]).unwrap().is_empty());
    }

    #[test]
    fn maximal_exchange_is_a_single_garnir_relation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (n, m) in [(2, 2), (3, 2), (4, 3), (5, 2)] {
            let shape = Partition::two_column(n, m).unwrap();
            let spec = GarnirSpec::new(&shape, 1, m).unwrap();
            for _ in 0..10 {
                let mut letters: Vec<usize> = (1..=n + m).collect();
                letters.shuffle(&mut rng);
                let t = Tableau::new(vec![letters[..n].to_vec(), letters[n..].to_vec()]).unwrap();
                let g = garnir_relation(&t, &spec).unwrap();
                let eta = eta_apply(&TabloidVector::from_tableau(&t), m).unwrap();
                assert_eq!(g, eta);
            }
        }
    }

    #[test]
    fn two_column_h_is_eta() {
        let shape = Partition::two_column(4, 2).unwrap();
        let specs = GarnirSpec::for_each_pair(&shape, &[2]).unwrap();
        let basis = TabloidBasis::new(&shape);
        for t in basis.iter().take(10) {
            let v = TabloidVector::basis_vector(t.clone());
            assert_eq!(
                h_apply(&v, &specs).unwrap(),
                vec![eta_apply(&v, 2).unwrap()]
            );
        }
    }

    #[test]
    fn h_with_single_exchanges_on_three_columns() {
        // λ' = (2,2,2): each h_{c,1}[t] is 2[t] minus the four single swaps
        // between columns c and c+1.
        let shape = Partition::from_column_lengths(&[2, 2, 2]).unwrap();
        let specs = GarnirSpec::for_each_pair(&shape, &[1, 1]).unwrap();
        let t = tab(vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
        let out = h_apply(&TabloidVector::basis_vector(t.clone()), &specs).unwrap();
        assert_eq!(out.len(), 2);

        let mut expected = TabloidVector::zero(shape.clone());
        expected.add_term(t.clone(), q(2));
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let mut cols = t.columns().to_vec();
            let tmp = cols[1][a];
            cols[1][a] = cols[2][b];
            cols[2][b] = tmp;
            let (s, sign) = Tableau::new(cols).unwrap().canonicalize();
            expected.add_term(s, q(-(sign as i64)));
        }
        assert_eq!(out[1], expected);
        assert!(out[0].iter().all(|(s, _)| s.columns()[2] == vec![5, 6]));
    }

    #[test]
    fn lex_rank_matches_basis_order() {
        for (n, m) in [(3, 2), (4, 4), (5, 1), (6, 3)] {
            let basis = TabloidBasis::two_column(n, m).unwrap();
            let pascal = pascal_u64(n + m);
            for (k, t) in basis.iter().enumerate() {
                assert_eq!(lex_subset_rank(&t.columns()[0], n + m, &pascal), k);
            }
        }
    }

    #[test]
    fn h_matrix_matches_exchange_assembly() {
        for parts in [
            vec![3, 2, 2],
            vec![2, 2, 1],
            vec![3, 3],
            vec![4, 2, 1],
            vec![3, 1, 1],
        ] {
            let shape = Partition::new(parts).unwrap();
            let cols = shape.column_lengths();
            for (c, &next) in cols.iter().enumerate().skip(1) {
                for l in 1..=next {
                    let spec = GarnirSpec::new(&shape, c, l).unwrap();
                    assert_eq!(
                        h_matrix(&spec).unwrap(),
                        h_matrix_by_exchange(&spec).unwrap(),
                        "{shape} c={c} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn h_apply_rejects_wrong_spec_count() {
        let shape = Partition::from_column_lengths(&[2, 2, 1]).unwrap();
        let v = TabloidVector::zero(shape.clone());
        let two = Partition::two_column(2, 2).unwrap();
        let specs = GarnirSpec::for_each_pair(&two, &[1]).unwrap();
        assert!(h_apply(&v, &specs).is_err());
        assert!(GarnirSpec::for_each_pair(&shape, &[1]).is_err());
        assert!(GarnirSpec::for_each_pair(&shape, &[1, 2]).is_err());
    }

    #[test]
    fn eta_commutes_with_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for (n, m, l) in [(3, 2, 1), (4, 3, 2), (3, 3, 3)] {
            let basis = TabloidBasis::two_column(n, m).unwrap();
            for _ in 0..10 {
                let mut images: Vec<usize> = (1..=n + m).collect();
                images.shuffle(&mut rng);
                let sigma = Permutation::new(images).unwrap();
                let v = TabloidVector::basis_vector(
                    basis.tabloid_at(rng.gen_range(0..basis.len())).clone(),
                );
                let lhs = eta_apply(&permute(&sigma, &v).unwrap(), l).unwrap();
                let rhs = permute(&sigma, &eta_apply(&v, l).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn triplet_and_json_export() {
        let h = eta_matrix_closed_form(2, 1, 1).unwrap();
        let text = h.to_triplet_text();
        assert_eq!(text.lines().count(), 9);
        assert!(text.starts_with("0 0 1\n1 0 -1\n2 0 1\n"));
        let json = h.to_json();
        assert_eq!(json["dim"], 3);
        assert_eq!(json["shape"], serde_json::json!([2, 1]));
        assert_eq!(json["entries"].as_array().unwrap().len(), 9);
        assert!(h.triplets().all(|(_, _, x)| !x.is_zero()));
    }
}
