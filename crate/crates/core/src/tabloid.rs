//! Column tabloids and the space `M^λ` they span.
//!
//! A tableau is stored column by column with entries `1..=n`. Swapping two
//! entries of a column negates the tabloid, so every tableau is equal to
//! `±` a unique column-strict one; [`Tableau::canonicalize`] is the only
//! place where that sign is computed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{GarnirError, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[k]` is the image of `k + 1`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(GarnirError::InvalidParameters(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(GarnirError::InvalidParameters(format!(
                "transposition ({a} {b}) outside 1..={n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i8 {
        sort_sign(&self.images)
    }
}

/// Sign of the permutation that sorts `word` (distinct entries), by inversion count.
pub(crate) fn sort_sign(word: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A filling of a Young diagram by `1..=n`, stored as columns (top to bottom).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
        if lengths.contains(&0) || !lengths.windows(2).all(|w| w[0] >= w[1]) {
            return Err(GarnirError::MalformedTableau(format!(
                "column lengths {lengths:?} are not a partition"
            )));
        }
        let n: usize = lengths.iter().sum();
        let mut seen = vec![false; n + 1];
        for &x in columns.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(GarnirError::MalformedTableau(format!(
                    "entries of {columns:?} are not exactly 1..={n}"
                )));
            }
            seen[x] = true;
        }
        let shape = Partition::from_column_lengths(&lengths)?;
        Ok(Tableau { shape, columns })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Sorts every column and returns the sign of the sorting permutation.
    pub fn canonicalize(&self) -> (ColumnTabloid, i8) {
        let mut sign = 1i8;
        let columns = self
            .columns
            .iter()
            .map(|col| {
                sign *= sort_sign(col);
                let mut sorted = col.clone();
                sorted.sort_unstable();
                sorted
            })
            .collect();
        (ColumnTabloid { columns }, sign)
    }
}

/// A column-strict tableau, the canonical representative of its column tabloid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct ColumnTabloid {
    columns: Vec<Vec<usize>>,
}

impl ColumnTabloid {
    /// Accepts only column-strict input; use [`Tableau::canonicalize`] otherwise.
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self> {
        let tableau = Tableau::new(columns)?;
        if !tableau
            .columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]))
        {
            return Err(GarnirError::MalformedTableau(format!(
                "{:?} is not column strict",
                tableau.columns
            )));
        }
        Ok(ColumnTabloid {
            columns: tableau.columns,
        })
    }

    /// Trusted constructor for callers that already sorted every column.
    pub(crate) fn from_sorted(columns: Vec<Vec<usize>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.windows(2).all(|w| w[0] < w[1])));
        ColumnTabloid { columns }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_tableau(&self) -> Tableau {
        Tableau {
            shape: Partition::from_column_lengths(&self.column_lengths())
                .expect("column-strict tabloid has a valid shape"),
            columns: self.columns.clone(),
        }
    }

    /// Relabels entries by `σ` and returns the canonical form with its sign.
    pub fn relabel(&self, sigma: &Permutation) -> (ColumnTabloid, i8) {
        let mut sign = 1i8;
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let mut img: Vec<usize> = col.iter().map(|&x| sigma.apply(x)).collect();
                sign *= sort_sign(&img);
                img.sort_unstable();
                img
            })
            .collect();
        (ColumnTabloid { columns }, sign)
    }
}

impl TryFrom<Vec<Vec<usize>>> for ColumnTabloid {
    type Error = GarnirError;

    fn try_from(columns: Vec<Vec<usize>>) -> Result<Self> {
        ColumnTabloid::new(columns)
    }
}

impl From<ColumnTabloid> for Vec<Vec<usize>> {
    fn from(t: ColumnTabloid) -> Self {
        t.columns
    }
}

impl fmt::Display for ColumnTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, col) in self.columns.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            for (j, x) in col.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// An element of `M^λ`: rational combination of canonical column tabloids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabloidVector {
    shape: Partition,
    terms: BTreeMap<ColumnTabloid, BigRational>,
}

impl TabloidVector {
    pub fn zero(shape: Partition) -> Self {
        TabloidVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_vector(t: ColumnTabloid) -> Self {
        let shape = t.to_tableau().shape;
        let mut v = TabloidVector::zero(shape);
        v.terms.insert(t, BigRational::one());
        v
    }

    /// `±[t]` for an arbitrary tableau.
    pub fn from_tableau(t: &Tableau) -> Self {
        let (canon, sign) = t.canonicalize();
        let mut v = TabloidVector::zero(t.shape.clone());
        v.add_term(canon, BigRational::from_integer(BigInt::from(sign)));
        v
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, t: &ColumnTabloid) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ColumnTabloid, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: ColumnTabloid, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `sign·coeff·[t]`.
    pub(crate) fn add_signed(&mut self, t: ColumnTabloid, sign: i8, coeff: &BigRational) {
        if sign < 0 {
            self.add_term(t, -coeff.clone());
        } else {
            self.add_term(t, coeff.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> TabloidVector {
        if c.is_zero() {
            return TabloidVector::zero(self.shape.clone());
        }
        TabloidVector {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, other: &TabloidVector) -> TabloidVector {
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), x.clone());
        }
        out
    }

    pub fn sub(&self, other: &TabloidVector) -> TabloidVector {
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), -x.clone());
        }
        out
    }

    /// Largest absolute coefficient, zero for the zero vector.
    pub fn max_abs_coefficient(&self) -> BigRational {
        self.terms
            .values()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

/// `σ·v`: relabels entries of every tabloid in the support.
pub fn permute(sigma: &Permutation, v: &TabloidVector) -> Result<TabloidVector> {
    if sigma.degree() != v.shape.size() {
        return Err(GarnirError::ActionMismatch {
            perm: sigma.degree(),
            shape: v.shape.size(),
        });
    }
    let mut out = TabloidVector::zero(v.shape.clone());
    for (t, x) in &v.terms {
        let (img, sign) = t.relabel(sigma);
        out.add_signed(img, sign, x);
    }
    Ok(out)
}

/// The column-strict tabloids of a shape, in lexicographic order of the
/// column-concatenated word, with an inverse index.
#[derive(Clone, Debug)]
pub struct TabloidBasis {
    shape: Partition,
    elements: Vec<ColumnTabloid>,
    index: HashMap<ColumnTabloid, usize>,
}

impl TabloidBasis {
    pub fn new(shape: &Partition) -> Self {
        let lengths = shape.column_lengths();
        let n = shape.size();
        let mut elements = Vec::new();
        let mut columns: Vec<Vec<usize>> = Vec::with_capacity(lengths.len());
        let available: Vec<usize> = (1..=n).collect();
        fill_columns(&lengths, &available, &mut columns, &mut elements);
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        TabloidBasis {
            shape: shape.clone(),
            elements,
            index,
        }
    }

    /// Basis `{v_T}` of `M^(n,m)'`, indexed by the `n`-subsets `T` of `[n+m]`
    /// in lexicographic order.
    pub fn two_column(n: usize, m: usize) -> Result<Self> {
        Ok(Self::new(&Partition::two_column(n, m)?))
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn tabloid_at(&self, k: usize) -> &ColumnTabloid {
        &self.elements[k]
    }

    pub fn index_of(&self, t: &ColumnTabloid) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ColumnTabloid> {
        self.elements.iter()
    }

    /// Coordinates of `v` in this basis.
    pub fn coordinates(&self, v: &TabloidVector) -> Result<Vec<BigRational>> {
        if v.shape != self.shape {
            return Err(GarnirError::InvalidShape(format!(
                "vector of shape {} in basis of shape {}",
                v.shape, self.shape
            )));
        }
        let mut out = vec![BigRational::zero(); self.len()];
        for (t, x) in v.iter() {
            let k = self
                .index_of(t)
                .expect("canonical tabloid of the right shape");
            out[k] = x.clone();
        }
        Ok(out)
    }

    pub fn vector(&self, coords: &[BigRational]) -> TabloidVector {
        let mut v = TabloidVector::zero(self.shape.clone());
        for (k, x) in coords.iter().enumerate() {
            v.add_term(self.elements[k].clone(), x.clone());
        }
        v
    }
}

fn fill_columns(
    lengths: &[usize],
    available: &[usize],
    columns: &mut Vec<Vec<usize>>,
    out: &mut Vec<ColumnTabloid>,
) {
    let depth = columns.len();
    if depth == lengths.len() {
        out.push(ColumnTabloid::from_sorted(columns.clone()));
        return;
    }
    for chosen in combinations(available.len(), lengths[depth]) {
        let col: Vec<usize> = chosen.iter().map(|&k| available[k]).collect();
        let rest: Vec<usize> = available
            .iter()
            .copied()
            .filter(|x| col.binary_search(x).is_err())
            .collect();
        columns.push(col);
        fill_columns(lengths, &rest, columns, out);
        columns.pop();
    }
}

/// All `k`-subsets of `0..n` as increasing index lists, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] != pos + n - k {
                break;
            }
        }
        cur[pos] += 1;
        for j in pos + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
