//! Exact dense linear algebra over the rationals.
//!
//! The whole crate rides on this kernel: every rank, nullspace and dimension
//! statement downstream is a statement about matrices built here, and all of
//! them are exact. Entries are arbitrary-precision rationals
//! ([`num_rational::BigRational`]), which stay reduced after every operation,
//! so there is no tolerance anywhere: a vector is in the nullspace iff the
//! product is literally zero.
//!
//! Elimination is pivot-normalized Gaussian elimination with a deterministic
//! pivot rule (first nonzero entry per column), which makes [`RationalMatrix::rref`]
//! output reproducible. Inner loops skip zero entries; the Macaulay matrices
//! built by the polynomial layer are mostly zeros and this keeps them cheap.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: arbitrary-precision, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational from numerator/denominator. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "3/2", "-7" or "0" into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::ParseRational(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| err())?;
            let den: BigInt = den.trim().parse().map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| err())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Render a rational as "3/2" or "-7" (no slash for integers).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// Build from explicit rows. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer rows (tests and fixtures).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    /// Single-column matrix from a vector.
    pub fn column(v: Vec<Rat>) -> Self {
        let rows = v.len();
        RationalMatrix {
            rows,
            cols: 1,
            data: v,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    /// Matrix product. Panics on dimension mismatch (programmer error).
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for t in 0..self.cols {
                let a = self.entry(i, t);
                if a.is_zero() {
                    continue;
                }
                let b = other.entry(t, j);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "apply dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Stack `other` below `self`. Column counts must agree.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Keep only the listed rows, in order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self.entry(idx[i], j).clone())
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Pivot rule: first row with a nonzero entry in the current column.
    /// Pivot entries are normalized to 1 and cleared above and below, so the
    /// output is canonical for the row space.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.entry(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.entry(r, c).recip();
            if !inv.is_one() {
                m.scale_row(r, &inv, c);
            }
            for i in 0..m.rows {
                if i != r && !m.entry(i, c).is_zero() {
                    let factor = m.entry(i, c).clone();
                    m.sub_scaled_row(i, r, &factor, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        // Forward elimination only; cheaper than full rref.
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m.entry(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            for i in rank + 1..m.rows {
                if !m.entry(i, c).is_zero() {
                    let factor = m.entry(i, c) / m.entry(rank, c);
                    m.sub_scaled_row(i, rank, &factor, c);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right nullspace {v : Mv = 0}, as column vectors.
    ///
    /// Basis size is exactly `cols - rank`; each vector satisfies Mv = 0 with
    /// no tolerance. Vectors are ordered by their free column index.
    pub fn nullspace(&self) -> Vec<RationalMatrix> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -r.entry(row, free).clone();
            }
            basis.push(RationalMatrix::column(v));
        }
        basis
    }

    /// Exact determinant (square matrices only).
    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.entry(i, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.entry(c, c);
            for i in c + 1..n {
                if !m.entry(i, c).is_zero() {
                    let factor = m.entry(i, c) / m.entry(c, c);
                    m.sub_scaled_row(i, c, &factor, c);
                }
            }
        }
        det
    }

    /// Canonical basis of the row space: nonzero rows of the rref.
    pub fn row_space_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Row space of the vertical concatenation.
    pub fn row_space_sum(&self, other: &Self) -> Self {
        self.vstack(other).row_space_basis()
    }

    /// Intersection of the two row spaces (Zassenhaus block trick):
    /// row-reduce [A | A; B | 0] and read the right half of the rows whose
    /// left half vanished.
    pub fn row_space_intersection(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "intersection column mismatch");
        let n = self.cols;
        let block = Self::from_fn(self.rows + other.rows, 2 * n, |i, j| {
            if i < self.rows {
                self.entry(i, j % n).clone()
            } else if j < n {
                other.entry(i - self.rows, j).clone()
            } else {
                Rat::zero()
            }
        });
        let (r, pivots) = block.rref();
        let mut rows = Vec::new();
        for i in 0..pivots.len() {
            if r.row(i)[..n].iter().all(Zero::is_zero) {
                let tail = r.row(i)[n..].to_vec();
                if tail.iter().any(|x| !x.is_zero()) {
                    rows.push(tail);
                }
            }
        }
        if rows.is_empty() {
            Self::zeros(0, n)
        } else {
            Self::from_rows(rows)
        }
    }

    /// Do the two matrices span the same row space?
    pub fn row_spaces_equal(&self, other: &Self) -> bool {
        self.row_space_basis() == other.row_space_basis()
    }

    /// Require exact rank `expected`, or report the deficiency.
    pub fn require_rank(&self, expected: usize) -> Result<()> {
        let got = self.rank();
        if got == expected {
            Ok(())
        } else {
            Err(Error::RankDeficient { expected, got })
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Multiply row `i` by `factor`, touching only columns >= `from`.
    fn scale_row(&mut self, i: usize, factor: &Rat, from: usize) {
        let base = i * self.cols;
        for c in from..self.cols {
            let e = &mut self.data[base + c];
            if !e.is_zero() {
                *e *= factor;
            }
        }
    }

    /// row_i -= factor * row_src, touching only columns >= `from`.
    fn sub_scaled_row(&mut self, i: usize, src: usize, factor: &Rat, from: usize) {
        if factor.is_zero() {
            return;
        }
        for c in from..self.cols {
            let s = self.data[src * self.cols + c].clone();
            if s.is_zero() {
                continue;
            }
            let e = &mut self.data[i * self.cols + c];
            *e -= factor * s;
        }
    }
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rat).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse vector: (index, value) pairs, sorted by index, values nonzero.
pub(crate) type SparseVec = Vec<(usize, Rat)>;

pub(crate) fn sparse_sub_scaled(a: &SparseVec, b: &SparseVec, factor: &Rat) -> SparseVec {
    // a - factor * b, merging sorted index lists.
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) => match ia.cmp(ib) {
                std::cmp::Ordering::Less => {
                    out.push((*ia, va.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*ib, -(factor * vb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = va - factor * vb;
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                out.push((*ib, -(factor * vb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental echelon accumulator over sparse columns.
///
/// Feeds one column at a time and keeps a reduced set of pivot vectors keyed
/// by leading index. Supports rank streaming without materializing the full
/// matrix; used for the big Macaulay matrices whose columns are mostly unit
/// vectors.
#[derive(Default)]
pub(crate) struct SparseEchelon {
    // leading index -> vector with that leading index (leading coeff 1)
    basis: std::collections::BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduce `v` against the basis; return the (possibly zero) remainder.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((lead, lead_val)) = v.first().cloned() else {
                return v;
            };
            let Some(b) = self.basis.get(&lead) else {
                return v;
            };
            v = sparse_sub_scaled(&v, b, &lead_val);
        }
    }

    /// Insert a column; returns true when it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((lead, lead_val)) = v.first().cloned() else {
            return false;
        };
        if !lead_val.is_one() {
            let inv = lead_val.recip();
            for (_, x) in v.iter_mut() {
                *x *= &inv;
            }
        }
        self.basis.insert(lead, v);
        true
    }

    pub fn is_pivot(&self, index: usize) -> bool {
        self.basis.contains_key(&index)
    }

    /// Reduce `v` until no entry sits at a pivot index, so the remainder is
    /// supported purely on non-pivot coordinates.
    ///
    /// [`SparseEchelon::reduce`] only clears the leading entry; a remainder
    /// with a non-pivot lead can still hide pivot-index entries further in.
    /// Each subtraction here removes the first such entry and touches only
    /// larger indices, so the scan terminates.
    pub fn full_reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((idx, val)) = v
                .iter()
                .find(|(idx, _)| self.basis.contains_key(idx))
                .cloned()
            else {
                return v;
            };
            v = sparse_sub_scaled(&v, &self.basis[&idx], &val);
        }
    }
}

/// Echelon accumulator that remembers how each inserted column was reduced,
/// so columns that reduce to zero yield explicit nullspace combinations.
///
/// The invariant per basis entry (vec, combo) and per returned combination c
/// is: Σ_j c_j · column_j equals the stored vector (zero for returned
/// combinations). Column indices are the caller's insertion indices.
#[derive(Default)]
pub(crate) struct NullTrackingEchelon {
    basis: std::collections::BTreeMap<usize, (SparseVec, SparseVec)>,
}

impl NullTrackingEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Insert column number `col_index`; when it is dependent on earlier
    /// columns, return the nullspace combination it witnesses.
    pub fn insert(&mut self, column: SparseVec, col_index: usize) -> Option<SparseVec> {
        let mut vec = column;
        let mut combo: SparseVec = vec![(col_index, Rat::one())];
        loop {
            let Some((lead, lead_val)) = vec.first().cloned() else {
                return Some(combo);
            };
            let Some((bvec, bcombo)) = self.basis.get(&lead) else {
                if !lead_val.is_one() {
                    let inv = lead_val.recip();
                    for (_, x) in vec.iter_mut() {
                        *x *= &inv;
                    }
                    for (_, x) in combo.iter_mut() {
                        *x *= &inv;
                    }
                }
                self.basis.insert(lead, (vec, combo));
                return None;
            };
            vec = sparse_sub_scaled(&vec, bvec, &lead_val);
            combo = sparse_sub_scaled(&combo, bcombo, &lead_val);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_empty_matrix_is_zero() {
        assert_eq!(RationalMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_proportional_rows() {
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_identity_empty() {
        assert!(RationalMatrix::identity(2).nullspace().is_empty());
    }

    #[test]
    fn nullspace_one_one() {
        let m = RationalMatrix::from_int_rows(&[&[1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // proportional to (1, -1)
        assert_eq!(v.entry(0, 0) + v.entry(1, 0), Rat::zero());
        assert!(!v.is_zero());
    }

    #[test]
    fn nullspace_proportional_rows() {
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // proportional to (2, -1): v0 * 1 + v1 * 2 = 0
        assert_eq!(v.entry(0, 0) + &rat_int(2) * v.entry(1, 0), Rat::zero());
    }

    #[test]
    fn rref_identity() {
        let (r, pivots) = RationalMatrix::identity(4).rref();
        assert_eq!(r, RationalMatrix::identity(4));
        assert_eq!(pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = RationalMatrix::zeros(2, 3);
        let (r, pivots) = m.rref();
        assert!(r.is_zero());
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_hand_elimination() {
        let m = RationalMatrix::from_int_rows(&[&[2, 4], &[1, 3]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, RationalMatrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn determinant_2x2() {
        let m = RationalMatrix::from_int_rows(&[&[2, 4], &[1, 3]]);
        assert_eq!(m.determinant(), rat_int(2));
        let s = RationalMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant(), Rat::zero());
    }

    #[test]
    fn intersection_and_sum_of_row_spaces() {
        let a = RationalMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = RationalMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1]]);
        let cap = a.row_space_intersection(&b);
        assert_eq!(cap.rows(), 1);
        assert!(cap.row_spaces_equal(&RationalMatrix::from_int_rows(&[&[0, 1, 0]])));
        let sum = a.row_space_sum(&b);
        assert_eq!(sum.rank(), 3);
    }

    fn matrix_columns(m: &RationalMatrix) -> Vec<SparseVec> {
        (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m.entry(i, j).is_zero())
                    .map(|i| (i, m.entry(i, j).clone()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn null_tracking_echelon_finds_exact_kernel_combinations() {
        let m = RationalMatrix::from_int_rows(&[
            &[1, 2, 3, 0, 5],
            &[0, 1, 1, 1, 2],
            &[1, 3, 4, 1, 7],
        ]);
        let mut ech = NullTrackingEchelon::new();
        let mut combos = Vec::new();
        for (j, col) in matrix_columns(&m).into_iter().enumerate() {
            if let Some(combo) = ech.insert(col, j) {
                combos.push(combo);
            }
        }
        assert_eq!(ech.rank(), m.rank());
        assert_eq!(combos.len(), m.cols() - m.rank());
        for combo in combos {
            let mut v = vec![Rat::zero(); m.cols()];
            for (j, c) in combo {
                v[j] = c;
            }
            assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn full_reduce_clears_every_pivot_coordinate() {
        // Basis vector with a tail on another pivot index exercises the
        // rescan: e0+e2 and e2+e3 as columns, reduce e1+e0+e3.
        let mut ech = SparseEchelon::new();
        ech.insert(vec![(0, rat_int(1)), (2, rat_int(1))]);
        ech.insert(vec![(2, rat_int(1)), (3, rat_int(1))]);
        let reduced = ech.full_reduce(vec![(0, rat_int(1)), (1, rat_int(1)), (3, rat_int(1))]);
        for (idx, _) in &reduced {
            assert!(!ech.is_pivot(*idx));
        }
    }

    #[test]
    fn sparse_echelon_matches_dense_rank() {
        let m = RationalMatrix::from_int_rows(&[
            &[1, 2, 3, 1],
            &[2, 4, 6, 2],
            &[0, 1, 1, 0],
            &[1, 3, 4, 1],
        ]);
        let mut ech = SparseEchelon::new();
        for j in 0..m.cols() {
            let col: SparseVec = (0..m.rows())
                .filter(|&i| !m.entry(i, j).is_zero())
                .map(|i| (i, m.entry(i, j).clone()))
                .collect();
            ech.insert(col);
        }
        assert_eq!(ech.rank(), m.rank());
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..=12, 1usize..=12).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c).prop_map(move |vals| {
                RationalMatrix {
                    rows: r,
                    cols: c,
                    data: vals.into_iter().map(rat_int).collect(),
                }
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_equals_rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_plus_nullity_is_cols(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.nullspace().len(), m.cols());
        }

        #[test]
        fn nullspace_vectors_are_exact(m in small_matrix()) {
            for v in m.nullspace() {
                let prod = m.apply(&v.col(0));
                prop_assert!(prod.iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn rref_pivots_strictly_increase(m in small_matrix()) {
            let (_, pivots) = m.rref();
            prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn tracking_echelon_agrees_with_dense(m in small_matrix()) {
            let mut ech = NullTrackingEchelon::new();
            let mut nulls = 0;
            for (j, col) in matrix_columns(&m).into_iter().enumerate() {
                if let Some(combo) = ech.insert(col, j) {
                    nulls += 1;
                    let mut v = vec![Rat::zero(); m.cols()];
                    for (idx, c) in combo {
                        v[idx] = c;
                    }
                    prop_assert!(m.apply(&v).iter().all(Zero::is_zero));
                }
            }
            prop_assert_eq!(ech.rank(), m.rank());
            prop_assert_eq!(nulls, m.cols() - m.rank());
        }
    }
}
