//! Dense row-major matrices over a scalar domain.
//!
//! Element access through `Index<(usize, usize)>` is 0-based. Operations that
//! take index sets or column numbers ([`Matrix::submatrix_select`],
//! [`Matrix::submatrix_delete`], ...) use 1-based indices, and every error
//! reports 1-based positions.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::{IntegralDomain, Ring};
use crate::signs::tuple_sign;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "construct",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if n == 0 || k == 0 {
            return Err(Error::EmptyMatrix { rows: n, cols: k });
        }
        let mut data = Vec::with_capacity(n * k);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::RaggedRows {
                    row: i + 1,
                    expected: k,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols: k,
            data,
        })
    }

    /// Builds a matrix from small integer rows. Panics on empty or ragged
    /// input; intended for literals.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| T::from_i64(v)).collect())
            .collect();
        Self::from_rows(rows).expect("integer literal matrix must be rectangular and nonempty")
    }

    /// Builds a matrix from a 0-based index function. Panics if either
    /// dimension is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "multiply",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self[(i, 0)].mul(&rhs[(0, j)]);
            for r in 1..self.cols {
                acc = acc.add(&self[(i, r)].mul(&rhs[(r, j)]));
            }
            acc
        }))
    }

    /// `A[I|J]`: rows `I` and columns `J`, both strictly increasing and 1-based.
    pub fn submatrix_select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        check_index_set(rows, self.rows)?;
        check_index_set(cols, self.cols)?;
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyMatrix {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        Ok(Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i] - 1, cols[j] - 1)].clone()
        }))
    }

    /// `A(I|J)`: strikes out rows `I` and columns `J` (1-based, any order).
    pub fn submatrix_delete(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let keep_rows = complement(rows, self.rows)?;
        let keep_cols = complement(cols, self.cols)?;
        if keep_rows.is_empty() || keep_cols.is_empty() {
            return Err(Error::EmptyMatrix {
                rows: keep_rows.len(),
                cols: keep_cols.len(),
            });
        }
        self.submatrix_select(&keep_rows, &keep_cols)
    }

    /// `X'`: appends a column of ones.
    pub fn augment_ones_column(&self) -> Self {
        let k = self.cols;
        Self::from_fn(self.rows, k + 1, |i, j| {
            if j < k {
                self[(i, j)].clone()
            } else {
                T::one()
            }
        })
    }

    /// `X''`: appends a column of ones, then the row `(0, ..., 0, 1)`.
    pub fn augment_ones_and_zero_row(&self) -> Self {
        let (n, k) = self.shape();
        Self::from_fn(n + 1, k + 1, |i, j| match (i < n, j < k) {
            (true, true) => self[(i, j)].clone(),
            (_, false) => T::one(),
            (false, true) => T::zero(),
        })
    }

    /// `(Xᵗ A X)` for a skew-symmetric `A`, computing only the strict upper
    /// triangle and filling the rest by skew symmetry.
    pub fn skew_congruence(&self, skew: &Self) -> Result<Self> {
        if !skew.is_square() || skew.rows != self.rows {
            return Err(Error::DimensionMismatch {
                op: "skew congruence",
                left: skew.shape(),
                right: self.shape(),
            });
        }
        let k = self.cols;
        let ax = skew.multiply(self)?;
        let mut data = vec![T::zero(); k * k];
        for i in 0..k {
            for j in i + 1..k {
                let mut acc = self[(0, i)].mul(&ax[(0, j)]);
                for r in 1..self.rows {
                    acc = acc.add(&self[(r, i)].mul(&ax[(r, j)]));
                }
                data[j * k + i] = acc.neg();
                data[i * k + j] = acc;
            }
        }
        Ok(Matrix {
            rows: k,
            cols: k,
            data,
        })
    }

    /// Square, `aᵗ = −a`, and an explicitly zero diagonal. Comparison goes
    /// through [`Ring::approx_eq`].
    pub fn is_skew_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        (0..n).all(|i| {
            self[(i, i)].approx_eq(&T::zero())
                && (i + 1..n).all(|j| self[(i, j)].approx_eq(&self[(j, i)].scale_sign(-1)))
        })
    }

    pub fn swap_columns(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.data.swap(i * self.cols + a, i * self.cols + b);
        }
        out
    }

    pub(crate) fn into_data(self) -> Vec<T> {
        self.data
    }
}

impl<T: IntegralDomain> Matrix<T> {
    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "determinant",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            let Some(p) = choose_pivot((k..n).map(|i| &m[i * n + k])) else {
                return Ok(T::zero());
            };
            let p = p + k;
            if p != k {
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[i * n + j]
                        .mul(&m[k * n + k])
                        .sub(&m[i * n + k].mul(&m[k * n + j]));
                    m[i * n + j] = if k == 0 { t } else { t.exact_div(&prev)? };
                }
            }
            prev = m[k * n + k].clone();
        }
        let det = m[n * n - 1].clone();
        Ok(if negate { det.scale_sign(-1) } else { det })
    }
}

/// Picks a pivot among `candidates`: the first nonzero one for exact
/// domains, the largest in magnitude for approximate ones. Returns its
/// offset.
pub(crate) fn choose_pivot<'a, T: Ring>(candidates: impl Iterator<Item = &'a T>) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (offset, v) in candidates.enumerate() {
        if v.is_zero() {
            continue;
        }
        match v.pivot_weight() {
            None => return Some(offset),
            Some(w) => {
                if best.is_none_or(|(_, bw)| w > bw) {
                    best = Some((offset, w));
                }
            }
        }
    }
    best.map(|(offset, _)| offset)
}

/// `D⁽ⁿ⁾` with entries `(−1)^{i+j} · sgn(i, j)`.
pub fn build_d_matrix<T: Ring>(n: usize) -> Matrix<T> {
    Matrix::from_fn(n, n, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let parity = if (i + j) % 2 == 0 { 1 } else { -1 };
        T::from_i64(parity * i64::from(tuple_sign(&[i, j])))
    })
}

fn check_index_set(idx: &[usize], bound: usize) -> Result<()> {
    if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > bound) {
        return Err(Error::IndexOutOfRange { index: bad, bound });
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedIndices(idx.to_vec()));
    }
    Ok(())
}

fn complement(idx: &[usize], bound: usize) -> Result<Vec<usize>> {
    let mut drop = vec![false; bound + 1];
    for &i in idx {
        if i == 0 || i > bound {
            return Err(Error::IndexOutOfRange { index: i, bound });
        }
        drop[i] = true;
    }
    Ok((1..=bound).filter(|&i| !drop[i]).collect())
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ApproxReal, ExactInteger, ExactRational};
    use proptest::prelude::*;

    type IMat = Matrix<ExactInteger>;

    fn m(rows: &[&[i64]]) -> IMat {
        Matrix::from_i64_rows(rows)
    }

    /// Cofactor expansion along the first row; independent of Bareiss.
    fn det_cofactor<T: Ring>(a: &Matrix<T>) -> T {
        let n = a.rows();
        if n == 1 {
            return a[(0, 0)].clone();
        }
        let mut acc = T::zero();
        for j in 0..n {
            let minor = a.submatrix_delete(&[1], &[j + 1]).unwrap();
            let term = a[(0, j)].mul(&det_cofactor(&minor));
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IMat> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(|(n, k)| {
            proptest::collection::vec(-9i64..=9, n * k).prop_map(move |v| {
                Matrix::new(n, k, v.into_iter().map(ExactInteger::from_i64).collect()).unwrap()
            })
        })
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert!(matches!(
            IMat::new(0, 3, vec![]),
            Err(Error::EmptyMatrix { .. })
        ));
        assert!(matches!(
            IMat::new(2, 2, vec![ExactInteger::from_i64(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
        let ragged = vec![
            vec![ExactInteger::from_i64(1), ExactInteger::from_i64(2)],
            vec![ExactInteger::from_i64(3)],
        ];
        assert_eq!(
            IMat::from_rows(ragged),
            Err(Error::RaggedRows {
                row: 2,
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            IMat::from_rows(vec![]),
            Err(Error::EmptyMatrix { .. })
        ));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(m(&[&[1], &[2], &[3]]).transpose(), m(&[&[1, 2, 3]]));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            m(&[&[1, 2]]).multiply(&m(&[&[3], &[4]])).unwrap(),
            m(&[&[11]])
        );
        let a = m(&[&[1, -2], &[0, 5], &[7, 3]]);
        assert_eq!(IMat::identity(3).multiply(&a).unwrap(), a);
        assert!(matches!(
            a.multiply(&a),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn submatrix_examples() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.submatrix_select(&[1, 2], &[3]).unwrap(), m(&[&[3], &[6]]));
        assert_eq!(a.submatrix_select(&[1, 2], &[1, 2, 3]).unwrap(), a);
        assert_eq!(a.submatrix_select(&[2], &[1, 2]).unwrap(), m(&[&[4, 5]]));
        assert_eq!(
            a.submatrix_select(&[3], &[1]),
            Err(Error::IndexOutOfRange { index: 3, bound: 2 })
        );
        assert_eq!(
            a.submatrix_select(&[2, 1], &[1]),
            Err(Error::UnsortedIndices(vec![2, 1]))
        );
        assert!(matches!(
            a.submatrix_select(&[], &[1]),
            Err(Error::EmptyMatrix { .. })
        ));

        let b = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(
            b.submatrix_delete(&[2], &[2]).unwrap(),
            b.submatrix_select(&[1, 3], &[1, 3]).unwrap()
        );
        assert_eq!(b.submatrix_delete(&[], &[]).unwrap(), b);
        let c = m(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            c.submatrix_delete(&[1, 2], &[]),
            Err(Error::EmptyMatrix { .. })
        ));
        assert_eq!(
            c.submatrix_delete(&[0], &[]),
            Err(Error::IndexOutOfRange { index: 0, bound: 2 })
        );
    }

    #[test]
    fn augmentations() {
        assert_eq!(
            m(&[&[1], &[2]]).augment_ones_column(),
            m(&[&[1, 1], &[2, 1]])
        );
        assert_eq!(
            m(&[&[5]]).augment_ones_and_zero_row(),
            m(&[&[5, 1], &[0, 1]])
        );

        let x = m(&[&[3, -1], &[4, 2], &[0, 7]]);
        let xp = x.augment_ones_column();
        assert_eq!(xp.shape(), (3, 3));
        assert_eq!(xp.submatrix_delete(&[], &[3]).unwrap(), x);

        let xpp = x.augment_ones_and_zero_row();
        assert_eq!(xpp.shape(), (4, 3));
        assert_eq!(xpp.row(3), m(&[&[0, 0, 1]]).row(0));
        assert_eq!(xpp.submatrix_delete(&[4], &[3]).unwrap(), x);
        assert_eq!(xpp.column(2), vec![ExactInteger::from_i64(1); 4]);
    }

    #[test]
    fn d_matrix_examples() {
        assert_eq!(build_d_matrix::<ExactInteger>(1), m(&[&[0]]));
        // Entrywise evaluation of (−1)^{i+j}·sgn(i,j): d12 = (−1)^3·(+1) = −1.
        for n in 2..=5usize {
            let d = build_d_matrix::<ExactInteger>(n);
            for i in 1..=n {
                for j in 1..=n {
                    let parity = if (i + j) % 2 == 0 { 1 } else { -1 };
                    let s = match i.cmp(&j) {
                        std::cmp::Ordering::Less => 1,
                        std::cmp::Ordering::Greater => -1,
                        std::cmp::Ordering::Equal => 0,
                    };
                    assert_eq!(d[(i - 1, j - 1)], ExactInteger::from_i64(parity * s));
                }
            }
        }
        assert_eq!(build_d_matrix::<ExactInteger>(2), m(&[&[0, -1], &[1, 0]]));
        assert_eq!(
            build_d_matrix::<ExactInteger>(3),
            m(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]])
        );
    }

    #[test]
    fn skew_checks() {
        assert!(build_d_matrix::<ExactInteger>(4).is_skew_symmetric());
        assert!(!m(&[&[0, 1], &[1, 0]]).is_skew_symmetric());
        assert!(!m(&[&[1, 1], &[-1, 0]]).is_skew_symmetric());
        assert!(!m(&[&[0, 1, 2]]).is_skew_symmetric());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m(&[&[7]]).determinant().unwrap(), ExactInteger::from_i64(7));
        assert_eq!(
            m(&[&[1, 2], &[3, 4]]).determinant().unwrap(),
            ExactInteger::from_i64(-2)
        );
        assert_eq!(
            m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
                .determinant()
                .unwrap(),
            ExactInteger::from_i64(1)
        );
        assert_eq!(
            m(&[&[1, 2], &[2, 4]]).determinant().unwrap(),
            ExactInteger::zero()
        );
        assert!(m(&[&[1, 2]]).determinant().is_err());
        let f: Matrix<ApproxReal> = Matrix::from_i64_rows(&[[2, 1], [1, 3]]);
        assert!(f.determinant().unwrap().approx_eq(&ApproxReal(5.0)));
    }

    proptest! {
        #[test]
        fn transpose_is_involution(a in arb_matrix(6, 6)) {
            prop_assert_eq!(a.transpose().transpose(), a);
        }

        #[test]
        fn transpose_reverses_products(
            (a, b) in (1usize..5, 1usize..5, 1usize..5).prop_flat_map(|(n, r, k)| {
                let gen = |rows: usize, cols: usize| proptest::collection::vec(-9i64..=9, rows * cols)
                    .prop_map(move |v| IMat::new(rows, cols, v.into_iter().map(ExactInteger::from_i64).collect()).unwrap());
                (gen(n, r), gen(r, k))
            })
        ) {
            let lhs = a.multiply(&b).unwrap().transpose();
            let rhs = b.transpose().multiply(&a.transpose()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn congruence_by_d_is_skew(x in arb_matrix(8, 6)) {
            let d = build_d_matrix::<ExactInteger>(x.rows());
            let full = x.transpose().multiply(&d).unwrap().multiply(&x).unwrap();
            prop_assert!(full.is_skew_symmetric());
            prop_assert_eq!(x.skew_congruence(&d).unwrap(), full);
        }

        #[test]
        fn delete_is_select_of_complement(
            a in arb_matrix(6, 6),
            row_mask in any::<u8>(),
            col_mask in any::<u8>(),
        ) {
            let (n, k) = a.shape();
            let del_r: Vec<usize> = (1..=n).filter(|i| row_mask & (1 << (i - 1)) != 0).collect();
            let del_c: Vec<usize> = (1..=k).filter(|j| col_mask & (1 << (j - 1)) != 0).collect();
            let keep_r: Vec<usize> = (1..=n).filter(|i| !del_r.contains(i)).collect();
            let keep_c: Vec<usize> = (1..=k).filter(|j| !del_c.contains(j)).collect();
            let deleted = a.submatrix_delete(&del_r, &del_c);
            if keep_r.is_empty() || keep_c.is_empty() {
                prop_assert!(deleted.is_err());
            } else {
                prop_assert_eq!(deleted.unwrap(), a.submatrix_select(&keep_r, &keep_c).unwrap());
            }
        }

        #[test]
        fn d_matrix_is_antisymmetric(n in 1usize..12) {
            let d = build_d_matrix::<ExactInteger>(n);
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(d[(i, j)].clone(), d[(j, i)].neg());
                }
            }
        }

        #[test]
        fn bareiss_matches_cofactor(a in (1usize..6).prop_flat_map(|n| arb_matrix(n, n).prop_filter("square", |a| a.is_square()))) {
            prop_assert_eq!(a.determinant().unwrap(), det_cofactor(&a));
            let r = a.map(|v| ExactRational::from(v.clone()));
            prop_assert_eq!(r.determinant().unwrap(), ExactRational::from(det_cofactor(&a)));
        }
    }
}
